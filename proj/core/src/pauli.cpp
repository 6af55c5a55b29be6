#include "qmermin/pauli.hpp"

#include <algorithm>
#include <numeric>

#include "qmermin/errors.hpp"

namespace qmermin {

char basisChar(Basis b) {
  switch (b) {
    case Basis::X: return 'X';
    case Basis::Y: return 'Y';
    case Basis::W: return 'W';
  }
  return '?';
}

LocalOperator LocalOperator::shift() {
  LocalOperator op;
  op.perm = {1, 2, 0};
  return op;
}

LocalOperator LocalOperator::diagonal(std::array<Phase, 3> diag) {
  LocalOperator op;
  op.phases = diag;
  return op;
}

LocalOperator LocalOperator::operator*(const LocalOperator& rhs) const {
  LocalOperator out;
  for (std::size_t n = 0; n < 3; ++n) {
    const auto mid = rhs.perm[n];
    out.perm[n] = perm[mid];
    out.phases[n] = rhs.phases[n] * phases[mid];
  }
  return out;
}

LocalOperator LocalOperator::inverse() const {
  LocalOperator out;
  for (std::uint8_t n = 0; n < 3; ++n) {
    out.perm[perm[n]] = n;
    out.phases[perm[n]] = phases[n].inverse();
  }
  return out;
}

std::array<std::array<Cyclotomic, 3>, 3> LocalOperator::dense() const {
  std::array<std::array<Cyclotomic, 3>, 3> m{};
  for (std::size_t n = 0; n < 3; ++n) m[perm[n]][n] = Cyclotomic::from(phases[n]);
  return m;
}

LocalOperator rotation(int units) {
  return LocalOperator::diagonal({Phase(0), Phase(units), Phase(2 * units)});
}

LocalOperator localMatrix(Basis label, WVariant variant) {
  const LocalOperator x = LocalOperator::shift();
  if (label == Basis::W && variant == WVariant::Displayed) {
    LocalOperator w = x;
    w.phases = {Phase(2 - 6), Phase(2), Phase(2)};
    return w;
  }
  const LocalOperator r = rotation(rotationUnits(label));
  return r * x * r.inverse();
}

ObservableWord::ObservableWord(std::vector<Basis> labels) : labels_(std::move(labels)) {
  totalUnits_ = std::accumulate(labels_.begin(), labels_.end(), 0,
                                [](int acc, Basis b) { return acc + rotationUnits(b); });
}

ObservableWord ObservableWord::parse(std::string_view text) {
  std::vector<Basis> labels;
  labels.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case 'X': labels.push_back(Basis::X); break;
      case 'Y': labels.push_back(Basis::Y); break;
      case 'W': labels.push_back(Basis::W); break;
      default: throw InputError(std::string("invalid basis label '") + ch + "' in word \"" + std::string(text) + "\"");
    }
  }
  return ObservableWord(std::move(labels));
}

int ObservableWord::count(Basis b) const {
  return static_cast<int>(std::count(labels_.begin(), labels_.end(), b));
}

std::string ObservableWord::str() const {
  std::string s;
  s.reserve(labels_.size());
  for (Basis b : labels_) s.push_back(basisChar(b));
  return s;
}

WordAction applyWord(const ObservableWord& word, std::span<const std::uint8_t> state, WVariant variant) {
  if (state.size() != word.size()) throw InputError("word and basis state lengths differ");
  const std::array<LocalOperator, 3> local{localMatrix(Basis::X, variant), localMatrix(Basis::Y, variant),
                                           localMatrix(Basis::W, variant)};
  WordAction out{Phase::one(), BasisState(state.size())};
  for (std::size_t i = 0; i < state.size(); ++i) {
    const std::uint8_t n = state[i];
    if (n > 2) throw InputError("basis index out of range");
    const LocalOperator& op = local[static_cast<std::size_t>(word[i])];
    out.image[i] = op.perm[n];
    out.phase *= op.phases[n];
  }
  return out;
}

MonomialMatrix MonomialMatrix::identity(std::size_t dim) {
  MonomialMatrix m;
  m.row_.resize(dim);
  std::iota(m.row_.begin(), m.row_.end(), std::size_t{0});
  m.phase_.assign(dim, Phase::one());
  return m;
}

MonomialMatrix MonomialMatrix::fromLocal(const LocalOperator& op) {
  MonomialMatrix m;
  m.row_.assign(op.perm.begin(), op.perm.end());
  m.phase_.assign(op.phases.begin(), op.phases.end());
  return m;
}

MonomialMatrix MonomialMatrix::operator*(const MonomialMatrix& rhs) const {
  MonomialMatrix out;
  out.row_.resize(rhs.dim());
  out.phase_.resize(rhs.dim());
  for (std::size_t c = 0; c < rhs.dim(); ++c) {
    const std::size_t mid = rhs.row_[c];
    out.row_[c] = row_[mid];
    out.phase_[c] = rhs.phase_[c] * phase_[mid];
  }
  return out;
}

MonomialMatrix MonomialMatrix::kron(const MonomialMatrix& rhs) const {
  MonomialMatrix out;
  const std::size_t d = dim() * rhs.dim();
  out.row_.resize(d);
  out.phase_.resize(d);
  for (std::size_t a = 0; a < dim(); ++a) {
    for (std::size_t b = 0; b < rhs.dim(); ++b) {
      const std::size_t col = a * rhs.dim() + b;
      out.row_[col] = row_[a] * rhs.dim() + rhs.row_[b];
      out.phase_[col] = phase_[a] * rhs.phase_[b];
    }
  }
  return out;
}

MonomialMatrix denseMatrix(const ObservableWord& word, WVariant variant) {
  if (word.size() > kMaxDenseQutrits) {
    throw GuardViolation("dense matrix limited to " + std::to_string(kMaxDenseQutrits) + " qutrits, got " +
                         std::to_string(word.size()));
  }
  MonomialMatrix m = MonomialMatrix::identity(1);
  for (Basis b : word.labels()) m = m.kron(MonomialMatrix::fromLocal(localMatrix(b, variant)));
  return m;
}

std::size_t basisIndex(std::span<const std::uint8_t> state) {
  std::size_t idx = 0;
  for (auto n : state) idx = idx * 3 + n;
  return idx;
}

BasisState basisState(std::size_t index, std::size_t n) {
  BasisState s(n);
  for (std::size_t i = n; i-- > 0;) {
    s[i] = static_cast<std::uint8_t>(index % 3);
    index /= 3;
  }
  return s;
}

}  // namespace qmermin
