#pragma once

// Local qutrit observables X, Y, W as exact monomial 3x3 matrices, and
// tensor-product words acting on computational basis states.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qmermin/cyclotomic.hpp"

namespace qmermin {

enum class Basis : std::uint8_t { X = 0, Y = 1, W = 2 };

/// Rotation of the basis away from X in units of 2 pi / 9.
constexpr int rotationUnits(Basis b) { return static_cast<int>(b); }
char basisChar(Basis b);

/// Which W matrix to use. Conjugation is Z^{2/3} X Z^{-2/3}; Displayed puts the
/// exceptional phase on column 0 instead of column 2.
enum class WVariant { Conjugation, Displayed };

/// Monomial 3x3 matrix: column n has its single entry a^phase(n) at row perm(n).
struct LocalOperator {
  std::array<std::uint8_t, 3> perm{0, 1, 2};
  std::array<Phase, 3> phases{};

  static LocalOperator identity() { return {}; }
  static LocalOperator shift();
  /// diag(a^e0, a^e1, a^e2)
  static LocalOperator diagonal(std::array<Phase, 3> diag);

  /// Matrix product (*this) * rhs.
  LocalOperator operator*(const LocalOperator& rhs) const;
  LocalOperator inverse() const;

  /// Dense 3x3 form, row-major.
  std::array<std::array<Cyclotomic, 3>, 3> dense() const;

  bool operator==(const LocalOperator&) const = default;
};

/// Z^{m/3} = diag(1, a^m, a^2m), the rotation by m units of 2 pi / 9.
LocalOperator rotation(int units);

/// X is the cyclic shift |n> -> |n+1>. Y and W are built by conjugating X
/// with rotation(1) and rotation(2).
LocalOperator localMatrix(Basis label, WVariant variant = WVariant::Conjugation);

class ObservableWord {
 public:
  ObservableWord() = default;
  explicit ObservableWord(std::vector<Basis> labels);

  /// Parses a string over {X, Y, W}; the leftmost symbol is qutrit 1.
  static ObservableWord parse(std::string_view text);

  std::size_t size() const { return labels_.size(); }
  Basis operator[](std::size_t i) const { return labels_[i]; }
  const std::vector<Basis>& labels() const { return labels_; }
  int totalUnits() const { return totalUnits_; }
  int count(Basis b) const;
  bool usesW() const { return count(Basis::W) > 0; }

  std::string str() const;

  bool operator==(const ObservableWord& o) const { return labels_ == o.labels_; }
  bool operator<(const ObservableWord& o) const { return str() < o.str(); }

 private:
  std::vector<Basis> labels_;
  int totalUnits_ = 0;
};

using BasisState = std::vector<std::uint8_t>;

struct WordAction {
  Phase phase;
  BasisState image;
};

/// Monomial action of a tensor word on |n_1 ... n_N>.
WordAction applyWord(const ObservableWord& word, std::span<const std::uint8_t> state,
                     WVariant variant = WVariant::Conjugation);

/// Sparse 3^N x 3^N monomial matrix; leftmost qutrit is the most significant
/// base-3 digit of the index.
class MonomialMatrix {
 public:
  MonomialMatrix() = default;
  static MonomialMatrix identity(std::size_t dim);
  static MonomialMatrix fromLocal(const LocalOperator& op);

  std::size_t dim() const { return row_.size(); }
  std::size_t row(std::size_t column) const { return row_[column]; }
  Phase entry(std::size_t column) const { return phase_[column]; }

  MonomialMatrix operator*(const MonomialMatrix& rhs) const;
  /// Kronecker product, (*this) on the more significant digits.
  MonomialMatrix kron(const MonomialMatrix& rhs) const;

  bool operator==(const MonomialMatrix&) const = default;

 private:
  std::vector<std::size_t> row_;
  std::vector<Phase> phase_;
};

inline constexpr std::size_t kMaxDenseQutrits = 8;

/// Kronecker product of the local matrices. Throws GuardViolation for N > 8.
MonomialMatrix denseMatrix(const ObservableWord& word, WVariant variant = WVariant::Conjugation);

std::size_t basisIndex(std::span<const std::uint8_t> state);
BasisState basisState(std::size_t index, std::size_t n);

}  // namespace qmermin
