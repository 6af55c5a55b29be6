#include "qmermin/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qmermin/errors.hpp"

namespace qmermin {

namespace checked {

Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("cyclotomic coefficient overflow in addition");
  return r;
}

Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("cyclotomic coefficient overflow in subtraction");
  return r;
}

Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("cyclotomic coefficient overflow in multiplication");
  return r;
}

}  // namespace checked

std::string toString(Int v) {
  if (v == 0) return "0";
  // The most negative value cannot be negated; handle digits on the negative side.
  const bool negative = v < 0;
  std::string digits;
  while (v != 0) {
    int d = static_cast<int>(v % 10);
    digits.push_back(static_cast<char>('0' + (d < 0 ? -d : d)));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Cyclotomic::Cyclotomic(std::initializer_list<Int> c) {
  *this = reduce(std::span<const Int>(c.begin(), c.size()));
}

Cyclotomic Cyclotomic::integer(Int n) {
  Coeffs c{};
  c[0] = n;
  return Cyclotomic(c);
}

Cyclotomic Cyclotomic::from(Phase p) {
  const int e = p.exponent();
  Coeffs c{};
  if (e < kDegree) {
    c[e] = 1;
  } else {
    // a^e = -a^(e-3) - a^(e-6) for e in 6..8
    c[e - 3] = -1;
    c[e - 6] = -1;
  }
  return Cyclotomic(c);
}

Cyclotomic Cyclotomic::reduce(std::span<const Int> raw) {
  std::array<Int, 9> folded{};
  for (std::size_t j = 0; j < raw.size(); ++j) {
    folded[j % 9] = checked::add(folded[j % 9], raw[j]);
  }
  for (int j = 8; j >= kDegree; --j) {
    folded[j - 3] = checked::sub(folded[j - 3], folded[j]);
    folded[j - 6] = checked::sub(folded[j - 6], folded[j]);
    folded[j] = 0;
  }
  Coeffs c{};
  std::copy_n(folded.begin(), kDegree, c.begin());
  return Cyclotomic(c);
}

bool Cyclotomic::isZero() const {
  return std::all_of(c_.begin(), c_.end(), [](Int v) { return v == 0; });
}

std::optional<Int> Cyclotomic::asInteger() const {
  for (int j = 1; j < kDegree; ++j) {
    if (c_[j] != 0) return std::nullopt;
  }
  return c_[0];
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  Coeffs c{};
  for (int j = 0; j < kDegree; ++j) c[j] = checked::add(c_[j], o.c_[j]);
  return Cyclotomic(c);
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  Coeffs c{};
  for (int j = 0; j < kDegree; ++j) c[j] = checked::sub(c_[j], o.c_[j]);
  return Cyclotomic(c);
}

Cyclotomic Cyclotomic::operator-() const { return Cyclotomic() - *this; }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  std::array<Int, 2 * kDegree - 1> raw{};
  for (int i = 0; i < kDegree; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < kDegree; ++j) {
      if (o.c_[j] == 0) continue;
      raw[i + j] = checked::add(raw[i + j], checked::mul(c_[i], o.c_[j]));
    }
  }
  return reduce(raw);
}

Cyclotomic Cyclotomic::operator*(Phase p) const {
  // Shift the coefficients by the exponent and fold; cheaper than a full product.
  std::array<Int, kDegree + 8> raw{};
  for (int j = 0; j < kDegree; ++j) raw[j + p.exponent()] = c_[j];
  return reduce(raw);
}

Cyclotomic Cyclotomic::pow(unsigned n) const {
  Cyclotomic result = integer(1);
  Cyclotomic base = *this;
  while (n != 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n != 0) base *= base;
  }
  return result;
}

Cyclotomic Cyclotomic::divExact(Int d) const {
  if (d == 0) throw std::domain_error("division by zero");
  Coeffs c{};
  for (int j = 0; j < kDegree; ++j) {
    if (c_[j] % d != 0) throw std::domain_error("cyclotomic value not divisible by " + toString(d));
    c[j] = c_[j] / d;
  }
  return Cyclotomic(c);
}

Cyclotomic Cyclotomic::conj() const {
  std::array<Int, 9> raw{};
  raw[0] = c_[0];
  for (int j = 1; j < kDegree; ++j) raw[9 - j] = c_[j];
  return reduce(raw);
}

Cyclotomic Cyclotomic::normSquared() const { return *this * conj(); }

std::complex<double> Cyclotomic::toComplex() const {
  std::complex<double> sum = 0.0;
  for (int j = 0; j < kDegree; ++j) {
    const double angle = 2.0 * std::numbers::pi * j / 9.0;
    sum += static_cast<double>(c_[j]) * std::polar(1.0, angle);
  }
  return sum;
}

std::string Cyclotomic::str() const {
  std::string out;
  for (int j = 0; j < kDegree; ++j) {
    const Int v = c_[j];
    if (v == 0) continue;
    const bool negative = v < 0;
    const Int mag = negative ? -v : v;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (j == 0) {
      out += toString(mag);
    } else {
      if (mag != 1) out += toString(mag) + "*";
      out += j == 1 ? "a" : "a^" + std::to_string(j);
    }
  }
  return out.empty() ? "0" : out;
}

Cyclotomic conj(const Cyclotomic& a) { return a.conj(); }
Cyclotomic normSquared(const Cyclotomic& a) { return a.normSquared(); }
std::complex<double> toComplex(const Cyclotomic& a) { return a.toComplex(); }

}  // namespace qmermin
