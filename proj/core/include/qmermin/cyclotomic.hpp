#pragma once

// Exact arithmetic in Z[a], a = exp(2 pi i / 9).
//
// Elements are stored on the power basis 1, a, ..., a^5 of the ninth
// cyclotomic field; the minimal polynomial x^6 + x^3 + 1 gives
// a^6 = -a^3 - 1. Every 6-coefficient vector is canonical, so equality is
// coefficient-wise. omega = a^3 is the primitive cube root of unity.

#include <array>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>

namespace qmermin {

__extension__ typedef __int128 Int;

/// Power of a: the value a^e with e reduced mod 9.
class Phase {
 public:
  constexpr Phase() = default;
  constexpr explicit Phase(int exponent) : e_(normalize(exponent)) {}

  static constexpr Phase one() { return Phase(0); }
  /// omega^j = a^(3j)
  static constexpr Phase omega(int j) { return Phase(3 * j); }

  constexpr int exponent() const { return e_; }
  constexpr bool isCubeRoot() const { return e_ % 3 == 0; }

  constexpr Phase operator*(Phase o) const { return Phase(e_ + o.e_); }
  constexpr Phase& operator*=(Phase o) { return *this = *this * o; }
  constexpr Phase inverse() const { return Phase(-e_); }
  constexpr Phase pow(int n) const { return Phase(e_ * (n % 9)); }

  constexpr auto operator<=>(const Phase&) const = default;

 private:
  static constexpr int normalize(int e) { return ((e % 9) + 9) % 9; }
  int e_ = 0;
};

class Cyclotomic {
 public:
  static constexpr int kDegree = 6;
  using Coeffs = std::array<Int, kDegree>;

  constexpr Cyclotomic() = default;
  constexpr explicit Cyclotomic(const Coeffs& c) : c_(c) {}
  Cyclotomic(std::initializer_list<Int> c);

  static Cyclotomic integer(Int n);
  static Cyclotomic from(Phase p);
  static Cyclotomic alphaPow(int e) { return from(Phase(e)); }
  static Cyclotomic omegaPow(int j) { return from(Phase::omega(j)); }

  /// Canonical form of sum_j raw[j] a^j for any number of raw coefficients.
  /// Exponents are folded mod 9 first, then a^6..a^8 are rewritten with
  /// a^6 = -a^3 - 1. Throws ArithmeticOverflow instead of wrapping.
  static Cyclotomic reduce(std::span<const Int> raw);

  const Coeffs& coeffs() const { return c_; }
  Int coeff(int j) const { return c_.at(j); }

  bool isZero() const;
  /// Rational integer (only the a^0 coefficient is nonzero).
  std::optional<Int> asInteger() const;
  bool isReal() const { return conj() == *this; }

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator*(Phase p) const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic& operator*=(Phase p) { return *this = *this * p; }

  Cyclotomic pow(unsigned n) const;

  /// Exact division by a rational integer; throws std::domain_error when a
  /// coefficient is not divisible.
  Cyclotomic divExact(Int d) const;

  /// Complex conjugate: a^j -> a^(9-j).
  Cyclotomic conj() const;

  /// a * conj(a). Always real; rational whenever a lies in Z[omega] times a unit.
  Cyclotomic normSquared() const;

  std::complex<double> toComplex() const;

  /// "c0 + c1*a + ..." with zero terms omitted; "0" for zero.
  std::string str() const;

  bool operator==(const Cyclotomic&) const = default;

 private:
  Coeffs c_{};
};

Cyclotomic conj(const Cyclotomic& a);
Cyclotomic normSquared(const Cyclotomic& a);
std::complex<double> toComplex(const Cyclotomic& a);

namespace checked {
Int add(Int a, Int b);
Int sub(Int a, Int b);
Int mul(Int a, Int b);
}  // namespace checked

std::string toString(Int v);

}  // namespace qmermin
