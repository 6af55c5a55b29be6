#pragma once

// Eisenstein integers a + b*omega. Every HV sum of cube-root phases lives here,
// and |a + b*omega|^2 = a^2 - ab + b^2 is an exact integer.

#include "qmermin/cyclotomic.hpp"

namespace qmermin::detail {

template <typename T>
struct Eisenstein {
  T a = 0;
  T b = 0;

  Eisenstein operator+(const Eisenstein& o) const { return {a + o.a, b + o.b}; }
  Eisenstein& operator+=(const Eisenstein& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  Eisenstein scaled(T s) const { return {a * s, b * s}; }

  /// Multiplication by omega^j: omega (a + b omega) = -b + (a - b) omega.
  Eisenstein rotated(int j) const {
    Eisenstein v = *this;
    for (int i = 0; i < ((j % 3) + 3) % 3; ++i) v = {-v.b, v.a - v.b};
    return v;
  }

  T norm() const { return a * a - a * b + b * b; }

  Cyclotomic toCyclotomic() const { return Cyclotomic({static_cast<Int>(a), 0, 0, static_cast<Int>(b)}); }

  bool operator==(const Eisenstein&) const = default;
};

/// Overflow-checked variant used where values can grow past 64 bits.
struct CheckedEisenstein {
  Int a = 0;
  Int b = 0;

  CheckedEisenstein operator+(const CheckedEisenstein& o) const {
    return {checked::add(a, o.a), checked::add(b, o.b)};
  }
  CheckedEisenstein scaled(Int s) const { return {checked::mul(a, s), checked::mul(b, s)}; }
  CheckedEisenstein rotated(int j) const {
    CheckedEisenstein v = *this;
    for (int i = 0; i < ((j % 3) + 3) % 3; ++i) v = {checked::sub(0, v.b), checked::sub(v.a, v.b)};
    return v;
  }
  Int norm() const { return checked::add(checked::sub(checked::mul(a, a), checked::mul(a, b)), checked::mul(b, b)); }
  Cyclotomic toCyclotomic() const { return Cyclotomic({a, 0, 0, b}); }
};

}  // namespace qmermin::detail
