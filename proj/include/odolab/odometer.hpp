#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "odolab/error.hpp"
#include "odolab/supernatural.hpp"

namespace odolab {

/// Image of an odometer element in Z/s_m Z.
struct OdometerPoint {
  std::size_t level = 0;
  Natural residue = 0;

  friend bool operator==(const OdometerPoint&, const OdometerPoint&) = default;
};

inline OdometerPoint make_point(const Scale& scale, std::size_t level, Natural residue) {
  if (residue >= scale.s(level))
    fail(ErrorKind::OutOfRange, "residue " + std::to_string(residue) + " not below s_" + std::to_string(level));
  return {level, residue};
}

/// Reduction to a coarser level m' <= m.
inline OdometerPoint project(const Scale& scale, const OdometerPoint& x, std::size_t coarser) {
  if (coarser > x.level) fail(ErrorKind::LevelMismatch, "projection must go to a coarser level");
  return {coarser, x.residue % scale.s(coarser)};
}

inline OdometerPoint add(const Scale& scale, const OdometerPoint& x, const OdometerPoint& y) {
  if (x.level != y.level)
    fail(ErrorKind::LevelMismatch, "levels " + std::to_string(x.level) + " and " + std::to_string(y.level));
  const Natural mod = scale.s(x.level);
  const auto sum = static_cast<unsigned __int128>(x.residue % mod) + (y.residue % mod);
  return {x.level, static_cast<Natural>(sum % mod)};
}

/// The odometer shift x -> x + 1.
inline OdometerPoint phi(const Scale& scale, const OdometerPoint& x) {
  return add(scale, x, {x.level, 1 % scale.s(x.level)});
}

/// Mixed-radix digits x_1..x_M with 0 <= x_j < s_j / s_{j-1}.
struct DigitVector {
  std::vector<Natural> digits;

  friend bool operator==(const DigitVector&, const DigitVector&) = default;
};

inline DigitVector to_digits(Natural x, const Scale& scale) {
  if (x >= scale.top())
    fail(ErrorKind::OutOfRange, std::to_string(x) + " is not below s_M = " + std::to_string(scale.top()));
  DigitVector out;
  out.digits.reserve(scale.depth());
  for (std::size_t j = 1; j <= scale.depth(); ++j) {
    out.digits.push_back(x % scale.radix(j));
    x /= scale.radix(j);
  }
  return out;
}

inline Natural from_digits(const DigitVector& v, const Scale& scale) {
  if (v.digits.size() > scale.depth()) fail(ErrorKind::OutOfRange, "more digits than scale levels");
  Natural x = 0;
  for (std::size_t j = 1; j <= v.digits.size(); ++j) {
    if (v.digits[j - 1] >= scale.radix(j))
      fail(ErrorKind::OutOfRange, "digit " + std::to_string(j) + " exceeds its radix");
    x += v.digits[j - 1] * scale.s(j - 1);
  }
  return x;
}

/// n(x): the n with s_{n-1} <= x < s_n, and n(0) = 0.
inline std::size_t n_of(Natural x, const Scale& scale) {
  if (x == 0) return 0;
  for (std::size_t n = 1; n <= scale.depth(); ++n)
    if (x < scale.s(n)) return n;
  fail(ErrorKind::OutOfRange, std::to_string(x) + " is not below s_M = " + std::to_string(scale.top()));
}

/// gamma(x) = x mod s_{n(x)-1}, defined for x >= 1.
inline Natural gamma(Natural x, const Scale& scale) {
  if (x == 0) fail(ErrorKind::GammaOfZero, "gamma is defined only for x >= 1");
  return x % scale.s(n_of(x, scale) - 1);
}

/// [x, gamma(x), gamma^2(x), ..., 0]; the orbit of 0 is [0].
inline std::vector<Natural> gamma_orbit(Natural x, const Scale& scale) {
  if (x >= scale.top())
    fail(ErrorKind::OutOfRange, std::to_string(x) + " is not below s_M = " + std::to_string(scale.top()));
  std::vector<Natural> orbit{x};
  while (x != 0) {
    x = gamma(x, scale);
    orbit.push_back(x);
  }
  return orbit;
}

}  // namespace odolab
