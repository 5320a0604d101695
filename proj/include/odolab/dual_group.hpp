#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "odolab/error.hpp"
#include "odolab/rational.hpp"
#include "odolab/supernatural.hpp"

namespace odolab {

/// The root of unity e^{2 pi i k/s}, kept as the reduced fraction k/s in [0, 1).
/// The identity is 0/1 and the order of the element is its denominator.
class DualElement {
 public:
  DualElement() = default;

  Natural numerator() const { return k_; }
  Natural denominator() const { return s_; }
  Natural order() const { return s_; }
  bool is_identity() const { return s_ == 1; }

  /// Canonical order: by order, then numerator.
  friend std::strong_ordering operator<=>(const DualElement& a, const DualElement& b) {
    if (auto c = a.s_ <=> b.s_; c != 0) return c;
    return a.k_ <=> b.k_;
  }
  friend bool operator==(const DualElement&, const DualElement&) = default;

 private:
  friend DualElement make_root(std::int64_t k, Natural s);
  DualElement(Natural k, Natural s) : k_(k), s_(s) {}

  Natural k_ = 0;
  Natural s_ = 1;
};

/// Reduces (k mod s)/s.
inline DualElement make_root(std::int64_t k, Natural s) {
  if (s == 0) fail(ErrorKind::OutOfRange, "root of unity needs a positive denominator");
  const auto mod = static_cast<__int128>(s);
  const auto r = static_cast<Natural>(((static_cast<__int128>(k) % mod) + mod) % mod);
  if (r == 0) return {0, 1};
  const Natural g = std::gcd(r, s);
  return {r / g, s / g};
}

inline DualElement root_from_natural(Natural k, Natural s) {
  if (s == 0) fail(ErrorKind::OutOfRange, "root of unity needs a positive denominator");
  k %= s;
  if (k == 0) return make_root(0, 1);
  const Natural g = std::gcd(k, s);
  return make_root(static_cast<std::int64_t>(k / g), s / g);
}

inline Natural order(const DualElement& z) { return z.order(); }

inline DualElement mul(const DualElement& a, const DualElement& b) {
  const Natural s = std::lcm(a.denominator(), b.denominator());
  const auto k = static_cast<unsigned __int128>(a.numerator()) * (s / a.denominator()) +
                 static_cast<unsigned __int128>(b.numerator()) * (s / b.denominator());
  return root_from_natural(static_cast<Natural>(k % s), s);
}

inline DualElement inv(const DualElement& z) {
  return root_from_natural(z.denominator() - z.numerator(), z.denominator());
}

inline DualElement pow(const DualElement& z, std::int64_t n) {
  const Natural s = z.denominator();
  const auto mod = static_cast<__int128>(s);
  const auto reduced = static_cast<Natural>(((static_cast<__int128>(n) % mod) + mod) % mod);
  const auto k = static_cast<unsigned __int128>(z.numerator()) * reduced;
  return root_from_natural(static_cast<Natural>(k % s), s);
}

/// Smallest m with order(z) | s_m; NotInGroup when no level of the scale contains z.
inline std::size_t level_of(const DualElement& z, const Scale& scale) {
  for (std::size_t m = 0; m <= scale.depth(); ++m)
    if (scale.s(m) % z.order() == 0) return m;
  fail(ErrorKind::NotInGroup, "order " + std::to_string(z.order()) + " does not divide s_M = " + std::to_string(scale.top()));
}

/// z = e^{2 pi i j/s_m} with 0 < j < s_m and s_m/s_{m-1} not dividing j; identity is (0, 0).
struct ScaleForm {
  std::size_t level = 0;
  Natural j = 0;

  friend bool operator==(const ScaleForm&, const ScaleForm&) = default;
};

inline ScaleForm scale_form(const DualElement& z, const Scale& scale) {
  const std::size_t m = level_of(z, scale);
  if (m == 0) return {0, 0};
  return {m, z.numerator() * (scale.s(m) / z.order())};
}

/// G_m = { e^{2 pi i j/s_m} : 0 <= j < s_m } in canonical order.
inline std::vector<DualElement> enumerate_subgroup(const Scale& scale, std::size_t m) {
  const Natural size = scale.s(m);
  std::vector<DualElement> out;
  out.reserve(size);
  for (Natural j = 0; j < size; ++j) out.push_back(root_from_natural(j, size));
  std::sort(out.begin(), out.end());
  return out;
}

/// z^x as a complex number. Exact for orders 1, 2 and 4; cos/sin otherwise.
inline Complex eval_char(const DualElement& z, std::int64_t x) {
  const Natural s = z.order();
  const auto mod = static_cast<__int128>(s);
  const auto xr = static_cast<Natural>(((static_cast<__int128>(x) % mod) + mod) % mod);
  const auto phase = static_cast<Natural>((static_cast<unsigned __int128>(z.numerator()) * xr) % s);
  if (phase == 0) return {1.0, 0.0};
  if (4 % s == 0) {
    switch (phase * (4 / s)) {
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(s);
  return {std::cos(angle), std::sin(angle)};
}

/// z^x as an exact Gaussian rational; only orders dividing 4 are representable.
inline ExactComplex eval_char_exact(const DualElement& z, std::int64_t x) {
  if (4 % z.order() != 0)
    fail(ErrorKind::NotExactlyRepresentable, "character of order " + std::to_string(z.order()) + " is irrational");
  const Complex v = eval_char(z, x);
  return {Rational(static_cast<int>(v.real())), Rational(static_cast<int>(v.imag()))};
}

}  // namespace odolab
