#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "odolab/error.hpp"
#include "odolab/level_function.hpp"
#include "odolab/odometer.hpp"

namespace odolab {

/// An element of K_0(C(Z_S)) = C(Z_S, Z): an integer-valued level function.
using K0Class = IntFunction;

/// Coefficients f_(x) of f = sum_x f_(x) 1_(x); zero coefficients are never stored.
struct K0Coeffs {
  std::map<Natural, std::int64_t> coeffs;

  friend bool operator==(const K0Coeffs&, const K0Coeffs&) = default;
};

/// Phi = sum_y phi_(y) e_(y), a finitely supported element of Hom(C(Z_S, Z), Z).
struct KHomomorphism {
  std::map<Natural, std::int64_t> coeffs;

  friend bool operator==(const KHomomorphism&, const KHomomorphism&) = default;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) fail(ErrorKind::OutOfRange, "integer overflow");
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) fail(ErrorKind::OutOfRange, "integer overflow");
  return out;
}

inline void drop_zeros(std::map<Natural, std::int64_t>& m) {
  std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
}

}  // namespace detail

/// The clopen set {z : s_n | z - x}.
struct IndicatorRef {
  std::size_t n = 0;
  Natural x = 0;

  friend bool operator==(const IndicatorRef&, const IndicatorRef&) = default;
};

/// 1_(n,x) materialized at `target_level` >= n.
inline K0Class indicator(const Scale& scale, std::size_t n, Natural x, std::size_t target_level) {
  if (n > target_level || target_level > scale.depth())
    fail(ErrorKind::OutOfRange, "indicator level " + std::to_string(n) + " cannot be materialized at level " + std::to_string(target_level));
  const Natural modulus = scale.s(n);
  if (x >= modulus) fail(ErrorKind::OutOfRange, std::to_string(x) + " is not below s_" + std::to_string(n));
  return K0Class::generate(scale, target_level, [&](Natural z) { return std::int64_t{z % modulus == x}; });
}

/// 1_(n,x) = sum_{l < s_{n+1}/s_n} 1_(n+1, x + l s_n).
inline std::vector<IndicatorRef> refine(const Scale& scale, const IndicatorRef& ref) {
  if (ref.n >= scale.depth()) fail(ErrorKind::ScaleTooShallow, "cannot refine past the deepest level");
  if (ref.x >= scale.s(ref.n)) fail(ErrorKind::OutOfRange, "indicator offset out of range");
  std::vector<IndicatorRef> out;
  for (Natural l = 0; l < scale.radix(ref.n + 1); ++l) out.push_back({ref.n + 1, ref.x + l * scale.s(ref.n)});
  return out;
}

/// The free generator 1_(x) = 1_(n(x), x); 1_(0) is the constant 1.
inline K0Class basis_indicator(const Scale& scale, Natural x, std::size_t target_level) {
  return indicator(scale, n_of(x, scale), x, target_level);
}

/// Unique expansion f = sum_x f_(x) 1_(x), peeled in increasing x: the value of the
/// residual at x is f_(x) because 1_(x') vanishes at x for every x' > x.
inline K0Coeffs decompose(const K0Class& f) {
  const Scale& scale = f.scale();
  std::vector<std::int64_t> residual = f.values();
  K0Coeffs out;
  for (Natural x = 0; x < residual.size(); ++x) {
    const std::int64_t c = residual[x];
    if (c == 0) continue;
    out.coeffs[x] = c;
    const Natural modulus = scale.s(n_of(x, scale));
    for (Natural z = x; z < residual.size(); z += modulus) residual[z] = detail::checked_add(residual[z], -c);
  }
  return out;
}

inline K0Coeffs decompose(const ExactFunction& f) { return decompose(to_integer(f)); }

/// sum_x c_(x) 1_(x) at `target_level`.
inline K0Class recompose(const K0Coeffs& c, const Scale& scale, std::size_t target_level) {
  const Natural size = scale.s(target_level);
  std::vector<std::int64_t> values(size, 0);
  for (const auto& [x, coeff] : c.coeffs) {
    if (x >= size) fail(ErrorKind::OutOfRange, "generator " + std::to_string(x) + " lies beyond level " + std::to_string(target_level));
    const Natural modulus = scale.s(n_of(x, scale));
    for (Natural z = x; z < size; z += modulus) values[z] = detail::checked_add(values[z], coeff);
  }
  return K0Class(scale, target_level, std::move(values));
}

/// delta_z = e_(z) + e_(gamma(z)) + ... + e_(0).
inline KHomomorphism delta_to_e(Natural z, const Scale& scale) {
  KHomomorphism out;
  for (Natural y : gamma_orbit(z, scale)) out.coeffs[y] += 1;
  return out;
}

/// e_(z) = delta_z - delta_{gamma(z)}; for z = 0 the subtracted term is absent.
struct DeltaDifference {
  Natural plus = 0;
  std::optional<Natural> minus;

  friend bool operator==(const DeltaDifference&, const DeltaDifference&) = default;
};

inline DeltaDifference e_to_delta(Natural z, const Scale& scale) {
  if (z >= scale.top()) fail(ErrorKind::OutOfRange, std::to_string(z) + " is not below s_M");
  if (z == 0) return {0, std::nullopt};
  return {z, gamma(z, scale)};
}

/// Phi(f) = sum_y phi_(y) f_(y), the pairing of K-homology with K-theory.
inline std::int64_t pair(const KHomomorphism& phi, const K0Class& f) {
  const K0Coeffs c = decompose(f);
  std::int64_t total = 0;
  for (const auto& [y, weight] : phi.coeffs) {
    auto it = c.coeffs.find(y);
    if (it != c.coeffs.end()) total = detail::checked_add(total, detail::checked_mul(weight, it->second));
  }
  return total;
}

inline KHomomorphism operator+(KHomomorphism a, const KHomomorphism& b) {
  for (const auto& [y, v] : b.coeffs) a.coeffs[y] = detail::checked_add(a.coeffs[y], v);
  detail::drop_zeros(a.coeffs);
  return a;
}

inline KHomomorphism scaled(const KHomomorphism& a, std::int64_t c) {
  KHomomorphism out;
  for (const auto& [y, v] : a.coeffs) out.coeffs[y] = detail::checked_mul(v, c);
  detail::drop_zeros(out.coeffs);
  return out;
}

}  // namespace odolab
