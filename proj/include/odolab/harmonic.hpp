#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numbers>
#include <utility>
#include <vector>

#include "odolab/dual_group.hpp"
#include "odolab/error.hpp"
#include "odolab/length.hpp"
#include "odolab/level_function.hpp"
#include "odolab/rational.hpp"

namespace odolab {

/// Fourier coefficients of a level-m function, indexed by G_m in canonical order.
struct FourierCoeffs {
  Scale scale;
  std::size_t level = 0;
  std::vector<std::pair<DualElement, Complex>> entries;

  /// Coefficient at z; zero when z is outside G_m.
  Complex at(const DualElement& z) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), z,
                               [](const auto& e, const DualElement& key) { return e.first < key; });
    return (it != entries.end() && it->first == z) ? it->second : Complex{};
  }
};

/// chi_z sampled at level m (requires z in G_m); exact for orders dividing 4.
inline FloatFunction character(const Scale& scale, std::size_t level, const DualElement& z) {
  if (level_of(z, scale) > level) fail(ErrorKind::NotInGroup, "character does not factor through the requested level");
  return FloatFunction::generate(scale, level, [&z](Natural x) { return eval_char(z, static_cast<std::int64_t>(x)); });
}

/// chi_z with exact Gaussian-rational values; only orders dividing 4.
inline ExactFunction exact_character(const Scale& scale, std::size_t level, const DualElement& z) {
  if (level_of(z, scale) > level) fail(ErrorKind::NotInGroup, "character does not factor through the requested level");
  return ExactFunction::generate(scale, level, [&z](Natural x) { return eval_char_exact(z, static_cast<std::int64_t>(x)); });
}

/// f_hat_z = (1/s_m) sum_x f(x) conj(chi_z(x)), summed in canonical order of G_m.
template <class T>
FourierCoeffs fourier(const LevelFunction<T>& f) {
  FourierCoeffs out{f.scale(), f.level(), {}};
  const auto group = enumerate_subgroup(f.scale(), f.level());
  const double norm = 1.0 / static_cast<double>(f.size());
  out.entries.reserve(group.size());
  for (const auto& z : group) {
    Complex acc{};
    for (Natural x = 0; x < f.size(); ++x)
      acc += to_complex(f(x)) * std::conj(eval_char(z, static_cast<std::int64_t>(x)));
    out.entries.emplace_back(z, acc * norm);
  }
  return out;
}

/// values[x] = sum_z c(z) chi_z(x)
inline FloatFunction inverse_fourier(const FourierCoeffs& c) {
  return FloatFunction::generate(c.scale, c.level, [&c](Natural x) {
    Complex acc{};
    for (const auto& [z, coeff] : c.entries) acc += coeff * eval_char(z, static_cast<std::int64_t>(x));
    return acc;
  });
}

namespace detail {

inline void require_spec_covers(const Scale& scale, std::size_t level, const LengthSpec& spec) {
  if (level > spec.depth())
    fail(ErrorKind::ScaleTooShallow, "function level " + std::to_string(level) + " exceeds spec depth " + std::to_string(spec.depth()));
  if (!scale.agrees_through(spec.scale(), level))
    fail(ErrorKind::ScaleMismatch, "function scale and spec scale differ");
}

}  // namespace detail

/// ||f||_N = sum_z |f_hat_z| lambda(z)^N over G_m.
inline double rd_norm(const FourierCoeffs& c, unsigned N, const LengthSpec& spec) {
  detail::require_spec_covers(c.scale, c.level, spec);
  double total = 0.0;
  for (const auto& [z, coeff] : c.entries)
    total += std::abs(coeff) * std::pow(to_double(lambda_eval(spec, z)), static_cast<double>(N));
  return total;
}

template <class T>
double rd_norm(const LevelFunction<T>& f, unsigned N, const LengthSpec& spec) {
  detail::require_spec_covers(f.scale(), f.level(), spec);
  return rd_norm(fourier(f), N, spec);
}

/// (1/s_m) sum_x f(x); exact for exact and integer-free scalar types.
template <class T>
T haar_integral(const LevelFunction<T>& f) {
  T acc{};
  for (const auto& v : f.values()) acc += v;
  return divide(acc, Rational(f.size()));
}

/// Conditional expectation onto s_m-periodic functions, i.e. the Fourier
/// projection onto G_m, computed exactly by averaging over the cosets x + t s_m.
template <class T>
LevelFunction<T> low_part(const LevelFunction<T>& f, std::size_t m) {
  if (m >= f.level()) return f;
  const Natural period = f.scale().s(m);
  const Natural copies = f.size() / period;
  return LevelFunction<T>::generate(f.scale(), f.level(), [&](Natural x) {
    T acc{};
    for (Natural t = 0; t < copies; ++t) acc += f(x % period + t * period);
    return divide(acc, Rational(copies));
  });
}

/// f = f_low + f_high with f_low supported on {lambda <= l_m} = G_m.
template <class T>
std::pair<LevelFunction<T>, LevelFunction<T>> split_at(const LevelFunction<T>& f, const LengthSpec& spec, std::size_t m) {
  detail::require_spec_covers(f.scale(), f.level(), spec);
  if (m > spec.depth()) fail(ErrorKind::ScaleTooShallow, "split level exceeds spec depth");
  LevelFunction<T> low = low_part(f, m);
  LevelFunction<T> high = subtract(f, low);
  return {std::move(low), std::move(high)};
}

namespace detail {

inline double real_part_checked(const ExactComplex& v, double) {
  if (!v.is_real()) fail(ErrorKind::NotRealValued, "function has a nonzero imaginary part");
  return to_double(v.re);
}

inline double real_part_checked(const Complex& v, double tolerance) {
  if (std::abs(v.imag()) > tolerance) fail(ErrorKind::NotRealValued, "function has a nonzero imaginary part");
  return v.real();
}

}  // namespace detail

/// x -> exp(i n f(x)) for real-valued f.
template <class T>
FloatFunction exp_i(const LevelFunction<T>& f, std::int64_t n, double tolerance = kPrimitiveTolerance) {
  return f.map([&](const T& v) {
    const double angle = static_cast<double>(n) * detail::real_part_checked(v, tolerance);
    return std::polar(1.0, angle);
  });
}

/// Truncated series sum_{|n| <= n_max} f_n exp(2 pi i n a(x) / L) for real-valued a.
template <class T>
FloatFunction functional_calculus(const LevelFunction<T>& a, const std::map<std::int64_t, Complex>& series,
                                  double period, std::int64_t n_max, double tolerance = kPrimitiveTolerance) {
  if (!(period > 0)) fail(ErrorKind::OutOfRange, "period must be positive");
  return a.map([&](const T& v) {
    const double t = detail::real_part_checked(v, tolerance);
    Complex acc{};
    for (const auto& [n, coeff] : series) {
      if (n < -n_max || n > n_max) continue;
      acc += coeff * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(n) * t / period);
    }
    return acc;
  });
}

}  // namespace odolab
