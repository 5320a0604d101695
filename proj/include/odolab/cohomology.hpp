#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "odolab/error.hpp"
#include "odolab/harmonic.hpp"
#include "odolab/level_function.hpp"
#include "odolab/odometer.hpp"

namespace odolab {

enum class CoboundaryMethod { prefix_sum, fourier };

namespace detail {

inline void require_zero_mean(const ExactComplex& mean, double) {
  if (!mean.is_zero()) fail(ErrorKind::NonzeroMean, "integral is " + to_string(mean.re) + " + i*" + to_string(mean.im));
}

inline void require_zero_mean(const Complex& mean, double tolerance) {
  if (std::abs(mean) > tolerance)
    fail(ErrorKind::NonzeroMean, "integral has modulus " + std::to_string(std::abs(mean)));
}

}  // namespace detail

/// g with g(x+1) - g(x) = f(x) and mean zero, by prefix sums g(x) = sum_{t<x} f(t)
/// minus their mean. Exact for exact input.
template <class T>
LevelFunction<T> solve_coboundary_prefix(const LevelFunction<T>& f, double tolerance = kDerivedTolerance) {
  detail::require_zero_mean(haar_integral(f), tolerance);
  std::vector<T> g;
  g.reserve(f.size());
  T running{};
  for (Natural x = 0; x < f.size(); ++x) {
    g.push_back(running);
    running += f(x);
  }
  const T mean = haar_integral(LevelFunction<T>(f.scale(), f.level(), g));
  for (auto& v : g) v -= mean;
  return LevelFunction<T>(f.scale(), f.level(), std::move(g));
}

/// Same solution via g_hat_z = f_hat_z / (z - 1) for z != 1 and g_hat_1 = 0.
template <class T>
FloatFunction solve_coboundary_fourier(const LevelFunction<T>& f, double tolerance = kDerivedTolerance) {
  FourierCoeffs c = fourier(f);
  detail::require_zero_mean(c.at(DualElement{}), tolerance);
  for (auto& [z, coeff] : c.entries)
    coeff = z.is_identity() ? Complex{} : coeff / (eval_char(z, 1) - 1.0);
  return inverse_fourier(c);
}

template <class T>
FloatFunction solve_coboundary(const LevelFunction<T>& f, CoboundaryMethod method, double tolerance = kDerivedTolerance) {
  if (method == CoboundaryMethod::fourier) return solve_coboundary_fourier(f, tolerance);
  return to_float(solve_coboundary_prefix(f, tolerance));
}

/// g o phi - g
template <class T>
LevelFunction<T> apply_coboundary(const LevelFunction<T>& g) {
  return LevelFunction<T>::generate(g.scale(), g.level(), [&g](Natural x) { return T(g(x + 1) - g(x)); });
}

/// The class of f in H^1 (isomorphic to C via the Haar integral).
template <class T>
T cohomology_class(const LevelFunction<T>& f) {
  return haar_integral(f);
}

/// A cocycle rho determined by its generator r(x) = rho(1, x).
template <class T>
struct Cocycle {
  LevelFunction<T> generator;
};

/// rho(k, x) = r(x) + r(phi(x)) + ... + r(phi^{k-1}(x)).
template <class T>
T cocycle_eval(const Cocycle<T>& c, Natural k, const OdometerPoint& x) {
  const auto& r = c.generator;
  if (x.level < r.level())
    fail(ErrorKind::LevelMismatch, "point at level " + std::to_string(x.level) + " cannot evaluate a level " +
                                       std::to_string(r.level()) + " cocycle");
  const Natural period = r.size();
  const Natural start = x.residue % period;
  // Full periods contribute (k / period) * sum(r).
  T one_period{};
  for (const auto& v : r.values()) one_period += v;
  T acc = multiply(one_period, Rational(k / period));
  for (Natural t = 0; t < k % period; ++t) acc += r(start + t);
  return acc;
}

template <class T>
struct SkewState {
  OdometerPoint point;
  T value{};
};

/// (x, v) -> (phi(x), v + rho(1, x)) on the skew product Z_S x_rho C.
template <class T>
SkewState<T> skew_step(const Cocycle<T>& c, const SkewState<T>& state) {
  const Scale& scale = c.generator.scale();
  return {phi(scale, state.point), state.value + cocycle_eval(c, 1, state.point)};
}

}  // namespace odolab
