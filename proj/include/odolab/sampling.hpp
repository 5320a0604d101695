#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "odolab/ktheory.hpp"
#include "odolab/length.hpp"
#include "odolab/level_function.hpp"
#include "odolab/supernatural.hpp"

namespace odolab {

/// Seeded generator of random test objects. Draws use raw engine output only,
/// so a seed yields the same objects on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1)); }

  Rational rational(std::int64_t max_num = 9, std::int64_t max_den = 6) {
    return Rational(uniform(-max_num, max_num), uniform(1, max_den));
  }

  ExactFunction real_function(const Scale& scale, std::size_t level) {
    return ExactFunction::generate(scale, level, [&](Natural) { return ExactComplex(rational()); });
  }

  ExactFunction complex_function(const Scale& scale, std::size_t level) {
    return ExactFunction::generate(scale, level, [&](Natural) { return ExactComplex(rational(), rational()); });
  }

  /// Random complex function with its Haar mean subtracted.
  ExactFunction mean_zero_function(const Scale& scale, std::size_t level) {
    auto f = complex_function(scale, level);
    ExactComplex mean;
    for (const auto& v : f.values()) mean += v;
    mean = divide(mean, Rational(static_cast<std::int64_t>(f.size())));
    return f.map([&](const ExactComplex& v) { return v - mean; });
  }

  K0Class integer_function(const Scale& scale, std::size_t level, std::int64_t bound = 5) {
    return K0Class::generate(scale, level, [&](Natural) { return uniform(-bound, bound); });
  }

  K0Class projection(const Scale& scale, std::size_t level) {
    return K0Class::generate(scale, level, [&](Natural) { return uniform(0, 1); });
  }

  /// Up to `terms` nonzero coefficients at generators below `limit`.
  K0Coeffs coefficients(Natural limit, std::size_t terms, std::int64_t bound = 5) {
    K0Coeffs out;
    for (std::size_t i = 0; i < terms; ++i) {
      const std::int64_t v = uniform(-bound, bound);
      if (v != 0) out.coeffs[static_cast<Natural>(uniform(0, static_cast<std::int64_t>(limit) - 1))] = v;
    }
    return out;
  }

  KHomomorphism homomorphism(Natural limit, std::size_t terms, std::int64_t bound = 3) {
    return {coefficients(limit, terms, bound).coeffs};
  }

  /// Random scale with depth <= max_depth and top entry <= max_top.
  Scale scale(std::size_t max_depth, Natural max_top) {
    std::vector<Natural> s{static_cast<Natural>(uniform(2, 4))};
    const auto depth = static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(max_depth)));
    while (s.size() < depth && s.back() * 2 <= max_top) {
      const auto most = static_cast<std::int64_t>(max_top / s.back());
      s.push_back(s.back() * static_cast<Natural>(uniform(2, std::min<std::int64_t>(most, 4))));
    }
    return validate_scale(s);
  }

  /// Random strictly increasing l above 1 for `scale`.
  LengthSpec spec(const Scale& scale) {
    std::vector<Rational> l;
    Rational previous(1);
    for (std::size_t m = 1; m <= scale.depth(); ++m) {
      previous += Rational(uniform(1, 7), uniform(1, 3));
      l.push_back(previous);
    }
    return make_length_spec(scale, std::move(l));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace odolab
