#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "odolab/builtin.hpp"
#include "odolab/cohomology.hpp"
#include "odolab/fredholm.hpp"
#include "odolab/harmonic.hpp"
#include "odolab/ktheory.hpp"
#include "odolab/length.hpp"
#include "odolab/sampling.hpp"

namespace odolab {

struct SuiteResult {
  std::string name;
  std::string scale;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    if (ok) {
      ++passed;
    } else {
      if (failed == 0) first_failure = what;
      ++failed;
    }
  }
};

struct FixtureResult {
  AxiomReport report;
  std::optional<std::string> error;
};

struct SelftestReport {
  std::vector<SuiteResult> suites;
  std::optional<FixtureResult> fixture;

  std::size_t passed() const {
    std::size_t n = 0;
    for (const auto& s : suites) n += s.passed;
    return n;
  }
  std::size_t failed() const {
    std::size_t n = 0;
    for (const auto& s : suites) n += s.failed;
    return n;
  }
  bool ok() const { return failed() == 0 && (!fixture || (!fixture->error && fixture->report.all_pass())); }
};

struct SelftestConfig {
  std::uint64_t seed = 20240601;
  std::size_t cases = 40;
  double tolerance = kDerivedTolerance;
  /// Length table checked with verify_axioms in addition to the built-in suites.
  std::optional<LengthTable> fixture;
};

namespace detail {

inline std::string scale_label(const Scale& s) {
  std::string out = "(";
  for (std::size_t m = 1; m <= s.depth(); ++m) out += (m > 1 ? "," : "") + std::to_string(s.s(m));
  return out + ")";
}

inline SuiteResult submultiplicativity_suite(const LengthSpec& spec, const SelftestConfig& cfg, Sampler& rng) {
  SuiteResult r{"submultiplicativity", scale_label(spec.scale()), 0, 0, {}};
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    const auto f = rng.complex_function(spec.scale(), rng.index(spec.depth() + 1));
    const auto g = rng.complex_function(spec.scale(), rng.index(spec.depth() + 1));
    const auto fg = f * g;
    for (unsigned N = 0; N <= 3; ++N) {
      const double lhs = rd_norm(fg, N, spec);
      const double rhs = rd_norm(f, N, spec) * rd_norm(g, N, spec);
      r.record(lhs <= rhs + cfg.tolerance, "case " + std::to_string(i) + ", N = " + std::to_string(N));
    }
  }
  return r;
}

inline SuiteResult coboundary_suite(const Scale& scale, const SelftestConfig& cfg, Sampler& rng) {
  SuiteResult r{"coboundary round trip", scale_label(scale), 0, 0, {}};
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    const auto f = rng.mean_zero_function(scale, rng.index(scale.depth() + 1));
    const auto g = solve_coboundary_prefix(f);
    const auto h = solve_coboundary_fourier(f);
    r.record(apply_coboundary(g) == f && sup_distance(g, h) <= cfg.tolerance, "case " + std::to_string(i));
  }
  return r;
}

inline SuiteResult index_suite(const Scale& scale, const SelftestConfig& cfg, Sampler& rng) {
  SuiteResult r{"index vs pairing", scale_label(scale), 0, 0, {}};
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    const auto p = rng.projection(scale, rng.index(scale.depth() + 1));
    const auto phi = rng.homomorphism(scale.top(), 4);
    r.record(index_pairing(phi, p).index == pair(phi, p), "case " + std::to_string(i));
  }
  return r;
}

inline SuiteResult classification_suite(const LengthSpec& base, const SelftestConfig& cfg, Sampler& rng) {
  SuiteResult r{"classification round trip", scale_label(base.scale()), 0, 0, {}};
  r.record(classify(lambda_table(base)) == base, "built-in spec");
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    const LengthSpec spec = rng.spec(base.scale());
    r.record(classify(lambda_table(spec)) == spec, "case " + std::to_string(i));
  }
  return r;
}

}  // namespace detail

/// Runs the bundled invariant suites on the dyadic (2,4,8,16) and (3,6,12) specs.
inline SelftestReport run_selftest(const SelftestConfig& cfg = {}) {
  SelftestReport report;
  Sampler rng(cfg.seed);
  for (const LengthSpec& spec : {builtin::dyadic_spec(), builtin::triadic_spec()}) {
    report.suites.push_back(detail::submultiplicativity_suite(spec, cfg, rng));
    report.suites.push_back(detail::coboundary_suite(spec.scale(), cfg, rng));
    report.suites.push_back(detail::index_suite(spec.scale(), cfg, rng));
    report.suites.push_back(detail::classification_suite(spec, cfg, rng));
  }
  if (cfg.fixture) {
    FixtureResult fixture;
    try {
      fixture.report = verify_axioms(*cfg.fixture);
    } catch (const Error& e) {
      fixture.error = e.what();
    }
    report.fixture = fixture;
  }
  return report;
}

}  // namespace odolab
