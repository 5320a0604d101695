#include <gtest/gtest.h>

#include "odolab/builtin.hpp"
#include "odolab/cohomology.hpp"
#include "odolab/sampling.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace odolab;

namespace {

const Scale ds = builtin::dyadic_scale();
const Scale ts = builtin::triadic_scale();

ExactFunction rational_function(const Scale& s, std::size_t level, std::vector<Rational> v) {
  std::vector<ExactComplex> values(v.begin(), v.end());
  return ExactFunction(s, level, values);
}

}  // namespace

TEST(Coboundary, Examples) {
  const auto g = solve_coboundary_prefix(ExactFunction(ds, 2, {3, -1, -1, -1}));
  EXPECT_EQ(g, rational_function(ds, 2, {Rational(-3, 2), Rational(3, 2), Rational(1, 2), Rational(-1, 2)}));

  EXPECT_EQ(solve_coboundary_prefix(ExactFunction::constant(ds, 3, 0)), ExactFunction::constant(ds, 3, 0));

  const auto chi = exact_character(ds, 1, make_root(1, 2));
  const auto h = solve_coboundary_prefix(chi);
  EXPECT_EQ(h, scaled(chi, ExactComplex(Rational(-1, 2))));
  EXPECT_EQ(apply_coboundary(h), chi);
}

TEST(Coboundary, NonzeroMeanIsTheObstruction) {
  EXPECT_EQ(kind_of([] { solve_coboundary_prefix(ExactFunction(ds, 1, {1, 0})); }), ErrorKind::NonzeroMean);
  EXPECT_EQ(kind_of([] { solve_coboundary_fourier(ExactFunction(ds, 1, {1, 0})); }), ErrorKind::NonzeroMean);
  EXPECT_EQ(kind_of([] { solve_coboundary(FloatFunction::constant(ds, 1, 1e-3), CoboundaryMethod::prefix_sum); }),
            ErrorKind::NonzeroMean);
  EXPECT_NO_THROW(solve_coboundary(FloatFunction(ds, 1, {1e-12, -2e-12}), CoboundaryMethod::prefix_sum));
}

TEST(Coboundary, AgreesWithMarchingOracle) {
  Sampler rng(21);
  for (const Scale& s : {ds, ts}) {
    for (int i = 0; i < 30; ++i) {
      const auto f = rng.mean_zero_function(s, rng.index(s.depth() + 1));
      const auto g = solve_coboundary_prefix(f);
      std::vector<oracle::Q> re, im;
      for (const auto& v : f.values()) {
        re.push_back(v.re);
        im.push_back(v.im);
      }
      const auto gre = oracle::coboundary(re);
      const auto gim = oracle::coboundary(im);
      for (Natural x = 0; x < g.size(); ++x) EXPECT_EQ(g(x), ExactComplex(gre[x], gim[x]));
      EXPECT_EQ(apply_coboundary(g), f);
      EXPECT_LE(sup_distance(solve_coboundary_fourier(f), g), 1e-9);
      EXPECT_LE(sup_distance(solve_coboundary(f, CoboundaryMethod::prefix_sum), g), 1e-12);
    }
  }
}

TEST(ApplyCoboundary, Examples) {
  EXPECT_EQ(apply_coboundary(ExactFunction::constant(ds, 3, ExactComplex(4, 1))), ExactFunction::constant(ds, 3, 0));
  const auto z = make_root(3, 8);
  const auto chi = character(ds, 3, z);
  const auto expected = chi.map([&](const Complex& v) { return (eval_char(z, 1) - 1.0) * v; });
  EXPECT_LE(sup_distance(apply_coboundary(chi), expected), 1e-12);
}

TEST(Cocycle, Examples) {
  const Cocycle<ExactComplex> rho{exact_character(ds, 1, make_root(1, 2))};
  EXPECT_EQ(cocycle_eval(rho, 0, {1, 0}), ExactComplex(0));
  EXPECT_EQ(cocycle_eval(rho, 2, {1, 0}), ExactComplex(0));
  EXPECT_EQ(cocycle_eval(rho, 3, {2, 1}), ExactComplex(-1));

  const Cocycle<ExactComplex> constant{ExactFunction::constant(ds, 2, ExactComplex(Rational(5, 2)))};
  EXPECT_EQ(cocycle_eval(constant, 4, {2, 3}), ExactComplex(10));
  EXPECT_EQ(kind_of([&] { cocycle_eval(constant, 1, {1, 0}); }), ErrorKind::LevelMismatch);
}

TEST(Cocycle, CompositionIdentity) {
  Sampler rng(22);
  for (int i = 0; i < 10; ++i) {
    const Cocycle<ExactComplex> rho{rng.complex_function(ts, 2)};
    for (Natural x = 0; x < 12; ++x)
      for (Natural k = 0; k < 15; ++k)
        for (Natural l = 0; l < 15; ++l) {
          const OdometerPoint p{3, x};
          OdometerPoint shifted = p;
          for (Natural t = 0; t < k; ++t) shifted = phi(ts, shifted);
          EXPECT_EQ(cocycle_eval(rho, k + l, p), cocycle_eval(rho, k, p) + cocycle_eval(rho, l, shifted));
        }
  }
}

TEST(Cocycle, SkewProductStep) {
  const Cocycle<ExactComplex> rho{ExactFunction(ds, 2, {1, 2, 3, 4})};
  SkewState<ExactComplex> state{{2, 3}, ExactComplex(0)};
  for (int t = 0; t < 5; ++t) state = skew_step(rho, state);
  EXPECT_EQ(state.point, (OdometerPoint{2, 0}));
  EXPECT_EQ(state.value, cocycle_eval(rho, 5, {2, 3}));
  EXPECT_EQ(state.value, ExactComplex(4 + 1 + 2 + 3 + 4));
}

TEST(CohomologyClass, Examples) {
  Sampler rng(23);
  EXPECT_EQ(cohomology_class(apply_coboundary(rng.complex_function(ds, 3))), ExactComplex(0));
  EXPECT_EQ(cohomology_class(ExactFunction::constant(ts, 2, ExactComplex(3, -1))), ExactComplex(3, -1));
  const auto f = ExactFunction::constant(ds, 1, 1) + exact_character(ds, 1, make_root(1, 2));
  EXPECT_EQ(cohomology_class(f), ExactComplex(1));
}
