// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "odolab/odolab.hpp"

using namespace odolab;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first;
  double worst = 0.0;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures++ == 0) first = what;
  }
  Verdict verdict(const std::string& summary) const {
    std::ostringstream s;
    s << summary << "; " << checks << " checks";
    if (failures) s << ", " << failures << " failed (first: " << first << ")";
    return {failures == 0, s.str()};
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

const LengthSpec kDyadic = builtin::dyadic_spec();
const LengthSpec kTriadic = builtin::triadic_spec();

/// Levels at most `max_level`, on each built-in spec.
struct Corpus {
  const LengthSpec* spec;
  std::size_t max_level;
};
const std::vector<Corpus> kCorpora{{&kDyadic, 4}, {&kTriadic, 3}};

Verdict coboundary_exactness() {
  Sampler rng(101);
  Tally t;
  double worst = 0.0;
  for (const auto& c : kCorpora) {
    for (int i = 0; i < 100; ++i) {
      const auto f = rng.mean_zero_function(c.spec->scale(), rng.index(c.max_level + 1));
      const auto g = solve_coboundary_prefix(f);
      t.check(apply_coboundary(g) == f, "exact identity, case " + std::to_string(i));
      const double d = sup_distance(solve_coboundary_fourier(f), g);
      worst = std::max(worst, d);
      t.check(d <= 1e-9, "fourier agreement, case " + std::to_string(i));
    }
  }
  return t.verdict("200 functions, max |g_fourier - g_prefix| = " + num(worst));
}

Verdict coboundary_norm_estimate() {
  Sampler rng(101);
  Tally t;
  double tightest = 0.0;
  for (const auto& c : kCorpora) {
    for (int i = 0; i < 100; ++i) {
      const auto f = rng.mean_zero_function(c.spec->scale(), rng.index(c.max_level + 1));
      const auto g = solve_coboundary_prefix(f);
      for (unsigned N = 0; N <= 2; ++N) {
        const double lhs = rd_norm(g, N, *c.spec);
        const double rhs = 0.25 * rd_norm(f, N + 1, *c.spec);
        if (rhs > 0) tightest = std::max(tightest, lhs / rhs);
        t.check(lhs <= rhs + 1e-9, "case " + std::to_string(i) + ", N = " + std::to_string(N));
      }
    }
  }
  return t.verdict("||g||_N <= 1/4 ||f||_{N+1}, max ratio " + num(tightest));
}

Verdict submultiplicativity() {
  Sampler rng(103);
  Tally t;
  for (const auto& c : kCorpora) {
    for (int i = 0; i < 100; ++i) {
      const auto f = rng.complex_function(c.spec->scale(), rng.index(c.max_level + 1));
      const auto g = rng.complex_function(c.spec->scale(), rng.index(c.max_level + 1));
      const auto fg = f * g;
      for (unsigned N = 0; N <= 3; ++N)
        t.check(rd_norm(fg, N, *c.spec) <= rd_norm(f, N, *c.spec) * rd_norm(g, N, *c.spec) + 1e-9,
                "pair " + std::to_string(i) + ", N = " + std::to_string(N));
    }
  }
  return t.verdict("200 pairs, N <= 3");
}

Verdict exponential_bound() {
  Sampler rng(104);
  Tally t;
  const GrowthCertificate cert = growth_certificate(kDyadic, {1, 1}, kDyadic.depth());
  t.check(cert.holds, "growth certificate c = 1, alpha = 1");
  double tightest = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto f = rng.real_function(kDyadic.scale(), rng.index(4));
    for (std::int64_t n = -64; n <= 64; ++n) {
      if (n == 0) continue;
      const auto e = exp_i(f, n);
      for (unsigned N = 0; N <= 2; ++N) {
        const double lhs = rd_norm(e, N, kDyadic);
        const double rhs = std::exp(rd_norm(f, N + 1, kDyadic)) * std::pow(std::abs(static_cast<double>(n)), N + 2.0);
        tightest = std::max(tightest, lhs / rhs);
        t.check(lhs <= rhs + 1e-6, "f " + std::to_string(i) + ", n = " + std::to_string(n) + ", N = " + std::to_string(N));
      }
    }
  }
  return t.verdict("C = 1, beta = 2, max ratio " + num(tightest));
}

Verdict k0_round_trips() {
  Sampler rng(105);
  Tally t;
  for (const auto& c : kCorpora) {
    const Scale& s = c.spec->scale();
    for (int i = 0; i < 100; ++i) {
      const auto f = rng.integer_function(s, rng.index(s.depth() + 1));
      t.check(recompose(decompose(f), s, f.level()) == f, "recompose(decompose), case " + std::to_string(i));
      const auto coeffs = rng.coefficients(s.top(), 1 + rng.index(8));
      t.check(decompose(recompose(coeffs, s, s.depth())) == coeffs, "decompose(recompose), case " + std::to_string(i));
    }
    t.check(decompose(K0Class::constant(s, s.depth(), 0)).coeffs.empty(), "zero function");
  }
  return t.verdict("200 inputs each way, zero -> {}");
}

Verdict index_theorem() {
  Sampler rng(106);
  Tally t;
  std::size_t with_phi0 = 0;
  for (const auto& c : kCorpora) {
    const Scale& s = c.spec->scale();
    for (int i = 0; i < 50; ++i) {
      const auto p = rng.projection(s, rng.index(s.depth() + 1));
      auto phi = rng.homomorphism(s.top(), 1 + rng.index(5));
      if (i % 2 == 0) phi.coeffs[0] = rng.uniform(1, 3) * (rng.uniform(0, 1) ? 1 : -1);
      if (phi.coeffs.count(0)) ++with_phi0;
      const auto r = index_pairing(phi, p);
      t.check(r.index == pair(phi, p), "case " + std::to_string(i));
      t.check(index_pairing_spectral(phi, p, *c.spec).index == r.index, "spectral, case " + std::to_string(i));
    }
  }
  return t.verdict("100 (Phi, P), " + std::to_string(with_phi0) + " with phi_0 != 0");
}

Verdict delta_e_duality() {
  Sampler rng(107);
  Tally t;
  const Scale s = builtin::dyadic_scale(6);
  for (int i = 0; i < 50; ++i) {
    const auto f = rng.integer_function(s, rng.index(s.depth() + 1));
    const auto c = decompose(f);
    for (Natural z = 0; z < 64; ++z) {
      t.check(pair(delta_to_e(z, s), f) == f(z), "delta, class " + std::to_string(i) + ", z = " + std::to_string(z));
      const DeltaDifference d = e_to_delta(z, s);
      const std::int64_t e = f(d.plus) - (d.minus ? f(*d.minus) : 0);
      t.check(e == (c.coeffs.count(z) ? c.coeffs.at(z) : 0), "e, class " + std::to_string(i) + ", z = " + std::to_string(z));
    }
  }
  return t.verdict("z < 64 on (2, ..., 64), 50 classes");
}

Verdict classification_round_trip() {
  Sampler rng(108);
  Tally t;
  for (int i = 0; i < 50; ++i) {
    const LengthSpec spec = rng.spec(rng.scale(5, 64));
    t.check(classify(lambda_table(spec)) == spec, "case " + std::to_string(i));
    t.check(verify_axioms(lambda_table(spec, std::min<std::size_t>(4, spec.depth()))).all_pass(), "axioms, case " + std::to_string(i));
  }
  t.check(verify_axioms(lambda_table(kDyadic, 4)).all_pass(), "dyadic axioms on G_4");
  t.check(classify(lambda_table(kDyadic)) == kDyadic, "dyadic");
  t.check(classify(lambda_table(kTriadic)) == kTriadic, "triadic");
  return t.verdict("50 random specs, depth <= 5, s_M <= 64");
}

Verdict totient_bound_check() {
  Sampler rng(109);
  Tally t;
  const GrowthParams p{1, 1};
  for (const LengthSpec* spec : {&kDyadic, &kTriadic}) {
    t.check(growth_certificate(*spec, p, spec->depth()).holds, "growth certificate");
    const Rational top = spec->l(spec->depth()) * 2;
    for (int i = 0; i < 20; ++i) {
      const Rational r = 1 + Rational(rng.uniform(0, 1000), 1000) * (top - 1);
      t.check(d_of_r(*spec, r) <= totient_bound(r, p), "r = " + to_string(r));
    }
  }
  for (std::size_t m = 0; m <= kDyadic.depth(); ++m)
    t.check(d_of_r(kDyadic, Rational(Natural{1} << m)) == (Natural{1} << m), "d(2^" + std::to_string(m) + ")");
  return t.verdict("20 r per spec, c = 1, alpha = 1");
}

Verdict spectral_commutator() {
  Sampler rng(110);
  Tally t;
  const LengthSpec deep_dyadic = builtin::dyadic_spec(9);
  const LengthSpec deep_triadic = builtin::triadic_spec(8);
  double tightest = 0.0;
  for (const LengthSpec* spec : {&deep_dyadic, &deep_triadic}) {
    for (int i = 0; i < 50; ++i) {
      const auto f = to_float(rng.complex_function(spec->scale(), rng.index(5)));
      const double sup = spectral_commutator_bound(f, *spec, 256).value;
      const double bound = 2.0 * rd_norm(f, 1, *spec);
      if (bound > 0) tightest = std::max(tightest, sup / bound);
      t.check(sup <= bound + 1e-9, "case " + std::to_string(i));
    }
  }
  const auto witness = spectral_commutator_bound(character(deep_dyadic.scale(), 2, make_root(1, 4)), deep_dyadic, 256);
  t.check(witness.value == 8.0, "chi_{1/4} attains " + num(witness.value));
  return t.verdict("100 functions, y <= 256, max ratio " + num(tightest) + ", chi_{1/4} -> " + num(witness.value));
}

Verdict fourier_analytics() {
  Sampler rng(111);
  Tally t;
  double inversion = 0.0, parseval = 0.0, orthogonality = 0.0;
  for (const auto& c : kCorpora) {
    const Scale& s = c.spec->scale();
    for (int i = 0; i < 50; ++i) {
      const auto f = to_float(rng.complex_function(s, rng.index(c.max_level + 1)));
      const auto coeffs = fourier(f);
      const double d = sup_distance(inverse_fourier(coeffs), f);
      inversion = std::max(inversion, d);
      t.check(d <= 1e-9, "inversion");
      double energy = 0.0, spectrum = 0.0;
      for (const auto& v : f.values()) energy += std::norm(v);
      for (const auto& [z, v] : coeffs.entries) spectrum += std::norm(v);
      const double gap = std::abs(energy / static_cast<double>(f.size()) - spectrum);
      parseval = std::max(parseval, gap);
      t.check(gap <= 1e-9, "parseval");
    }
    const auto group = enumerate_subgroup(s, s.depth());
    for (const auto& z : group)
      for (const auto& w : group) {
        const Complex inner = haar_integral(character(s, s.depth(), z) * conjugate(character(s, s.depth(), w)));
        const double gap = std::abs(inner - Complex(z == w ? 1.0 : 0.0));
        orthogonality = std::max(orthogonality, gap);
        t.check(gap <= 1e-12, "orthogonality");
      }
  }
  for (const LengthSpec& deep : {builtin::dyadic_spec(9), builtin::triadic_spec(8)}) {
    for (std::size_t m0 = 0; m0 <= 5; ++m0) {
      const auto f = to_float(rng.complex_function(deep.scale(), m0));
      t.check(commutator_tail_norm(f, 256, m0) == 0.0, "tail norm at level " + std::to_string(m0));
    }
  }
  return t.verdict("inversion " + num(inversion) + ", parseval " + num(parseval) + ", orthogonality " + num(orthogonality));
}

struct Criterion {
  const char* name;
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"coboundary exactness", coboundary_exactness},
      {"coboundary norm estimate", coboundary_norm_estimate},
      {"submultiplicativity", submultiplicativity},
      {"exponential bound", exponential_bound},
      {"K0 free-basis round trips", k0_round_trips},
      {"index theorem", index_theorem},
      {"delta/e duality", delta_e_duality},
      {"length classification round trip", classification_round_trip},
      {"d(r) and totient bound", totient_bound_check},
      {"spectral commutator bound", spectral_commutator},
      {"Fourier analytics", fourier_analytics},
  };
  const auto start = std::chrono::steady_clock::now();
  std::size_t failed = 0;
  for (const auto& c : criteria) {
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.ok) ++failed;
    std::printf("%s  %s: %s\n", v.ok ? "PASS" : "FAIL", c.name, v.detail.c_str());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%zu/%zu criteria passed in %.2f s\n", criteria.size() - failed, criteria.size(), seconds);
  return failed == 0 ? 0 : 1;
}
