#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "odolab/dual_group.hpp"
#include "odolab/error.hpp"
#include "odolab/rational.hpp"
#include "odolab/supernatural.hpp"

namespace odolab {

/// Data (s, l) of the length function lambda_{s,l}; l_0 = 1 is implicit.
class LengthSpec {
 public:
  LengthSpec() = default;

  const Scale& scale() const { return scale_; }
  std::size_t depth() const { return scale_.depth(); }
  /// l_m for 0 <= m <= depth().
  const Rational& l(std::size_t m) const {
    static const Rational one(1);
    if (m > depth()) fail(ErrorKind::ScaleTooShallow, "level " + std::to_string(m) + " exceeds spec depth");
    return m == 0 ? one : values_[m - 1];
  }
  const std::vector<Rational>& values() const { return values_; }

  LengthSpec truncated(std::size_t m) const {
    LengthSpec out;
    out.scale_ = scale_.truncated(m);
    out.values_.assign(values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(m));
    return out;
  }

  friend bool operator==(const LengthSpec&, const LengthSpec&) = default;

 private:
  friend LengthSpec make_length_spec(Scale scale, std::vector<Rational> l);
  Scale scale_;
  std::vector<Rational> values_;
};

/// Requires one l per scale level and 1 < l_1 < ... < l_M.
inline LengthSpec make_length_spec(Scale scale, std::vector<Rational> l) {
  if (l.size() != scale.depth())
    fail(ErrorKind::InvalidLengthSpec, std::to_string(l.size()) + " l-values for a scale of depth " + std::to_string(scale.depth()));
  Rational previous(1);
  for (std::size_t m = 0; m < l.size(); ++m) {
    if (l[m] <= previous)
      fail(ErrorKind::InvalidLengthSpec, "l_" + std::to_string(m + 1) + " = " + to_string(l[m]) + " is not above " + to_string(previous));
    previous = l[m];
  }
  LengthSpec out;
  out.scale_ = std::move(scale);
  out.values_ = std::move(l);
  return out;
}

/// lambda_{s,l}(z) = l_m where (m, j) is the scale form of z.
inline const Rational& lambda_eval(const LengthSpec& spec, const DualElement& z) {
  return spec.l(level_of(z, spec.scale()));
}

/// A length function given by its values on a finite subgroup.
using LengthTable = std::map<DualElement, Rational>;

/// lambda_{s,l} restricted to G_m (defaults to G_M).
inline LengthTable lambda_table(const LengthSpec& spec, std::optional<std::size_t> level = std::nullopt) {
  LengthTable table;
  for (const auto& z : enumerate_subgroup(spec.scale(), level.value_or(spec.depth())))
    table.emplace(z, lambda_eval(spec, z));
  return table;
}

struct AxiomReport {
  bool normalization = true;
  bool non_archimedean = true;
  bool order_class_constancy = true;
  /// First element breaking lambda(z) = 1 <=> z = 1 (or carrying a value below 1).
  std::optional<DualElement> normalization_witness;
  /// First pair with lambda(z1 z2) > max(lambda(z1), lambda(z2)).
  std::optional<std::pair<DualElement, DualElement>> non_archimedean_witness;
  /// First pair of equal order with different values.
  std::optional<std::pair<DualElement, DualElement>> order_class_witness;

  bool all_pass() const { return normalization && non_archimedean && order_class_constancy; }
};

namespace detail {

inline void require_subgroup(const LengthTable& t) {
  if (t.empty() || !t.count(DualElement{}))
    fail(ErrorKind::DomainNotSubgroup, "table domain must contain the identity");
  for (const auto& [a, va] : t) {
    if (!t.count(inv(a))) fail(ErrorKind::DomainNotSubgroup, "domain is not closed under inversion");
    for (const auto& [b, vb] : t)
      if (!t.count(mul(a, b))) fail(ErrorKind::DomainNotSubgroup, "domain is not closed under multiplication");
  }
}

}  // namespace detail

/// Exhaustive check of normalization, the non-archimedean inequality and
/// constancy on order classes over the (finite subgroup) domain of `t`.
inline AxiomReport verify_axioms(const LengthTable& t) {
  detail::require_subgroup(t);
  AxiomReport report;
  for (const auto& [z, v] : t) {
    const bool ok = v >= 1 && ((v == 1) == z.is_identity());
    if (!ok && report.normalization) {
      report.normalization = false;
      report.normalization_witness = z;
    }
  }
  for (const auto& [a, va] : t) {
    for (const auto& [b, vb] : t) {
      if (report.non_archimedean && t.at(mul(a, b)) > std::max(va, vb)) {
        report.non_archimedean = false;
        report.non_archimedean_witness = std::make_pair(a, b);
      }
      if (report.order_class_constancy && a.order() == b.order() && va != vb) {
        report.order_class_constancy = false;
        report.order_class_witness = std::make_pair(a, b);
      }
    }
  }
  return report;
}

/// Recovers (s, l) from a complete table: l is the increasing list of values
/// above 1 and s_m is the size of the sublevel subgroup {z : lambda(z) <= l_m}.
inline LengthSpec classify(const LengthTable& t) {
  const AxiomReport report = verify_axioms(t);
  if (!report.all_pass()) fail(ErrorKind::AxiomViolation, "table does not define a non-archimedean length function");

  std::set<Rational> levels;
  for (const auto& [z, v] : t)
    if (v > 1) levels.insert(v);

  std::vector<Natural> sizes;
  std::vector<Rational> l(levels.begin(), levels.end());
  for (const Rational& cut : l) {
    std::vector<DualElement> sublevel;
    for (const auto& [z, v] : t)
      if (v <= cut) sublevel.push_back(z);
    const auto size = static_cast<Natural>(sublevel.size());
    for (const auto& a : sublevel) {
      if (size % a.order() != 0)
        fail(ErrorKind::SublevelNotSubgroup, "sublevel set at " + to_string(cut) + " has an element of order " + std::to_string(a.order()));
      for (const auto& b : sublevel)
        if (t.at(mul(a, b)) > cut) fail(ErrorKind::SublevelNotSubgroup, "sublevel set at " + to_string(cut) + " is not closed");
    }
    sizes.push_back(size);
  }

  LengthSpec spec = sizes.empty() ? LengthSpec{} : make_length_spec(validate_scale(sizes), std::move(l));
  for (const auto& [z, v] : t)
    if (lambda_eval(spec, z) != v)
      fail(ErrorKind::SublevelNotSubgroup, "reconstructed spec disagrees with the table");
  return spec;
}

/// Constants of the fast-growth condition lambda(z) >= c ord(z)^alpha.
struct GrowthParams {
  Rational c;
  Rational alpha;

  /// Exponent in d(r) <= C r^beta.
  Rational beta() const { return Rational(2) / alpha; }
};

namespace detail {

inline Rational rational_pow(const Rational& base, unsigned exponent) {
  Rational out(1);
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

inline unsigned small_unsigned(const Integer& v, const char* what) {
  if (v < 0 || v > 4096) fail(ErrorKind::OutOfRange, std::string(what) + " exponent is outside the supported range");
  return v.convert_to<unsigned>();
}

/// Exact test of value >= c * base^alpha for positive rationals and a rational alpha = p/q:
/// equivalent to (value/c)^q >= base^p.
inline bool dominates(const Rational& value, const GrowthParams& p, const Rational& base) {
  const unsigned num = small_unsigned(numerator(p.alpha), "alpha");
  const unsigned den = small_unsigned(denominator(p.alpha), "alpha");
  return rational_pow(value / p.c, den) >= rational_pow(base, num);
}

}  // namespace detail

struct GrowthCertificate {
  bool holds = true;
  std::optional<DualElement> witness;
};

/// Checks lambda(z) >= c ord(z)^alpha on every z in G_depth. The witness is the
/// worst violator, i.e. the one minimizing lambda(z) / (c ord(z)^alpha).
inline GrowthCertificate growth_certificate(const LengthSpec& spec, const GrowthParams& p, std::size_t depth) {
  if (p.c <= 0 || p.alpha <= 0) fail(ErrorKind::OutOfRange, "growth constants must be positive");
  if (depth > spec.depth()) fail(ErrorKind::ScaleTooShallow, "certificate depth exceeds the length-function depth");
  const unsigned num = detail::small_unsigned(numerator(p.alpha), "alpha");
  const unsigned den = detail::small_unsigned(denominator(p.alpha), "alpha");
  GrowthCertificate out;
  std::optional<Rational> worst;
  for (const auto& z : enumerate_subgroup(spec.scale(), depth)) {
    // (lambda/c)^q / ord^p < 1 exactly when the inequality fails.
    const Rational ratio = detail::rational_pow(lambda_eval(spec, z) / p.c, den) / detail::rational_pow(Rational(z.order()), num);
    if (ratio < 1 && (!worst || ratio < *worst)) {
      worst = ratio;
      out = {false, z};
    }
  }
  return out;
}

/// d(r) = |{z in G_M : lambda(z) <= r}| = s_m for l_m <= r < l_{m+1}.
inline Natural d_of_r(const LengthSpec& spec, const Rational& r) {
  if (r < 1) fail(ErrorKind::OutOfRange, "d(r) is defined for r >= 1");
  std::size_t m = 0;
  while (m < spec.depth() && spec.l(m + 1) <= r) ++m;
  return spec.scale().s(m);
}

/// Largest k with c k^alpha <= r: the order bound implied by fast growth.
inline Natural order_bound(const Rational& r, const GrowthParams& p) {
  Natural k = 0;
  while (detail::dominates(r, p, Rational(k + 1))) ++k;
  return k;
}

/// Phi(n) = sum_{k <= n} phi(k), via a totient sieve.
inline Natural totient_summatory(Natural n) {
  std::vector<Natural> phi(n + 1);
  for (Natural k = 0; k <= n; ++k) phi[k] = k;
  for (Natural p = 2; p <= n; ++p)
    if (phi[p] == p)
      for (Natural k = p; k <= n; k += p) phi[k] -= phi[k] / p;
  Natural total = 0;
  for (Natural k = 1; k <= n; ++k) total += phi[k];
  return total;
}

/// The totient bound on d(r) that fast growth with parameters p implies.
inline Natural totient_bound(const Rational& r, const GrowthParams& p) {
  return totient_summatory(order_bound(r, p));
}

}  // namespace odolab
