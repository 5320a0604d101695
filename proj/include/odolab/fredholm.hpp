#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "odolab/error.hpp"
#include "odolab/ktheory.hpp"
#include "odolab/length.hpp"
#include "odolab/level_function.hpp"
#include "odolab/linalg.hpp"
#include "odolab/odometer.hpp"

namespace odolab {

/// One basis pair E^{odd,sign}_{(y,j)}, E^{ev,sign}_{(y,j)} of the Fredholm module.
///
/// Both gradings are diagonal: a label acts on the odd side by evaluation at
/// `odd_point` and on the even side by evaluation at `ev_point`. For sign +
/// these are y and gamma(y); for sign - they are gamma(y) and y. Since gamma(0)
/// is undefined, a y = 0 block evaluates only on one side (odd for phi_0 > 0,
/// even for phi_0 < 0) and G annihilates it, so it realizes delta_0 = e_(0).
struct Label {
  Natural y = 0;
  std::int64_t j = 1;
  int sign = 1;
  bool zero_block = false;
  std::optional<Natural> odd_point;
  std::optional<Natural> ev_point;

  friend bool operator==(const Label&, const Label&) = default;
};

struct FredholmModel {
  Scale scale;
  /// Label i spans odd basis vector i and even basis vector i.
  std::vector<Label> labels;

  std::size_t odd_dimension() const { return labels.size(); }
  std::size_t ev_dimension() const { return labels.size(); }
  /// G sends odd vector i to even vector i, except on zero blocks.
  bool g_connects(std::size_t i) const { return !labels[i].zero_block; }
};

inline FredholmModel build_module(const KHomomorphism& phi, const Scale& scale) {
  FredholmModel model{scale, {}};
  for (const auto& [y, weight] : phi.coeffs) {
    if (weight == 0) continue;
    if (y >= scale.top()) fail(ErrorKind::OutOfRange, "generator " + std::to_string(y) + " is not below s_M");
    const int sign = weight > 0 ? 1 : -1;
    const std::int64_t count = weight > 0 ? weight : -weight;
    for (std::int64_t j = 1; j <= count; ++j) {
      Label label{y, j, sign, y == 0, std::nullopt, std::nullopt};
      if (y == 0) {
        (sign > 0 ? label.odd_point : label.ev_point) = Natural{0};
      } else {
        const Natural g = gamma(y, scale);
        label.odd_point = sign > 0 ? y : g;
        label.ev_point = sign > 0 ? g : y;
      }
      model.labels.push_back(label);
    }
  }
  return model;
}

/// Index of B = rho_ev(P) X rho_odd(P) : Ran rho_odd(P) -> Ran rho_ev(P).
struct IndexComputation {
  std::int64_t index = 0;
  std::size_t domain_dimension = 0;
  std::size_t codomain_dimension = 0;
  std::size_t kernel_dimension = 0;
  std::size_t cokernel_dimension = 0;
};

namespace detail {

inline void require_projection(const K0Class& p) {
  for (std::int64_t v : p.values())
    if (v != 0 && v != 1) fail(ErrorKind::NotAProjection, "projection values must be 0 or 1, found " + std::to_string(v));
}

inline bool evaluates_to_one(const K0Class& p, const std::optional<Natural>& point) {
  return point && p(*point) == 1;
}

/// Builds the compressed operator with entry `weight(label)` on connected labels
/// and reads the index off exact kernel dimensions of B and B^T.
template <class Weight>
IndexComputation compressed_index(const FredholmModel& model, const K0Class& p, Weight weight) {
  require_projection(p);
  std::vector<std::size_t> domain;
  std::vector<std::size_t> codomain;
  for (std::size_t i = 0; i < model.labels.size(); ++i) {
    if (evaluates_to_one(p, model.labels[i].odd_point)) domain.push_back(i);
    if (evaluates_to_one(p, model.labels[i].ev_point)) codomain.push_back(i);
  }
  Matrix<Rational> b(codomain.size(), domain.size());
  for (std::size_t r = 0; r < codomain.size(); ++r)
    for (std::size_t c = 0; c < domain.size(); ++c)
      if (codomain[r] == domain[c] && model.g_connects(domain[c])) b(r, c) = weight(model.labels[domain[c]]);

  IndexComputation out;
  out.domain_dimension = domain.size();
  out.codomain_dimension = codomain.size();
  out.kernel_dimension = kernel_dimension(b);
  out.cokernel_dimension = kernel_dimension(b.transposed());
  out.index = static_cast<std::int64_t>(out.kernel_dimension) - static_cast<std::int64_t>(out.cokernel_dimension);
  return out;
}

}  // namespace detail

/// <[P], Phi> computed from the Fredholm module with the bounded operator G.
inline IndexComputation index_pairing(const KHomomorphism& phi, const K0Class& p) {
  return detail::compressed_index(build_module(phi, p.scale()), p, [](const Label&) { return Rational(1); });
}

/// Same pairing with G replaced by the Dirac operator D = diag(Lambda(y)).
inline IndexComputation index_pairing_spectral(const KHomomorphism& phi, const K0Class& p, const LengthSpec& spec) {
  if (!p.scale().agrees_through(spec.scale(), std::min(p.scale().depth(), spec.depth())))
    fail(ErrorKind::ScaleMismatch, "projection scale and spec scale differ");
  return detail::compressed_index(build_module(phi, spec.scale()), p,
                                  [&spec](const Label& l) { return spec.l(n_of(l.y, spec.scale())); });
}

/// Lambda(y) = l_{n(y)}, with Lambda(0) = l_0 = 1.
inline const Rational& dirac_weight(Natural y, const LengthSpec& spec) {
  return spec.l(n_of(y, spec.scale()));
}

struct DiracEntry {
  Label label;
  Rational lambda;
};

/// Diagonal entries of D per label, sorted nondecreasingly.
inline std::vector<DiracEntry> dirac_spectrum(const KHomomorphism& phi, const LengthSpec& spec) {
  std::vector<DiracEntry> out;
  for (const auto& label : build_module(phi, spec.scale()).labels) out.push_back({label, dirac_weight(label.y, spec)});
  std::stable_sort(out.begin(), out.end(), [](const DiracEntry& a, const DiracEntry& b) { return a.lambda < b.lambda; });
  return out;
}

/// max over 1 <= y <= Y with n(y) > threshold of |f(y) - f(gamma(y))|: the norm of
/// [F, rho(f)] on the blocks deeper than `threshold`.
template <class T>
double commutator_tail_norm(const LevelFunction<T>& f, Natural sweep, std::size_t threshold) {
  const Scale& scale = f.scale();
  if (sweep >= scale.top()) fail(ErrorKind::ScaleTooShallow, "sweep bound must stay below s_M");
  double best = 0.0;
  for (Natural y = 1; y <= sweep; ++y) {
    if (n_of(y, scale) <= threshold) continue;
    best = std::max(best, magnitude(T(f(y) - f(gamma(y, scale)))));
  }
  return best;
}

struct CommutatorSweep {
  double value = 0.0;
  Natural argmax = 0;
};

/// sup_{0 <= y <= Y} Lambda(y) |f(y) - f(gamma(y))| with the y = 0 term zero.
template <class T>
CommutatorSweep spectral_commutator_bound(const LevelFunction<T>& f, const LengthSpec& spec, Natural sweep) {
  const Scale& scale = spec.scale();
  if (f.level() > spec.depth()) fail(ErrorKind::ScaleTooShallow, "function level exceeds spec depth");
  if (!f.scale().agrees_through(scale, f.level())) fail(ErrorKind::ScaleMismatch, "function scale and spec scale differ");
  if (sweep >= scale.top()) fail(ErrorKind::ScaleTooShallow, "sweep bound must stay below s_M");
  CommutatorSweep out;
  for (Natural y = 1; y <= sweep; ++y) {
    const double value = to_double(dirac_weight(y, spec)) * magnitude(T(f(y) - f(gamma(y, scale))));
    if (value > out.value) out = {value, y};
  }
  return out;
}

}  // namespace odolab
