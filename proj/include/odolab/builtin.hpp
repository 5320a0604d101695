#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "odolab/length.hpp"
#include "odolab/supernatural.hpp"

namespace odolab::builtin {

/// (2, 4, ..., 2^depth)
inline Scale dyadic_scale(std::size_t depth = 4) {
  std::vector<Natural> s;
  for (std::size_t m = 1; m <= depth; ++m) s.push_back(Natural{1} << m);
  return validate_scale(s);
}

/// Dyadic scale with l_m = 2^m, so lambda(z) = ord(z).
inline LengthSpec dyadic_spec(std::size_t depth = 4) {
  Scale scale = dyadic_scale(depth);
  std::vector<Rational> l;
  for (Natural v : scale.entries()) l.emplace_back(v);
  return make_length_spec(std::move(scale), std::move(l));
}

/// (3, 6, 12, 24, ...): 3 * 2^{m-1}. The default depth 3 is the (3, 6, 12) scale.
inline Scale triadic_scale(std::size_t depth = 3) {
  std::vector<Natural> s;
  for (std::size_t m = 1; m <= depth; ++m) s.push_back(Natural{3} << (m - 1));
  return validate_scale(s);
}

/// Triadic scale with l = s, e.g. l = (3, 6, 12).
inline LengthSpec triadic_spec(std::size_t depth = 3) {
  Scale scale = triadic_scale(depth);
  std::vector<Rational> l;
  for (Natural v : scale.entries()) l.emplace_back(v);
  return make_length_spec(std::move(scale), std::move(l));
}

}  // namespace odolab::builtin
