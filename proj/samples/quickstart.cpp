// Walks through the main objects on the dyadic scale (2, 4, 8, 16).
#include <iostream>

#include "odolab/odolab.hpp"

int main() {
  using namespace odolab;
  const LengthSpec spec = builtin::dyadic_spec();
  const Scale& scale = spec.scale();

  // The shift on residues mod 16 and the gamma map.
  std::cout << "n(11) = " << n_of(11, scale) << ", gamma(11) = " << gamma(11, scale) << '\n';

  // A mean-zero function at level 2 and its coboundary solution.
  const ExactFunction f(scale, 2, {3, -1, -1, -1});
  const ExactFunction g = solve_coboundary_prefix(f);
  std::cout << "g =";
  for (const auto& v : g.values()) std::cout << ' ' << to_string(v.re);
  std::cout << "\n||f||_1 = " << rd_norm(f, 1, spec) << ", ||g||_0 = " << rd_norm(g, 0, spec) << '\n';

  // K_0 class of the even residues and its pairing with delta_5.
  const K0Class evens = indicator(scale, 1, 0, 2);
  for (const auto& [x, c] : decompose(evens).coeffs) std::cout << "f_(" << x << ") = " << c << '\n';
  const KHomomorphism delta5 = delta_to_e(5, scale);
  std::cout << "delta_5(evens) = " << pair(delta5, evens) << ", index = " << index_pairing(delta5, evens).index << '\n';
}
