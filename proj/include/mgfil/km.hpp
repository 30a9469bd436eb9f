#ifndef MGFIL_KM_HPP
#define MGFIL_KM_HPP

#include <optional>
#include <string>
#include <vector>

#include "mgfil/hilbert.hpp"
#include "mgfil/reduction.hpp"

namespace mgfil {

// Homology lengths of the Kirby-Mehran complex C.(y^[l], F(n)):
//   H_0 = R / (F(n+kle), y^[l])
//   H_k = (F(n+le) : (y^[l])) / F(n)
//   H_1 = ((y^[l]) cap F(n+kle)) / (y^[l]) F(n+(k-1)le)   [y a regular sequence]
struct KMHomologyProfile {
  MultiIndex n;
  int l = 1;
  int k = 0;
  std::vector<Length> lengths;  // index i = lambda(H_i), i = 0..k
};

// Monomials form a regular sequence iff their supports are disjoint (two
// variables) resp. the single element is a nonunit (length-one case).
bool is_regular_sequence(const Ring& ring, const std::vector<Exp>& y);

KMHomologyProfile km_homology(const Filtration& F, const std::vector<Exp>& y, int l,
                              const MultiIndex& n);

struct HunekeReport {
  MultiIndex n;
  Int lhs;  // Delta^d (P - H)(n)
  Int rhs;  // lambda(F(n+de) / J F(n+(d-1)e)) - sum_{i>=2} (-1)^i lambda(H_i)
  bool equal = false;
};

// Both sides evaluated by independent routes: the left from the fitted
// polynomial and colengths, the right from ideal arithmetic and homology.
HunekeReport huneke_identity_check(const Filtration& F, const CompleteReduction& A,
                                   const HilbertPoly& P, const MultiIndex& n);

// lambda of the degree-n component of H^1 of the Rees algebra: the
// Ratliff-Rush quotient lambda(breve F(n) / F(n)).  Dimension >= 2 only.
Int rees_h1(const Filtration& F, const MultiIndex& n);

// true iff rees_h1 vanishes on [0, box]^s; prunes with the propagation rule
// (a zero at n forces zeros at every m >= n)
bool h1_vanishing_on_box(const Filtration& F, int box);

struct GoodIntersectionReport {
  bool ok = false;
  int box = 0;
  std::vector<MultiIndex> failures;
};

// Under H^1 vanishing and a good complete reduction, (y_1) cap F(n) must equal
// y_1 F(n-e) for every n >= e; a failure is a bug signal, not a refutation.
GoodIntersectionReport good_reduction_intersection(const Filtration& F,
                                                   const CompleteReduction& A, int box);

}  // namespace mgfil

#endif
