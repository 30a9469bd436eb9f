#ifndef MGFIL_HILBERT_HPP
#define MGFIL_HILBERT_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mgfil/filtration.hpp"
#include "mgfil/ints.hpp"
#include "mgfil/region.hpp"

namespace mgfil {

// Bhattacharya/Hilbert polynomial in the signed binomial basis:
//   P(n) = sum_{|alpha| <= d} (-1)^{d-|alpha|} e_alpha prod_i C(n_i + alpha_i - 1, alpha_i)
class HilbertPoly {
public:
  int s = 0;
  int d = 0;
  std::map<std::vector<int>, Int> coeffs;  // alpha -> e_alpha
  int fitted_offset = 0;                   // base offset the fit finally used

  Int eval(const MultiIndex& n) const;
  const Int& coeff(const std::vector<int>& alpha) const;
  // sum_{|alpha| = d} d! e_alpha / prod alpha_i!  -- the constant value of the
  // d-th diagonal difference of P
  Int diagonal_leading() const;
  std::string str() const;
};

using IntFn = std::function<Int(const MultiIndex&)>;

// lambda(R / F(n)); throws not_m_primary when infinite
Int hilbert_function(const Filtration& F, const MultiIndex& n);

// k-fold diagonal difference via the binomial expansion
Int delta(const IntFn& f, int k, const MultiIndex& n);
// the recursive definition, kept as an independent route for validation
Int delta_recursive(const IntFn& f, int k, const MultiIndex& n);

struct FitOptions {
  int base_offset = 8;
  int validation_margin = 5;
  int max_doublings = 6;
};

HilbertPoly fit_polynomial(const Filtration& F, int d, FitOptions opt = {});
// 1-graded fit of n -> lambda(R / J^n)
HilbertPoly fit_ideal_powers(const Ideal& J, int d, FitOptions opt = {});

struct CoeffIdentityReport {
  Int diagonal_leading;   // sum d! e_alpha / alpha! from the multigraded fit
  Int e0_product;         // e_0 of the product ideal, from an independent 1-graded fit
  Int e_origin;           // e_{0} of the multigraded fit
  Int ed_product;         // e_d of the product ideal
  bool leading_ok = false;
  bool constant_ok = false;
  bool ok() const { return leading_ok && constant_ok; }
};

CoeffIdentityReport leading_coefficient_identity(const Filtration& F, const HilbertPoly& P,
                                                 FitOptions opt = {});

// Minimal corners n with Delta^j f vanishing on [n, (box+margin)e]
Region vanishing_region(int s, const IntFn& f, int j, int box, int margin);

struct VanishingTheoremReport {
  bool hypothesis_met = false;          // e_{(d-1)e_i} = 0 for all i
  std::optional<bool> h1_vanishing;     // required part of the d = 2 hypothesis
  bool applicable = false;
  bool p_equals_h_on_box = false;
  bool e_origin_zero = false;
  std::optional<bool> powers_match;     // F(n) = I^n on the box (bigraded conclusion)
  std::optional<bool> parameter_ideals; // min generator counts equal d
  bool consistent() const;
  std::vector<std::string> notes;
};

// The vanishing-coefficient theorems: hypothesis e_{(d-1)e_i}(F) = 0; for
// d = 2 the caller supplies the H^1 vanishing verdict.  Conclusions are
// asserted on the box only.
VanishingTheoremReport verify_vanishing_theorem(const Filtration& F, const HilbertPoly& P,
                                                int box, int margin,
                                                std::optional<bool> h1_vanishing);

}  // namespace mgfil

#endif
