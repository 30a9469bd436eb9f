#ifndef MGFIL_INTS_HPP
#define MGFIL_INTS_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace mgfil {

using Int = mpz_class;
using Rat = mpq_class;

// Length of a quotient module. nullopt encodes infinite length; a legitimate
// value for non-m-primary input, not an error.
using Length = std::optional<Int>;

Int factorial(int k);

// Binomial coefficient C(top, k) extended polynomially to any integer top:
// product(top-i, i=0..k-1) / k!.  C(top, k) = 0 for k < 0.
Int binomial(const Int& top, int k);

// d! / (alpha_1! ... alpha_s!), requires |alpha| <= d.
Int multinomial(int d, const std::vector<int>& alpha);

std::string length_str(const Length& l);

}  // namespace mgfil

#endif
