#include "mgfil/ints.hpp"

#include "mgfil/error.hpp"

namespace mgfil {

Int factorial(int k) {
  Int r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

Int binomial(const Int& top, int k) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  Int num = 1;
  for (int i = 0; i < k; ++i) num *= top - i;
  Int den = factorial(k);
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) fail(ErrorKind::internal, "binomial: non-integral quotient");
  return q;
}

Int multinomial(int d, const std::vector<int>& alpha) {
  int total = 0;
  for (int a : alpha) total += a;
  if (total != d) fail(ErrorKind::invalid_argument, "multinomial: |alpha| != d");
  Int num = factorial(d);
  for (int a : alpha) num /= factorial(a);
  return num;
}

std::string length_str(const Length& l) {
  return l ? l->get_str() : std::string("infinite");
}

}  // namespace mgfil
