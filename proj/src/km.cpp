#include "mgfil/km.hpp"

#include <algorithm>

#include "mgfil/error.hpp"

namespace mgfil {

bool is_regular_sequence(const Ring& ring, const std::vector<Exp>& y) {
  if (y.empty()) return false;
  if (y.size() == 1) return exp_total(y.front()) > 0;
  if (ring.backend() != Ring::Backend::staircase || ring.num_vars() != 2) return false;
  if (y.size() > 2) return false;
  // disjoint supports, both nonunits
  const Exp& a = y[0];
  const Exp& b = y[1];
  if (exp_total(a) == 0 || exp_total(b) == 0) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

namespace {

// lambda(A/B) for B subseteq A as a colength difference; containment is
// asserted, infinite colengths propagate as nullopt.
Length quotient_length(const Ideal& A, const Ideal& B) {
  if (!contains(A, B)) fail(ErrorKind::internal, "quotient_length: containment violated");
  Length la = A.colength(), lb = B.colength();
  if (!la || !lb) return std::nullopt;
  return *lb - *la;
}

}  // namespace

KMHomologyProfile km_homology(const Filtration& F, const std::vector<Exp>& y, int l,
                              const MultiIndex& n) {
  const int k = static_cast<int>(y.size());
  const int d = F.ring().dim();
  if (k < 1 || k > d) fail(ErrorKind::invalid_argument, "complex length must be 1..dim");
  if (l < 1) fail(ErrorKind::invalid_argument, "power parameter l must be >= 1");
  if (k >= 2 && !is_regular_sequence(F.ring(), y))
    fail(ErrorKind::invalid_argument,
         "the H_1 formula requires the sequence to be regular (disjoint monomial supports)");

  std::vector<Exp> yl;
  for (const auto& v : y) yl.push_back(exp_scale(v, l));
  Ideal Y = Ideal::from_gens(F.ring(), yl);

  KMHomologyProfile prof;
  prof.n = n;
  prof.l = l;
  prof.k = k;
  prof.lengths.resize(k + 1);

  // H_0
  prof.lengths[0] = sum(F.at(n.shifted(k * l)), Y).colength();
  // H_k via the colon formula
  {
    Ideal A = colon(F.at(n.shifted(l)), Y);
    prof.lengths[k] = quotient_length(A, F.at(n));
  }
  // H_1 via the intersection formula when it is not already H_k
  if (k >= 2) {
    Ideal top = intersect(Y, F.at(n.shifted(k * l)));
    Ideal bot = product(Y, F.at(n.shifted((k - 1) * l)));
    prof.lengths[1] = quotient_length(top, bot);
  }
  return prof;
}

HunekeReport huneke_identity_check(const Filtration& F, const CompleteReduction& A,
                                   const HilbertPoly& P, const MultiIndex& n) {
  const int d = F.ring().dim();
  HunekeReport rep;
  rep.n = n;
  IntFn diff = [&](const MultiIndex& m) -> Int { return P.eval(m) - hilbert_function(F, m); };
  rep.lhs = delta(diff, d, n);

  Ideal top = F.at(n.shifted(d));
  Ideal bot = product(A.J(), F.at(n.shifted(d - 1)));
  Length t1 = quotient_length(top, bot);
  if (!t1) fail(ErrorKind::not_m_primary, "huneke check on non-m-primary data");
  rep.rhs = *t1;
  if (d >= 2) {
    KMHomologyProfile prof = km_homology(F, A.y_all(), 1, n);
    for (int i = 2; i <= d; ++i) {
      if (!prof.lengths[i]) fail(ErrorKind::not_m_primary, "huneke check: infinite homology");
      if (i % 2 == 0)
        rep.rhs -= *prof.lengths[i];
      else
        rep.rhs += *prof.lengths[i];
    }
  }
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

Int rees_h1(const Filtration& F, const MultiIndex& n) {
  if (F.ring().dim() < 2)
    fail(ErrorKind::unsupported, "H^1 of the Rees algebra is computed for dimension >= 2 only");
  if (!n.is_nonnegative()) fail(ErrorKind::invalid_argument, "rees_h1 needs n >= 0");
  Ideal closed = F.ratliff_rush(n);
  Length len = quotient_length(closed, F.at(n));
  if (!len) fail(ErrorKind::not_m_primary, "rees_h1 on non-m-primary data");
  return *len;
}

// Every point is evaluated.  The known propagation of Ratliff-Rush triviality
// upward from a point is conditional on the grade hypothesis (it can fail
// otherwise: a trivial origin with a nontrivial closure at (0,1) exists), so
// it is not used to prune here.
bool h1_vanishing_on_box(const Filtration& F, int box) {
  const int s = F.arity();
  bool all = true;
  for_each_point(MultiIndex::zero(s), MultiIndex::diag(s, box), [&](const MultiIndex& n) {
    if (all && rees_h1(F, n) != 0) all = false;
  });
  return all;
}

GoodIntersectionReport good_reduction_intersection(const Filtration& F,
                                                   const CompleteReduction& A, int box) {
  const int s = F.arity();
  GoodIntersectionReport rep;
  rep.box = box;
  Ideal y1 = Ideal::principal(F.ring(), A.y(0));
  for_each_point(MultiIndex::diag(s, 1), MultiIndex::diag(s, box), [&](const MultiIndex& n) {
    if (intersect(y1, F.at(n)) != product(y1, F.at(n - MultiIndex::diag(s, 1))))
      rep.failures.push_back(n);
  });
  rep.ok = rep.failures.empty();
  return rep;
}

}  // namespace mgfil
