#ifndef MGFIL_REDUCTION_HPP
#define MGFIL_REDUCTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "mgfil/filtration.hpp"
#include "mgfil/region.hpp"

namespace mgfil {

struct ReductionWindow {
  int box = 6;
  int margin = 3;
};

// Matrix of monomials x_ij in I_i (rows i = 1..s over the base ideals, columns
// j = 1..d); the column products y_j generate J.  Construction validates the
// memberships and certifies completeness on the window: J F(n) = F(n+e) must
// hold from some corner within the box through box+margin.
class CompleteReduction {
public:
  static CompleteReduction make(const Filtration& F, std::vector<std::vector<Exp>> elements,
                                ReductionWindow w = {});
  // nullopt instead of a throw when the certificate fails (search path)
  static std::optional<CompleteReduction> try_make(const Filtration& F,
                                                   std::vector<std::vector<Exp>> elements,
                                                   ReductionWindow w = {});

  int s() const { return static_cast<int>(elements_.size()); }
  int d() const { return static_cast<int>(elements_.front().size()); }
  const Exp& element(int i, int j) const { return elements_[i][j]; }
  const std::vector<std::vector<Exp>>& elements() const { return elements_; }
  Exp y(int j) const;
  std::vector<Exp> y_all() const;
  const Ideal& J() const { return J_; }
  ReductionWindow window() const { return window_; }

  std::string str(const Ring& ring) const;

private:
  std::vector<std::vector<Exp>> elements_;
  Ideal J_;
  ReductionWindow window_;
  CompleteReduction(std::vector<std::vector<Exp>> e, Ideal J, ReductionWindow w)
      : elements_(std::move(e)), J_(std::move(J)), window_(w) {}
};

// single-point equality J F(n) = F(n+e)
bool is_reduction_at(const CompleteReduction& A, const Filtration& F, const MultiIndex& n);

Region reduction_vectors(const CompleteReduction& A, const Filtration& F, int box, int margin);

// least k with ke in the reduction-vector region; equals min over corners of
// the max coordinate
int complete_reduction_number(const CompleteReduction& A, const Filtration& F, int box,
                              int margin);
int complete_reduction_number(const Region& reduction_region);

// F(m) cap (y_1) = y_1 F(m-e) from some corner within the box through the margin
bool is_good(const CompleteReduction& A, const Filtration& F, int box, int margin);

// Monomial candidates of I: products of at most `degree_bound` generators.
std::vector<Exp> monomial_candidates(const Ideal& I, int degree_bound);

// Enumerates candidate matrices in lexicographic order (lowest degree first)
// and returns those whose completeness certificate passes; column order is
// canonicalized.  Not finding any is a legitimate outcome.
std::vector<CompleteReduction> search_monomial_reductions(const Filtration& F, int degree_bound,
                                                          ReductionWindow w = {},
                                                          size_t limit = SIZE_MAX);

struct InducedReductionReport {
  // least n with J_i I_i^n = I_i^{n+1}, per base ideal; nullopt = not observed
  std::vector<std::optional<int>> least_n;
  bool all_ok = false;
};

InducedReductionReport induced_reductions_check(const CompleteReduction& A, const Filtration& F,
                                                int bound);

// q_i elements of I_i with sum q_i = d
struct JointReduction {
  std::vector<int> type;
  std::vector<std::vector<Exp>> elements;  // elements[i] has q_i entries
  std::string str(const Ring& ring) const;
};

// sum_ij x_ij F(n - e_i) = F(n) from some corner within the box (the
// "for all large n" certificate)
bool certify_joint_reduction(const JointReduction& jr, const Filtration& F, int box, int margin);

// the identity holds for every n >= sum_{q_i != 0} e_i through box+margin
bool joint_reduction_number_zero(const JointReduction& jr, const Filtration& F, int box,
                                 int margin);

std::vector<JointReduction> search_joint_reductions_type_e(const Filtration& F, int degree_bound,
                                                           int box, int margin,
                                                           size_t limit = SIZE_MAX);

// r(F^(i)) over searched monomial reductions of the slice {F(n e_i)}:
// min over certified J of the least r with J G(n) = G(n+1) for all n in
// [r, box+margin].  nullopt when no candidate certifies.
std::optional<int> single_graded_reduction_number(const Filtration& F, int i, int degree_bound,
                                                  int box, int margin);

}  // namespace mgfil

#endif
