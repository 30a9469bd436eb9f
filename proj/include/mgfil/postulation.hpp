#ifndef MGFIL_POSTULATION_HPP
#define MGFIL_POSTULATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "mgfil/hilbert.hpp"
#include "mgfil/km.hpp"
#include "mgfil/reduction.hpp"

namespace mgfil {

// tri-state for quantified conditions evaluated over searched witnesses
enum class Truth { yes, no, unknown };
std::string truth_str(Truth t);

struct TheoremReport {
  std::string id;
  struct Hypothesis {
    std::string name;
    bool holds = false;
  };
  struct Conclusion {
    std::string name;
    Truth holds = Truth::unknown;
  };
  enum class Verdict { consistent, inconsistent, not_applicable };
  std::vector<Hypothesis> hypotheses;
  std::vector<Conclusion> conclusions;
  // evaluated truth table entries; reported but not verdict-bearing
  std::vector<Conclusion> conditions;
  std::vector<std::string> notes;
  Verdict verdict = Verdict::not_applicable;

  // inconsistent only when every hypothesis holds and a known conclusion
  // fails; that signals an engine bug, never a refutation of the theorem
  void finalize();
};

std::string verdict_str(TheoremReport::Verdict v);

// Region of n with H = P on [n, (box+margin)e]
Region postulation_region(const Filtration& F, const HilbertPoly& P, int box, int margin);

// Sampled exclusion of negative offsets from the postulation region: for each
// direction, some window point above -e_i separates H from P.
bool negative_offsets_excluded(const Filtration& F, const HilbertPoly& P, int box);

// dimension one: the postulation region and reduction-vector regions coincide
// and are independent of the complete reduction
TheoremReport verify_dim1_correspondence(const Filtration& F,
                                         const std::vector<CompleteReduction>& reductions,
                                         const HilbertPoly& P, int box, int margin);

// dimension two: n -> n+e is a bijection from postulation vectors onto the
// reduction vectors >= e, under a good complete reduction and H^1 vanishing
TheoremReport verify_dim2_bijection(const Filtration& F, const CompleteReduction& A,
                                    const HilbertPoly& P, int box, int margin);

struct EquivalenceInputs {
  std::vector<const CompleteReduction*> good_reductions;  // certified good
  std::vector<const CompleteReduction*> other_reductions; // certified, not good
  std::vector<const JointReduction*> joint_type_e;        // certified joint reductions
  std::optional<bool> h1_vanishing;
  std::optional<int> slice_r[2];  // r(F^(i)), when a slice search certified one
};

// Cohen-Macaulayness of the Rees algebra via its equivalent conditions:
// (2) postulation region = N^s, (3)/(3') reduction number <= 1 with H^1
// vanishing over good reductions, (4) slice reduction numbers <= 1 and joint
// reduction number of type e zero.  Condition (1) is reported as implied or
// refuted, never computed.
TheoremReport verify_dim2_equivalences(const Filtration& F, const HilbertPoly& P,
                                       const EquivalenceInputs& in, int box, int margin);

}  // namespace mgfil

#endif
