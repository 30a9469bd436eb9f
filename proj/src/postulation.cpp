#include "mgfil/postulation.hpp"

#include <algorithm>

#include "mgfil/error.hpp"

namespace mgfil {

std::string truth_str(Truth t) {
  switch (t) {
    case Truth::yes: return "true";
    case Truth::no: return "false";
    case Truth::unknown: return "unknown";
  }
  return "?";
}

std::string verdict_str(TheoremReport::Verdict v) {
  switch (v) {
    case TheoremReport::Verdict::consistent: return "consistent";
    case TheoremReport::Verdict::inconsistent: return "inconsistent";
    case TheoremReport::Verdict::not_applicable: return "not-applicable";
  }
  return "?";
}

void TheoremReport::finalize() {
  bool hyps = std::all_of(hypotheses.begin(), hypotheses.end(),
                          [](const Hypothesis& h) { return h.holds; });
  if (!hyps) {
    verdict = Verdict::not_applicable;
    return;
  }
  bool any_false = std::any_of(conclusions.begin(), conclusions.end(),
                               [](const Conclusion& c) { return c.holds == Truth::no; });
  verdict = any_false ? Verdict::inconsistent : Verdict::consistent;
}

Region postulation_region(const Filtration& F, const HilbertPoly& P, int box, int margin) {
  const int s = F.arity();
  return Region::from_predicate(s, MultiIndex::zero(s), box, margin, [&](const MultiIndex& m) {
    return P.eval(m) == hilbert_function(F, m);
  });
}

bool negative_offsets_excluded(const Filtration& F, const HilbertPoly& P, int box) {
  const int s = F.arity();
  for (int i = 0; i < s; ++i) {
    MultiIndex lo = MultiIndex::zero(s) - MultiIndex::unit(s, i);
    bool separated = false;
    for_each_point(lo, MultiIndex::diag(s, box), [&](const MultiIndex& m) {
      if (!separated && P.eval(m) != hilbert_function(F, m)) separated = true;
    });
    if (!separated) return false;
  }
  return true;
}

TheoremReport verify_dim1_correspondence(const Filtration& F,
                                         const std::vector<CompleteReduction>& reductions,
                                         const HilbertPoly& P, int box, int margin) {
  TheoremReport rep;
  rep.id = "dim1-correspondence";
  rep.hypotheses.push_back({"dimension 1", F.ring().dim() == 1});
  rep.hypotheses.push_back({"Cohen-Macaulay ring", F.ring().cm()});
  rep.hypotheses.push_back({"a complete reduction is available", !reductions.empty()});

  Region post = postulation_region(F, P, box, margin);
  rep.notes.push_back("postulation corners " + post.str());

  if (!reductions.empty()) {
    std::vector<Region> regions;
    for (const auto& A : reductions) regions.push_back(reduction_vectors(A, F, box, margin));
    for (size_t k = 0; k < reductions.size(); ++k)
      rep.notes.push_back("reduction vectors of " + reductions[k].str(F.ring()) + " " +
                          regions[k].str());

    bool all_equal = true;
    for (const auto& r : regions)
      if (r.corners != post.corners) all_equal = false;
    rep.conclusions.push_back(
        {"postulation region equals every reduction-vector region", all_equal ? Truth::yes : Truth::no});

    bool invariant = true;
    for (const auto& r : regions)
      if (r.corners != regions.front().corners) invariant = false;
    rep.conclusions.push_back(
        {"reduction-vector region independent of the reduction", invariant ? Truth::yes : Truth::no});

    bool same_number = true;
    int r0 = complete_reduction_number(regions.front());
    for (const auto& r : regions)
      if (complete_reduction_number(r) != r0) same_number = false;
    rep.conclusions.push_back(
        {"reduction number independent of the reduction", same_number ? Truth::yes : Truth::no});
  }
  rep.conclusions.push_back({"no negative postulation vectors (sampled)",
                             negative_offsets_excluded(F, P, box) ? Truth::yes : Truth::no});
  rep.finalize();
  return rep;
}

namespace {

std::vector<MultiIndex> shift_corners(const std::vector<MultiIndex>& corners, int by) {
  std::vector<MultiIndex> out;
  for (const auto& c : corners) out.push_back(c.shifted(by));
  return minimal_elements(std::move(out));
}

std::vector<MultiIndex> corners_above_e(const std::vector<MultiIndex>& corners, int s) {
  std::vector<MultiIndex> out;
  for (const auto& c : corners) out.push_back(join(c, MultiIndex::diag(s, 1)));
  return minimal_elements(std::move(out));
}

}  // namespace

TheoremReport verify_dim2_bijection(const Filtration& F, const CompleteReduction& A,
                                    const HilbertPoly& P, int box, int margin) {
  TheoremReport rep;
  rep.id = "dim2-bijection";
  const int s = F.arity();
  rep.hypotheses.push_back({"dimension 2", F.ring().dim() == 2});
  rep.hypotheses.push_back({"Cohen-Macaulay ring", F.ring().cm()});
  rep.hypotheses.push_back({"good complete reduction", is_good(A, F, box, margin)});
  rep.hypotheses.push_back({"H^1 vanishing on box", h1_vanishing_on_box(F, box)});

  Region post = postulation_region(F, P, box, margin);
  // reduction vectors on a box one wider, so the +e shift stays inside
  Region red = reduction_vectors(A, F, box + 1, margin);
  auto lhs = shift_corners(post.corners, 1);
  auto rhs = corners_above_e(red.corners, s);
  rep.notes.push_back("postulation corners " + post.str());
  rep.notes.push_back("reduction-vector corners " + red.str());
  rep.notes.push_back("shifted postulation corners " + corners_str(lhs));
  rep.notes.push_back("reduction vectors >= e, corners " + corners_str(rhs));

  rep.conclusions.push_back({"n -> n+e maps postulation corners onto reduction vectors >= e",
                             lhs == rhs ? Truth::yes : Truth::no});
  rep.conclusions.push_back({"no negative postulation vectors (sampled)",
                             negative_offsets_excluded(F, P, box) ? Truth::yes : Truth::no});
  rep.finalize();
  return rep;
}

TheoremReport verify_dim2_equivalences(const Filtration& F, const HilbertPoly& P,
                                       const EquivalenceInputs& in, int box, int margin) {
  TheoremReport rep;
  rep.id = "dim2-cm-equivalences";
  rep.hypotheses.push_back({"dimension 2", F.ring().dim() == 2});
  rep.hypotheses.push_back({"Cohen-Macaulay ring", F.ring().cm()});

  // (2): postulation region is all of N^s
  Region post = postulation_region(F, P, box, margin);
  Truth c2 = post.is_all() ? Truth::yes : Truth::no;
  rep.notes.push_back("postulation corners " + post.str());

  // (3): every good complete reduction found has r_A <= 1, and H^1 vanishes
  Truth h1 = in.h1_vanishing ? (*in.h1_vanishing ? Truth::yes : Truth::no) : Truth::unknown;
  Truth all_good_r1 = Truth::unknown;
  Truth some_good_r1 = Truth::unknown;
  if (!in.good_reductions.empty()) {
    bool all = true, some = false;
    for (const auto* A : in.good_reductions) {
      int r = complete_reduction_number(*A, F, box, margin);
      rep.notes.push_back("good reduction " + A->str(F.ring()) + " has reduction number " +
                          std::to_string(r));
      if (r > 1) all = false;
      if (r <= 1) some = true;
    }
    all_good_r1 = all ? Truth::yes : Truth::no;
    some_good_r1 = some ? Truth::yes : Truth::no;
    rep.notes.push_back("quantifier scope: " + std::to_string(in.good_reductions.size()) +
                        " good reduction(s) found by search or supplied");
  } else {
    rep.notes.push_back("no good complete reduction available; (3)/(3') not evaluated");
  }
  auto and3 = [&](Truth a) {
    if (a == Truth::no || h1 == Truth::no) return Truth::no;
    if (a == Truth::unknown || h1 == Truth::unknown) return Truth::unknown;
    return Truth::yes;
  };
  Truth c3 = and3(all_good_r1);
  Truth c3p = and3(some_good_r1);

  // (4): slice reduction numbers <= 1 and the joint reduction number of type e
  // is zero over every certified joint reduction found
  Truth slices = Truth::yes;
  for (int i = 0; i < 2; ++i) {
    if (!in.slice_r[i]) {
      slices = Truth::unknown;
      rep.notes.push_back("slice " + std::to_string(i + 1) +
                          ": no monomial reduction certified");
    } else {
      rep.notes.push_back("slice " + std::to_string(i + 1) + " reduction number " +
                          std::to_string(*in.slice_r[i]));
      if (*in.slice_r[i] > 1) slices = Truth::no;
    }
  }
  Truth joint = Truth::unknown;
  if (!in.joint_type_e.empty()) {
    bool all = true;
    for (const auto* jr : in.joint_type_e) {
      bool z = joint_reduction_number_zero(*jr, F, box, margin);
      rep.notes.push_back("joint reduction " + jr->str(F.ring()) +
                          (z ? " has number zero" : " has nonzero number"));
      if (!z) all = false;
    }
    joint = all ? Truth::yes : Truth::no;
    rep.notes.push_back("quantifier scope: " + std::to_string(in.joint_type_e.size()) +
                        " joint reduction(s) of type e");
  } else {
    rep.notes.push_back("no joint reduction of type e found; (4) joint part not evaluated");
  }
  Truth c4;
  if (slices == Truth::no || joint == Truth::no)
    c4 = Truth::no;
  else if (slices == Truth::unknown || joint == Truth::unknown)
    c4 = Truth::unknown;
  else
    c4 = Truth::yes;

  rep.conditions.push_back({"(2) P(F) = N^s on box", c2});
  rep.conditions.push_back({"(3) r <= 1 for all good reductions and H^1 = 0", c3});
  rep.conditions.push_back({"(3') r <= 1 for some good reduction and H^1 = 0", c3p});
  rep.conditions.push_back({"(4) slice reduction numbers <= 1 and type-e joint number zero", c4});

  // the equivalence itself: all known values agree
  std::vector<Truth> known;
  for (Truth t : {c2, c3, c3p, c4})
    if (t != Truth::unknown) known.push_back(t);
  bool agree = std::all_of(known.begin(), known.end(),
                           [&](Truth t) { return t == known.front(); });
  if (!known.empty()) {
    if (agree) {
      rep.notes.push_back(known.front() == Truth::yes
                              ? "(1) Rees algebra Cohen-Macaulay: implied by the equivalences"
                              : "(1) Rees algebra Cohen-Macaulay: refuted by the equivalences");
    }
    rep.conclusions.push_back({"conditions (2),(3),(3'),(4) agree", agree ? Truth::yes : Truth::no});
  }
  rep.finalize();
  return rep;
}

}  // namespace mgfil
