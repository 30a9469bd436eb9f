#include "mgfil/bundle.hpp"

#include <chrono>
#include <sstream>

#include "json.hpp"
#include "mgfil/error.hpp"

namespace mgfil {

namespace {

using ordered_json = nlohmann::ordered_json;

RegionOut region_out(std::string name, const Region& r) {
  return RegionOut{std::move(name), r.corners, r.box, r.margin};
}

std::string row_str(const Ring& ring, const std::vector<Exp>& row) {
  std::string s;
  for (size_t i = 0; i < row.size(); ++i) {
    if (i) s += " ";
    s += ring.monomial_str(row[i]);
  }
  return s;
}

struct Pipeline {
  const SpecDocument& doc;
  ResultBundle& out;
  Filtration F;
  int box, margin, offset;
  std::optional<HilbertPoly> poly;
  std::vector<CompleteReduction> user_reductions;
  std::vector<std::string> user_reduction_names;
  std::vector<CompleteReduction> found_reductions;
  std::vector<JointReduction> user_joints;
  std::vector<std::string> user_joint_names;
  std::vector<JointReduction> found_joints;
  bool reductions_done = false;

  Pipeline(const SpecDocument& d, ResultBundle& b, int box_, int margin_, int offset_)
      : doc(d), out(b), F(d.make_filtration()), box(box_), margin(margin_), offset(offset_) {}

  const HilbertPoly& fit() {
    if (!poly) {
      FitOptions opt;
      opt.base_offset = offset;
      poly = fit_polynomial(F, F.ring().dim(), opt);
      out.poly = poly;
    }
    return *poly;
  }

  void gather_reductions() {
    if (reductions_done) return;
    reductions_done = true;
    ReductionWindow w{box, margin};
    for (const auto& m : doc.reductions) {
      auto A = CompleteReduction::try_make(F, m.rows, w);
      if (A) {
        user_reductions.push_back(std::move(*A));
        user_reduction_names.push_back(m.name);
      } else {
        out.notes.push_back("reduction '" + m.name +
                            "' failed its completeness certificate on the window");
      }
    }
    if (doc.search_bound > 0) {
      for (auto& A : search_monomial_reductions(F, doc.search_bound, w, 16)) {
        bool dup = false;
        for (const auto& U : user_reductions)
          if (U.elements() == A.elements()) dup = true;
        if (!dup) found_reductions.push_back(std::move(A));
      }
    }
    if (found_reductions.empty() && user_reductions.empty())
      out.notes.push_back("no complete reduction available (search bound " +
                          std::to_string(doc.search_bound) + ")");

    for (const auto& jm : doc.joints) {
      JointReduction jr{jm.type, jm.rows};
      if (certify_joint_reduction(jr, F, box, margin)) {
        user_joints.push_back(std::move(jr));
        user_joint_names.push_back(jm.name);
      } else {
        out.notes.push_back("joint '" + jm.name + "' failed its certificate on the window");
      }
    }
    if (F.ring().dim() == F.arity() && doc.search_bound > 0)
      found_joints = search_joint_reductions_type_e(F, doc.search_bound, box, margin, 8);
  }

  std::vector<const CompleteReduction*> all_reductions() {
    gather_reductions();
    std::vector<const CompleteReduction*> out_;
    for (const auto& A : user_reductions) out_.push_back(&A);
    for (const auto& A : found_reductions) out_.push_back(&A);
    return out_;
  }

  void run_hilbert() {
    const HilbertPoly& P = fit();
    for (const auto& n : box_points(MultiIndex::zero(F.arity()), MultiIndex::diag(F.arity(), box)))
      out.hp_table.push_back({n, hilbert_function(F, n), P.eval(n)});
    FitOptions opt;
    opt.base_offset = offset;
    out.coeff_identity = leading_coefficient_identity(F, P, opt);
    IntFn diff = [&](const MultiIndex& m) -> Int { return P.eval(m) - hilbert_function(F, m); };
    for (int j = 0; j <= 2; ++j)
      out.vanishing_regions.push_back(
          region_out("difference-j" + std::to_string(j),
                     vanishing_region(F.arity(), diff, j, box, margin)));
  }

  void run_reductions() {
    gather_reductions();
    auto emit_one = [&](const CompleteReduction& A, const std::string& name,
                        const std::string& source) {
      ReductionOut r;
      r.name = name;
      r.source = source;
      for (const auto& row : A.elements()) r.rows.push_back(row_str(F.ring(), row));
      for (const auto& yj : A.y_all()) r.y.push_back(F.ring().monomial_str(yj));
      Region reg = reduction_vectors(A, F, box, margin);
      r.vectors = region_out("reduction-vectors", reg);
      r.reduction_number = complete_reduction_number(reg);
      r.good = is_good(A, F, box, margin);
      auto induced = induced_reductions_check(A, F, box + margin);
      r.induced_least_n = induced.least_n;
      out.reductions.push_back(std::move(r));
    };
    for (size_t k = 0; k < user_reductions.size(); ++k)
      emit_one(user_reductions[k], user_reduction_names[k], "user");
    int idx = 1;
    for (const auto& A : found_reductions) emit_one(A, "search-" + std::to_string(idx++), "search");

    for (size_t i = 0; i < user_joints.size(); ++i) {
      JointOut jo;
      jo.name = user_joint_names[i];
      jo.source = "user";
      jo.elements = user_joints[i].str(F.ring());
      jo.number_zero = joint_reduction_number_zero(user_joints[i], F, box, margin);
      out.joints.push_back(std::move(jo));
    }
    int jdx = 1;
    for (const auto& jr : found_joints) {
      JointOut jo;
      jo.name = "joint-search-" + std::to_string(jdx++);
      jo.source = "search";
      jo.elements = jr.str(F.ring());
      jo.number_zero = joint_reduction_number_zero(jr, F, box, margin);
      out.joints.push_back(std::move(jo));
    }
    if (F.ring().dim() == 2 && F.arity() == 2 && doc.search_bound > 0)
      for (int i = 0; i < 2; ++i) {
        out.slice_r[i] = single_graded_reduction_number(F, i, doc.search_bound, box, margin);
        if (!out.slice_r[i])
          out.notes.push_back("slice " + std::to_string(i + 1) +
                              ": no monomial reduction certified");
      }
  }

  void run_postulation() {
    const HilbertPoly& P = fit();
    out.postulation = region_out("postulation", postulation_region(F, P, box, margin));
    out.negative_excluded = negative_offsets_excluded(F, P, box);
  }

  void run_huneke() {
    if (!F.ring().cm()) {
      out.notes.push_back("fundamental-lemma identity needs a Cohen-Macaulay ring; skipped");
      return;
    }
    gather_reductions();
    auto all = all_reductions();
    if (all.empty()) {
      out.notes.push_back("fundamental-lemma identity needs a complete reduction; none available");
      return;
    }
    const CompleteReduction& A = *all.front();
    const HilbertPoly& P = fit();
    out.huneke_reduction = A.str(F.ring());
    bool all_eq = true;
    for (const auto& n :
         box_points(MultiIndex::zero(F.arity()), MultiIndex::diag(F.arity(), box))) {
      auto rep = huneke_identity_check(F, A, P, n);
      out.huneke_rows.push_back({n, rep.lhs, rep.rhs});
      if (!rep.equal) all_eq = false;
    }
    out.huneke_all_equal = all_eq;
  }

  void run_h1() {
    if (F.ring().dim() < 2) {
      out.notes.push_back("H^1 of the Rees algebra is defined here for dimension 2 only");
      return;
    }
    for (const auto& n :
         box_points(MultiIndex::zero(F.arity()), MultiIndex::diag(F.arity(), box)))
      out.h1_rows.push_back({n, rees_h1(F, n)});
    bool van = true;
    for (const auto& row : out.h1_rows)
      if (row.length != 0) van = false;
    out.h1_vanishing = van;
  }

  void run_theorems() {
    const HilbertPoly& P = fit();
    gather_reductions();
    out.admissible_window_ok = F.check_admissible_window(std::min(box, 4)).ok();

    // The vanishing-coefficient theorem applies to few filtrations; a failed
    // e-coefficient hypothesis is a clean skip, not a downgraded verdict.
    auto vrep = verify_vanishing_theorem(F, P, box, margin, out.h1_vanishing);
    if (!vrep.hypothesis_met) {
      out.notes.push_back(
          "vanishing-coefficient hypothesis e_{(d-1)e_i} = 0 not met; theorem skipped");
    } else {
      TheoremReport tv;
      tv.id = "vanishing-coefficients";
      tv.hypotheses.push_back({"e_{(d-1)e_i} = 0 for all i", vrep.hypothesis_met});
      if (F.ring().dim() == 2)
        tv.hypotheses.push_back({"H^1 vanishing on box", vrep.h1_vanishing.value_or(false)});
      if (vrep.applicable) {
        tv.conclusions.push_back(
            {"P = H on the box", vrep.p_equals_h_on_box ? Truth::yes : Truth::no});
        tv.conclusions.push_back({"e_0 = 0", vrep.e_origin_zero ? Truth::yes : Truth::no});
        if (vrep.powers_match)
          tv.conclusions.push_back({"F(n) equals the power products on the box",
                                    *vrep.powers_match ? Truth::yes : Truth::no});
        if (vrep.parameter_ideals)
          tv.conclusions.push_back({"base ideals are parameter ideals",
                                    *vrep.parameter_ideals ? Truth::yes : Truth::no});
      }
      tv.notes = vrep.notes;
      tv.finalize();
      out.theorems.push_back(std::move(tv));
    }

    if (F.ring().dim() == 1) {
      std::vector<CompleteReduction> all;
      for (const auto& A : user_reductions) all.push_back(A);
      for (const auto& A : found_reductions) all.push_back(A);
      out.theorems.push_back(verify_dim1_correspondence(F, all, P, box, margin));
      return;
    }

    std::vector<const CompleteReduction*> goods;
    auto all = all_reductions();
    for (const auto* A : all)
      if (is_good(*A, F, box, margin)) goods.push_back(A);

    if (!goods.empty()) {
      out.theorems.push_back(verify_dim2_bijection(F, *goods.front(), P, box, margin));
    } else {
      TheoremReport skip;
      skip.id = "dim2-bijection";
      skip.hypotheses.push_back({"good complete reduction available", false});
      skip.notes.push_back("no good complete reduction found or supplied");
      skip.finalize();
      out.theorems.push_back(std::move(skip));
    }

    if (F.arity() == 2) {
      EquivalenceInputs in;
      in.good_reductions = goods;
      for (const auto& j : user_joints) in.joint_type_e.push_back(&j);
      for (const auto& j : found_joints) in.joint_type_e.push_back(&j);
      in.h1_vanishing = out.h1_vanishing;
      in.slice_r[0] = out.slice_r[0];
      in.slice_r[1] = out.slice_r[1];
      out.theorems.push_back(verify_dim2_equivalences(F, P, in, box, margin));
    }
  }
};

void finalize_verdict(ResultBundle& b) {
  bool inconsistent = false, not_applicable = false;
  for (const auto& t : b.theorems) {
    if (t.verdict == TheoremReport::Verdict::inconsistent) inconsistent = true;
    if (t.verdict == TheoremReport::Verdict::not_applicable) not_applicable = true;
  }
  if (b.coeff_identity && !b.coeff_identity->ok()) inconsistent = true;
  if (b.huneke_all_equal && !*b.huneke_all_equal) inconsistent = true;
  if (b.admissible_window_ok && !*b.admissible_window_ok) inconsistent = true;
  if (!b.notes.empty() && b.theorems.empty() && b.huneke_rows.empty() && b.h1_rows.empty() &&
      !b.poly && b.reductions.empty())
    not_applicable = true;  // a command that could not run at all
  if (inconsistent) {
    b.verdict = "inconsistent";
    b.exit_code = 3;
  } else if (not_applicable) {
    b.verdict = "not-applicable";
    b.exit_code = 2;
  } else {
    b.verdict = "consistent";
    b.exit_code = 0;
  }
}

}  // namespace

ResultBundle run(const SpecDocument& doc, const RunOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  ResultBundle b;
  b.command = opt.command.empty() ? doc.command : opt.command;
  b.box = opt.box > 0 ? opt.box : doc.box;
  b.margin = opt.margin >= 0 ? opt.margin : doc.margin;
  b.offset = opt.offset > 0 ? opt.offset : doc.offset;
  set_sweep_threads(opt.threads);

  static const char* commands[] = {"verify-all", "hilbert", "reductions",
                                   "postulation", "huneke", "h1"};
  bool known = false;
  for (const char* c : commands) known = known || b.command == c;
  if (!known) fail(ErrorKind::invalid_argument, "unknown command '" + b.command + "'");

  Pipeline p(doc, b, b.box, b.margin, b.offset);
  b.ring_desc = p.F.ring().describe();
  b.filtration_desc = p.F.describe();
  b.dim = p.F.ring().dim();
  b.arity = p.F.arity();

  if (b.command == "hilbert" || b.command == "verify-all") p.run_hilbert();
  if (b.command == "reductions" || b.command == "verify-all") p.run_reductions();
  if (b.command == "h1" || b.command == "verify-all") {
    if (b.dim >= 2 || b.command == "h1") p.run_h1();
  }
  if (b.command == "postulation" || b.command == "verify-all") p.run_postulation();
  if (b.command == "huneke" || b.command == "verify-all") p.run_huneke();
  if (b.command == "verify-all") p.run_theorems();

  finalize_verdict(b);
  b.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  return b;
}

namespace {

ordered_json mi_json(const MultiIndex& n) {
  ordered_json a = ordered_json::array();
  for (int i = 0; i < n.size(); ++i) a.push_back(n[i]);
  return a;
}

ordered_json corners_json(const std::vector<MultiIndex>& cs) {
  ordered_json a = ordered_json::array();
  for (const auto& c : cs) a.push_back(mi_json(c));
  return a;
}

ordered_json region_json(const RegionOut& r) {
  ordered_json j;
  j["corners"] = corners_json(r.corners);
  j["box"] = r.box;
  j["margin"] = r.margin;
  return j;
}

ordered_json theorem_json(const TheoremReport& t) {
  ordered_json j;
  j["id"] = t.id;
  ordered_json hyps = ordered_json::array();
  for (const auto& h : t.hypotheses) hyps.push_back({{"name", h.name}, {"holds", h.holds}});
  j["hypotheses"] = hyps;
  ordered_json cons = ordered_json::array();
  for (const auto& c : t.conclusions)
    cons.push_back({{"name", c.name}, {"holds", truth_str(c.holds)}});
  j["conclusions"] = cons;
  if (!t.conditions.empty()) {
    ordered_json conds = ordered_json::array();
    for (const auto& c : t.conditions)
      conds.push_back({{"name", c.name}, {"holds", truth_str(c.holds)}});
    j["conditions"] = conds;
  }
  j["notes"] = t.notes;
  j["verdict"] = verdict_str(t.verdict);
  return j;
}

ordered_json bundle_json(const ResultBundle& b) {
  ordered_json j;
  j["command"] = b.command;
  j["parameters"] = {{"box", b.box}, {"margin", b.margin}, {"offset", b.offset}};
  j["ring"] = b.ring_desc;
  j["filtration"] = b.filtration_desc;
  j["dimension"] = b.dim;
  j["arity"] = b.arity;
  if (b.poly) {
    ordered_json pj;
    pj["degree"] = b.poly->d;
    pj["final_offset"] = b.poly->fitted_offset;
    ordered_json coeffs = ordered_json::array();
    for (const auto& [alpha, e] : b.poly->coeffs) {
      ordered_json c;
      c["alpha"] = alpha;
      c["e"] = e.get_str();
      coeffs.push_back(c);
    }
    pj["coefficients"] = coeffs;
    j["polynomial"] = pj;
  }
  if (!b.hp_table.empty()) {
    ordered_json rows = ordered_json::array();
    for (const auto& r : b.hp_table)
      rows.push_back({{"n", mi_json(r.n)},
                      {"H", r.H.get_str()},
                      {"P", r.P.get_str()},
                      {"equal", r.H == r.P}});
    j["hilbert_table"] = rows;
  }
  if (b.coeff_identity) {
    const auto& c = *b.coeff_identity;
    j["coefficient_identity"] = {{"diagonal_leading", c.diagonal_leading.get_str()},
                                 {"e0_product", c.e0_product.get_str()},
                                 {"e_origin", c.e_origin.get_str()},
                                 {"ed_product", c.ed_product.get_str()},
                                 {"leading_ok", c.leading_ok},
                                 {"constant_ok", c.constant_ok}};
  }
  if (!b.vanishing_regions.empty()) {
    ordered_json v;
    for (const auto& r : b.vanishing_regions) v[r.name] = region_json(r);
    j["difference_vanishing"] = v;
  }
  if (!b.reductions.empty()) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : b.reductions) {
      ordered_json rj;
      rj["name"] = r.name;
      rj["source"] = r.source;
      rj["rows"] = r.rows;
      rj["y"] = r.y;
      rj["complete"] = true;
      rj["good"] = r.good;
      rj["reduction_vectors"] = region_json(r.vectors);
      rj["reduction_number"] = r.reduction_number;
      ordered_json ind = ordered_json::array();
      for (const auto& n : r.induced_least_n)
        ind.push_back(n ? ordered_json(*n) : ordered_json(nullptr));
      rj["induced_reduction_at"] = ind;
      arr.push_back(rj);
    }
    j["reductions"] = arr;
  }
  if (!b.joints.empty()) {
    ordered_json arr = ordered_json::array();
    for (const auto& jr : b.joints)
      arr.push_back({{"name", jr.name},
                     {"source", jr.source},
                     {"elements", jr.elements},
                     {"number_zero", jr.number_zero}});
    j["joint_reductions"] = arr;
  }
  if (b.slice_r[0] || b.slice_r[1]) {
    ordered_json s = ordered_json::array();
    for (int i = 0; i < 2; ++i)
      s.push_back(b.slice_r[i] ? ordered_json(*b.slice_r[i]) : ordered_json(nullptr));
    j["slice_reduction_numbers"] = s;
  }
  if (b.postulation) j["postulation"] = region_json(*b.postulation);
  if (b.negative_excluded) j["negative_offsets_excluded"] = *b.negative_excluded;
  if (!b.huneke_rows.empty()) {
    ordered_json h;
    h["reduction"] = b.huneke_reduction;
    ordered_json rows = ordered_json::array();
    for (const auto& r : b.huneke_rows)
      rows.push_back({{"n", mi_json(r.n)},
                      {"lhs", r.lhs.get_str()},
                      {"rhs", r.rhs.get_str()},
                      {"equal", r.lhs == r.rhs}});
    h["rows"] = rows;
    h["all_equal"] = b.huneke_all_equal.value_or(false);
    j["fundamental_lemma"] = h;
  }
  if (!b.h1_rows.empty()) {
    ordered_json h;
    ordered_json rows = ordered_json::array();
    for (const auto& r : b.h1_rows)
      rows.push_back({{"n", mi_json(r.n)}, {"length", r.length.get_str()}});
    h["rows"] = rows;
    h["vanishing_on_box"] = b.h1_vanishing.value_or(false);
    j["rees_h1"] = h;
  }
  if (b.admissible_window_ok) j["admissible_window_ok"] = *b.admissible_window_ok;
  if (!b.theorems.empty()) {
    ordered_json arr = ordered_json::array();
    for (const auto& t : b.theorems) arr.push_back(theorem_json(t));
    j["theorems"] = arr;
  }
  j["notes"] = b.notes;
  j["verdict"] = b.verdict;
  return j;
}

std::string alpha_str(const std::vector<int>& alpha) {
  std::string s = "(";
  for (size_t i = 0; i < alpha.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(alpha[i]);
  }
  return s + ")";
}

std::string emit_table(const ResultBundle& b) {
  std::ostringstream o;
  o << "== analysis: " << b.command << " ==\n";
  o << "ring        " << b.ring_desc << "\n";
  o << "filtration  " << b.filtration_desc << "\n";
  o << "parameters  box " << b.box << ", margin " << b.margin << ", offset " << b.offset << "\n";
  if (b.poly) {
    o << "\n-- Hilbert polynomial (degree " << b.poly->d << ", fitted at offset "
      << b.poly->fitted_offset << ") --\n";
    o << "e = {";
    bool first = true;
    for (const auto& [alpha, e] : b.poly->coeffs) {
      if (!first) o << ", ";
      first = false;
      o << alpha_str(alpha) << ":" << e.get_str();
    }
    o << "}\n";
  }
  if (!b.hp_table.empty()) {
    o << "\n-- H vs P on the box --\n";
    o << "n\tH\tP\tequal\n";
    for (const auto& r : b.hp_table)
      o << r.n.str() << "\t" << r.H.get_str() << "\t" << r.P.get_str() << "\t"
        << (r.H == r.P ? "yes" : "NO") << "\n";
  }
  if (b.coeff_identity) {
    const auto& c = *b.coeff_identity;
    o << "\n-- coefficient identities --\n";
    o << "sum d! e_a / a!   = " << c.diagonal_leading.get_str() << "  vs  e0(product) = "
      << c.e0_product.get_str() << "  [" << (c.leading_ok ? "ok" : "MISMATCH") << "]\n";
    o << "e_origin          = " << c.e_origin.get_str() << "  vs  e_d(product) = "
      << c.ed_product.get_str() << "  [" << (c.constant_ok ? "ok" : "MISMATCH") << "]\n";
  }
  for (const auto& r : b.vanishing_regions)
    o << "difference " << r.name << " corners " << corners_str(r.corners) << " verified on box "
      << r.box << " margin " << r.margin << "\n";
  if (!b.reductions.empty()) {
    o << "\n-- complete reductions --\n";
    for (const auto& r : b.reductions) {
      o << r.name << " (" << r.source << "): rows [";
      for (size_t i = 0; i < r.rows.size(); ++i) o << (i ? "; " : "") << r.rows[i];
      o << "], y = (";
      for (size_t i = 0; i < r.y.size(); ++i) o << (i ? ", " : "") << r.y[i];
      o << ")\n";
      o << "  reduction vectors " << corners_str(r.vectors.corners) << " verified on box "
        << r.vectors.box << " margin " << r.vectors.margin << "\n";
      o << "  reduction number " << r.reduction_number << ", good "
        << (r.good ? "yes" : "no") << "\n";
      o << "  induced reductions at n =";
      for (const auto& n : r.induced_least_n) {
        if (n)
          o << " " << *n;
        else
          o << " ?";
      }
      o << "\n";
    }
  }
  for (const auto& jr : b.joints)
    o << "joint " << jr.name << " (" << jr.source << ") " << jr.elements << " number zero: "
      << (jr.number_zero ? "yes" : "no") << "\n";
  if (b.slice_r[0] || b.slice_r[1]) {
    o << "slice reduction numbers:";
    for (int i = 0; i < 2; ++i) {
      o << " r(F^(" << i + 1 << ")) = ";
      if (b.slice_r[i])
        o << *b.slice_r[i];
      else
        o << "?";
    }
    o << "\n";
  }
  if (b.postulation)
    o << "\n-- postulation vectors --\ncorners " << corners_str(b.postulation->corners)
      << " verified on box " << b.postulation->box << " margin " << b.postulation->margin << "\n";
  if (b.negative_excluded)
    o << "negative offsets excluded: " << (*b.negative_excluded ? "yes" : "NO") << "\n";
  if (!b.huneke_rows.empty()) {
    o << "\n-- fundamental-lemma identity with " << b.huneke_reduction << " --\n";
    o << "n\tlhs\trhs\tequal\n";
    for (const auto& r : b.huneke_rows)
      o << r.n.str() << "\t" << r.lhs.get_str() << "\t" << r.rhs.get_str() << "\t"
        << (r.lhs == r.rhs ? "yes" : "NO") << "\n";
    o << "all equal: " << (b.huneke_all_equal.value_or(false) ? "yes" : "NO") << "\n";
  }
  if (!b.h1_rows.empty()) {
    o << "\n-- H^1 of the Rees algebra (Ratliff-Rush quotients) --\n";
    for (const auto& r : b.h1_rows)
      if (r.length != 0) o << r.n.str() << "\tlength " << r.length.get_str() << "\n";
    o << "vanishing on box: " << (b.h1_vanishing.value_or(false) ? "yes" : "no") << "\n";
  }
  if (b.admissible_window_ok)
    o << "admissible window check: " << (*b.admissible_window_ok ? "ok" : "FAILED") << "\n";
  for (const auto& t : b.theorems) {
    o << "\n-- theorem " << t.id << " [" << verdict_str(t.verdict) << "] --\n";
    for (const auto& h : t.hypotheses)
      o << "  hypothesis: " << h.name << " = " << (h.holds ? "holds" : "fails") << "\n";
    for (const auto& c : t.conclusions)
      o << "  conclusion: " << c.name << " = " << truth_str(c.holds) << "\n";
    for (const auto& c : t.conditions)
      o << "  condition:  " << c.name << " = " << truth_str(c.holds) << "\n";
    for (const auto& n : t.notes) o << "  note: " << n << "\n";
  }
  for (const auto& n : b.notes) o << "note: " << n << "\n";
  o << "\nverdict: " << b.verdict << " (" << b.elapsed_ms << " ms)\n";
  return o.str();
}

std::string emit_plotdata(const ResultBundle& b) {
  // lattice CSV for external staircase/region rendering; the one lossy surface
  std::ostringstream o;
  std::vector<std::pair<std::string, const RegionOut*>> regions;
  for (const auto& r : b.reductions) regions.push_back({"reduction_" + r.name, &r.vectors});
  if (b.postulation) regions.push_back({"postulation", &*b.postulation});
  o << "n1";
  for (int i = 1; i < b.arity; ++i) o << ",n" << i + 1;
  for (const auto& [name, _] : regions) o << ",in_" << name << ",corner_" << name;
  o << "\n";
  const int top = b.box + b.margin;
  for (const auto& n : box_points(MultiIndex::zero(b.arity), MultiIndex::diag(b.arity, top))) {
    o << n[0];
    for (int i = 1; i < b.arity; ++i) o << "," << n[i];
    for (const auto& [name, reg] : regions) {
      bool in = false, corner = false;
      for (const auto& c : reg->corners) {
        if (dominates(n, c)) in = true;
        if (n == c) corner = true;
      }
      o << "," << (in ? 1 : 0) << "," << (corner ? 1 : 0);
    }
    o << "\n";
  }
  return o.str();
}

}  // namespace

std::string emit(const ResultBundle& b, const std::string& format) {
  if (format == "table" || format.empty()) return emit_table(b);
  if (format == "structured") return bundle_json(b).dump(2) + "\n";
  if (format == "plotdata") return emit_plotdata(b);
  fail(ErrorKind::invalid_argument, "unknown format '" + format + "'");
}

}  // namespace mgfil
