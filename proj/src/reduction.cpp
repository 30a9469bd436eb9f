#include "mgfil/reduction.hpp"

#include <algorithm>

#include "mgfil/error.hpp"

namespace mgfil {

namespace {

Exp column_product(const std::vector<std::vector<Exp>>& elements, int j) {
  Exp y = elements.front()[j];
  for (size_t i = 1; i < elements.size(); ++i) y = exp_add(y, elements[i][j]);
  return y;
}

bool reduction_point(const Ideal& J, const Filtration& F, const MultiIndex& n) {
  return product(J, F.at(n)) == F.at(n.shifted(1));
}

}  // namespace

std::optional<CompleteReduction> CompleteReduction::try_make(const Filtration& F,
                                                             std::vector<std::vector<Exp>> elements,
                                                             ReductionWindow w) {
  const int s = F.arity();
  if (static_cast<int>(elements.size()) != s)
    fail(ErrorKind::invalid_argument, "reduction matrix needs one row per base ideal");
  const int d = F.ring().dim();
  for (int i = 0; i < s; ++i) {
    if (static_cast<int>(elements[i].size()) != d)
      fail(ErrorKind::invalid_argument, "reduction matrix needs dim entries per row");
    for (const auto& x : elements[i])
      if (!F.base()[i].member(x))
        fail(ErrorKind::invalid_argument,
             "matrix entry " + F.ring().monomial_str(x) + " is not in base ideal " +
                 std::to_string(i + 1));
  }
  std::vector<Exp> ys;
  for (int j = 0; j < d; ++j) ys.push_back(column_product(elements, j));
  Ideal J = Ideal::from_gens(F.ring(), ys);
  // completeness certificate: the equality holds from some corner within the
  // box, i.e. on all of [box e, (box+margin) e]
  bool certified = holds_from(MultiIndex::diag(s, w.box), w.box, w.margin,
                              [&](const MultiIndex& m) { return reduction_point(J, F, m); });
  if (!certified) return std::nullopt;
  return CompleteReduction(std::move(elements), std::move(J), w);
}

CompleteReduction CompleteReduction::make(const Filtration& F,
                                          std::vector<std::vector<Exp>> elements,
                                          ReductionWindow w) {
  auto r = try_make(F, std::move(elements), w);
  if (!r)
    fail(ErrorKind::invalid_argument,
         "completeness certificate failed on the window (box " + std::to_string(w.box) +
             ", margin " + std::to_string(w.margin) + ")");
  return *r;
}

Exp CompleteReduction::y(int j) const { return column_product(elements_, j); }

std::vector<Exp> CompleteReduction::y_all() const {
  std::vector<Exp> ys;
  for (int j = 0; j < d(); ++j) ys.push_back(y(j));
  return ys;
}

std::string CompleteReduction::str(const Ring& ring) const {
  std::string out = "[";
  for (int i = 0; i < s(); ++i) {
    if (i) out += "; ";
    for (int j = 0; j < d(); ++j) {
      if (j) out += " ";
      out += ring.monomial_str(elements_[i][j]);
    }
  }
  return out + "]";
}

bool is_reduction_at(const CompleteReduction& A, const Filtration& F, const MultiIndex& n) {
  return reduction_point(A.J(), F, n);
}

Region reduction_vectors(const CompleteReduction& A, const Filtration& F, int box, int margin) {
  const int s = F.arity();
  return Region::from_predicate(s, MultiIndex::zero(s), box, margin, [&](const MultiIndex& m) {
    return reduction_point(A.J(), F, m);
  });
}

int complete_reduction_number(const Region& region) {
  if (region.empty()) fail(ErrorKind::invalid_argument, "empty reduction-vector region");
  int best = region.box + 1;
  for (const auto& c : region.corners) {
    int mx = 0;
    for (int i = 0; i < c.size(); ++i) mx = std::max(mx, c[i]);
    best = std::min(best, mx);
  }
  return best;
}

int complete_reduction_number(const CompleteReduction& A, const Filtration& F, int box,
                              int margin) {
  return complete_reduction_number(reduction_vectors(A, F, box, margin));
}

bool is_good(const CompleteReduction& A, const Filtration& F, int box, int margin) {
  const int s = F.arity();
  Ideal y1 = Ideal::principal(F.ring(), A.y(0));
  return holds_from(MultiIndex::diag(s, box), box, margin, [&](const MultiIndex& m) {
    return intersect(F.at(m), y1) == product(y1, F.at(m - MultiIndex::diag(s, 1)));
  });
}

std::vector<Exp> monomial_candidates(const Ideal& I, int degree_bound) {
  std::vector<Exp> gens;
  if (I.ring().backend() == Ring::Backend::staircase) {
    const auto& q = I.ring().poly();
    for (const auto& g : I.staircase_gens())
      if (!q.quotient_member(g)) gens.push_back(g);  // zero images are useless
  } else {
    // minimal generators of the value set
    const auto& sg = I.ring().sg();
    long top = I.conductor() + sg.gens.front();
    for (long v = 0; v < top; ++v) {
      if (!I.value_member(v)) continue;
      bool minimal = true;
      for (int a : sg.gens)
        if (v - a >= 0 && I.value_member(v - a)) {
          minimal = false;
          break;
        }
      if (minimal) gens.push_back(Exp{static_cast<int>(v)});
    }
  }
  // products of up to degree_bound generators
  std::vector<Exp> cands;
  std::vector<Exp> prev;
  for (int k = 1; k <= degree_bound; ++k) {
    std::vector<Exp> next;
    if (k == 1)
      next = gens;
    else
      for (const auto& p : prev)
        for (const auto& g : gens) next.push_back(exp_add(p, g));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    cands.insert(cands.end(), next.begin(), next.end());
    prev = std::move(next);
  }
  std::sort(cands.begin(), cands.end(), [](const Exp& a, const Exp& b) {
    int ta = exp_total(a), tb = exp_total(b);
    return ta != tb ? ta < tb : a < b;
  });
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  return cands;
}

namespace {

bool sop_pair(const Ring& ring, const std::vector<Exp>& ys) {
  // J = (y_1..y_d) can only reduce an m-primary filtration if it is m-primary
  Ideal J = Ideal::from_gens(ring, ys);
  return J.is_m_primary() && !J.is_unit();
}

}  // namespace

std::vector<CompleteReduction> search_monomial_reductions(const Filtration& F, int degree_bound,
                                                          ReductionWindow w, size_t limit) {
  const int s = F.arity();
  const int d = F.ring().dim();
  std::vector<std::vector<Exp>> cands(s);
  for (int i = 0; i < s; ++i) cands[i] = monomial_candidates(F.base()[i], degree_bound);

  std::vector<CompleteReduction> found;
  for (const auto& c : cands)
    if (c.empty()) return found;
  // enumerate matrices slot by slot; slot = j*s + i picks from cands[i]
  std::vector<size_t> pick(static_cast<size_t>(s) * d, 0);
  const size_t slots = pick.size();
  while (true) {
    std::vector<std::vector<Exp>> elements(s, std::vector<Exp>(d));
    for (size_t slot = 0; slot < slots; ++slot)
      elements[slot % s][slot / s] = cands[slot % s][pick[slot]];
    std::vector<Exp> ys;
    for (int j = 0; j < d; ++j) ys.push_back(column_product(elements, j));
    // canonical column order avoids column-permuted duplicates
    bool canonical = true;
    for (int j = 0; j + 1 < d; ++j)
      if (ys[j + 1] < ys[j]) canonical = false;
    if (canonical && sop_pair(F.ring(), ys)) {
      auto r = CompleteReduction::try_make(F, elements, w);
      if (r) {
        found.push_back(std::move(*r));
        if (found.size() >= limit) return found;
      }
    }
    bool advanced = false;
    for (size_t slot = slots; slot-- > 0;) {
      if (++pick[slot] < cands[slot % s].size()) {
        advanced = true;
        break;
      }
      pick[slot] = 0;
    }
    if (!advanced) break;
  }
  return found;
}

InducedReductionReport induced_reductions_check(const CompleteReduction& A, const Filtration& F,
                                                int bound) {
  InducedReductionReport rep;
  rep.all_ok = true;
  for (int i = 0; i < A.s(); ++i) {
    Ideal Ji = Ideal::from_gens(F.ring(), A.elements()[i]);
    std::optional<int> least;
    for (int n = 0; n <= bound && !least; ++n)
      if (product(Ji, F.base_power(i, n)) == F.base_power(i, n + 1)) least = n;
    if (!least) rep.all_ok = false;
    rep.least_n.push_back(least);
  }
  return rep;
}

std::string JointReduction::str(const Ring& ring) const {
  std::string out = "type(";
  for (size_t i = 0; i < type.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(type[i]);
  }
  out += ")[";
  bool first = true;
  for (const auto& row : elements)
    for (const auto& x : row) {
      if (!first) out += " ";
      first = false;
      out += ring.monomial_str(x);
    }
  return out + "]";
}

namespace {

bool joint_point(const JointReduction& jr, const Filtration& F, const MultiIndex& n) {
  const int s = F.arity();
  std::optional<Ideal> lhs;
  for (int i = 0; i < s; ++i)
    for (const auto& x : jr.elements[i]) {
      Ideal term = product(Ideal::principal(F.ring(), x), F.at(n - MultiIndex::unit(s, i)));
      lhs = lhs ? sum(*lhs, term) : term;
    }
  return *lhs == F.at(n);
}

}  // namespace

bool certify_joint_reduction(const JointReduction& jr, const Filtration& F, int box, int margin) {
  const int s = F.arity();
  int total = 0;
  for (int q : jr.type) total += q;
  if (total != F.ring().dim())
    fail(ErrorKind::invalid_argument, "joint reduction type must sum to dim");
  for (int i = 0; i < s; ++i) {
    if (static_cast<int>(jr.elements[i].size()) != jr.type[i])
      fail(ErrorKind::invalid_argument, "joint reduction row size disagrees with type");
    for (const auto& x : jr.elements[i])
      if (!F.base()[i].member(x))
        fail(ErrorKind::invalid_argument, "joint reduction entry outside its base ideal");
  }
  return holds_from(MultiIndex::diag(s, box), box, margin,
                    [&](const MultiIndex& n) { return joint_point(jr, F, n); });
}

bool joint_reduction_number_zero(const JointReduction& jr, const Filtration& F, int box,
                                 int margin) {
  const int s = F.arity();
  std::vector<int> lo(s, 0);
  for (int i = 0; i < s; ++i)
    if (jr.type[i] != 0) lo[i] = 1;
  bool ok = true;
  for_each_point(MultiIndex(lo), MultiIndex::diag(s, box + margin), [&](const MultiIndex& n) {
    if (ok && !joint_point(jr, F, n)) ok = false;
  });
  return ok;
}

std::vector<JointReduction> search_joint_reductions_type_e(const Filtration& F, int degree_bound,
                                                           int box, int margin, size_t limit) {
  const int s = F.arity();
  if (F.ring().dim() != s)
    fail(ErrorKind::unsupported, "type-e joint reductions need dim equal to the arity");
  std::vector<std::vector<Exp>> cands(s);
  for (int i = 0; i < s; ++i) cands[i] = monomial_candidates(F.base()[i], degree_bound);
  std::vector<JointReduction> found;
  for (const auto& c : cands)
    if (c.empty()) return found;
  std::vector<size_t> pick(s, 0);
  while (true) {
    JointReduction jr;
    jr.type.assign(s, 1);
    jr.elements.resize(s);
    for (int i = 0; i < s; ++i) jr.elements[i] = {cands[i][pick[i]]};
    if (certify_joint_reduction(jr, F, box, margin)) {
      found.push_back(std::move(jr));
      if (found.size() >= limit) return found;
    }
    bool advanced = false;
    for (int slot = s; slot-- > 0;) {
      if (++pick[slot] < cands[slot].size()) {
        advanced = true;
        break;
      }
      pick[slot] = 0;
    }
    if (!advanced) break;
  }
  return found;
}

std::optional<int> single_graded_reduction_number(const Filtration& F, int i, int degree_bound,
                                                  int box, int margin) {
  const int s = F.arity();
  const int d = F.ring().dim();
  auto slice = [&](int n) {
    std::vector<int> c(s, 0);
    c[i] = n;
    return F.at(MultiIndex(std::move(c)));
  };
  auto cands = monomial_candidates(F.base()[i], degree_bound);
  if (cands.empty()) return std::nullopt;
  std::optional<int> best;

  // enumerate d-element multisets of candidates
  std::vector<size_t> pick(d, 0);
  auto advance = [&]() {
    int slot = d;
    while (slot-- > 0) {
      if (++pick[slot] < cands.size()) {
        for (int t = slot + 1; t < d; ++t) pick[t] = pick[slot];
        return true;
      }
    }
    return false;
  };
  do {
    std::vector<Exp> gens;
    for (int j = 0; j < d; ++j) gens.push_back(cands[pick[j]]);
    Ideal J = Ideal::from_gens(F.ring(), gens);
    if (!J.is_m_primary() || J.is_unit()) continue;
    // pointwise equality J G(n) = G(n+1) on [0, box+margin]
    std::vector<char> ok(static_cast<size_t>(box + margin) + 1, 0);
    for (int n = 0; n <= box + margin; ++n)
      ok[n] = product(J, slice(n)) == slice(n + 1) ? 1 : 0;
    int r = box + margin + 1;
    for (int n = box + margin; n >= 0 && ok[n]; --n) r = n;
    if (r <= box && (!best || r < *best)) best = r;
    if (best && *best == 0) break;
  } while (advance());
  return best;
}

}  // namespace mgfil
