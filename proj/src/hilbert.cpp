#include "mgfil/hilbert.hpp"

#include <algorithm>

#include "mgfil/error.hpp"

namespace mgfil {

namespace {

std::vector<std::vector<int>> alphas_up_to(int s, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(s, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == s) {
      out.push_back(cur);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      cur[pos] = a;
      rec(pos + 1, left - a);
    }
    cur[pos] = 0;
  };
  rec(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

Int basis_value(const std::vector<int>& alpha, const MultiIndex& n, int d) {
  Int v = ((d - exp_total(alpha)) % 2 == 0) ? 1 : -1;
  for (size_t i = 0; i < alpha.size(); ++i)
    v *= binomial(Int(n[static_cast<int>(i)]) + alpha[i] - 1, alpha[i]);
  return v;
}

}  // namespace

Int HilbertPoly::eval(const MultiIndex& n) const {
  Int total = 0;
  for (const auto& [alpha, e] : coeffs) total += e * basis_value(alpha, n, d);
  return total;
}

const Int& HilbertPoly::coeff(const std::vector<int>& alpha) const {
  auto it = coeffs.find(alpha);
  if (it == coeffs.end()) fail(ErrorKind::invalid_argument, "coefficient index out of range");
  return it->second;
}

Int HilbertPoly::diagonal_leading() const {
  Int total = 0;
  for (const auto& [alpha, e] : coeffs)
    if (exp_total(alpha) == d) total += e * multinomial(d, alpha);
  return total;
}

std::string HilbertPoly::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [alpha, e] : coeffs) {
    if (!first) out += ", ";
    first = false;
    out += "(";
    for (size_t i = 0; i < alpha.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(alpha[i]);
    }
    out += "):" + e.get_str();
  }
  return out + "}";
}

Int hilbert_function(const Filtration& F, const MultiIndex& n) {
  Length l = F.at(n).colength();
  if (!l)
    fail(ErrorKind::not_m_primary, "infinite colength at " + n.str());
  return *l;
}

Int delta(const IntFn& f, int k, const MultiIndex& n) {
  Int total = 0;
  for (int j = 0; j <= k; ++j) {
    Int term = binomial(k, j) * f(n.shifted(j));
    if ((k - j) % 2) total -= term; else total += term;
  }
  return total;
}

Int delta_recursive(const IntFn& f, int k, const MultiIndex& n) {
  if (k == 0) return f(n);
  if (k == 1) return f(n.shifted(1)) - f(n);
  IntFn d1 = [&f](const MultiIndex& m) -> Int { return f(m.shifted(1)) - f(m); };
  return delta_recursive(d1, k - 1, n);
}

namespace {

// Exact rational elimination.  Returns the unique solution or nullopt when the
// system is inconsistent (the sampled function is not yet polynomial).  An
// underdetermined system cannot occur for the binomial basis on a full grid
// and is reported as an internal error.
std::optional<std::vector<Rat>> solve_exact(std::vector<std::vector<Rat>> m, int cols) {
  const int rows = static_cast<int>(m.size());
  int rank = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(m[rank], m[p]);
    Rat inv = m[rank][c];
    for (int j = c; j <= cols; ++j) m[rank][j] /= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rat f = m[r][c];
      for (int j = c; j <= cols; ++j) m[r][j] -= f * m[rank][j];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (int r = rank; r < rows; ++r)
    if (m[r][cols] != 0) return std::nullopt;  // inconsistent
  if (rank < cols) fail(ErrorKind::internal, "fit: singular sampling system");
  std::vector<Rat> x(cols);
  for (int r = 0; r < rank; ++r) x[pivot_col[r]] = m[r][cols];
  return x;
}

std::optional<HilbertPoly> try_fit(const Filtration& F, int d, int offset, int margin) {
  const int s = F.arity();
  const auto alphas = alphas_up_to(s, d);
  const int cols = static_cast<int>(alphas.size());

  auto grid = box_points(MultiIndex::diag(s, offset), MultiIndex::diag(s, offset + d));
  std::vector<std::vector<Rat>> m;
  m.reserve(grid.size());
  for (const auto& p : grid) {
    std::vector<Rat> row(cols + 1);
    for (int c = 0; c < cols; ++c) row[c] = Rat(basis_value(alphas[c], p, d));
    row[cols] = Rat(hilbert_function(F, p));
    m.push_back(std::move(row));
  }
  auto sol = solve_exact(std::move(m), cols);
  if (!sol) return std::nullopt;

  HilbertPoly P;
  P.s = s;
  P.d = d;
  P.fitted_offset = offset;
  for (int c = 0; c < cols; ++c) {
    const Rat& v = (*sol)[c];
    if (v.get_den() != 1) return std::nullopt;  // not an integer polynomial yet
    P.coeffs[alphas[c]] = v.get_num();
  }

  // validate on a shifted grid
  for (const auto& p :
       box_points(MultiIndex::diag(s, offset + margin), MultiIndex::diag(s, offset + margin + d)))
    if (P.eval(p) != hilbert_function(F, p)) return std::nullopt;
  return P;
}

}  // namespace

HilbertPoly fit_polynomial(const Filtration& F, int d, FitOptions opt) {
  if (d < 1 || d > 2) fail(ErrorKind::invalid_argument, "fit supports total degree 1 or 2");
  if (opt.base_offset < 1) fail(ErrorKind::invalid_argument, "base offset must be >= 1");
  int offset = opt.base_offset;
  for (int attempt = 0; attempt <= opt.max_doublings; ++attempt, offset *= 2) {
    auto P = try_fit(F, d, offset, opt.validation_margin);
    if (!P) continue;
    if (F.ring().cm() && d <= 2) {
      for (const auto& [alpha, e] : P->coeffs)
        if (exp_total(alpha) == d && e <= 0)
          fail(ErrorKind::internal,
               "fit: nonpositive top coefficient on a Cohen-Macaulay ring: " + P->str());
    }
    return *P;
  }
  fail(ErrorKind::no_stabilization,
       "fit did not validate within the retry cap; wrong degree or non-polynomial tail");
}

HilbertPoly fit_ideal_powers(const Ideal& J, int d, FitOptions opt) {
  Filtration F(FiltrationKind::powers, {J});
  return fit_polynomial(F, d, opt);
}

CoeffIdentityReport leading_coefficient_identity(const Filtration& F, const HilbertPoly& P,
                                                 FitOptions opt) {
  CoeffIdentityReport r;
  r.diagonal_leading = P.diagonal_leading();
  r.e_origin = P.coeff(std::vector<int>(P.s, 0));
  HilbertPoly product_fit = fit_ideal_powers(F.product_ideal(), P.d, opt);
  r.e0_product = product_fit.coeff({P.d});
  r.ed_product = product_fit.coeff({0});
  r.leading_ok = r.diagonal_leading == r.e0_product;
  r.constant_ok = r.e_origin == r.ed_product;
  return r;
}

Region vanishing_region(int s, const IntFn& f, int j, int box, int margin) {
  return Region::from_predicate(s, MultiIndex::zero(s), box, margin,
                                [&](const MultiIndex& m) { return delta(f, j, m) == 0; });
}

bool VanishingTheoremReport::consistent() const {
  if (!applicable) return true;
  bool ok = p_equals_h_on_box && e_origin_zero;
  if (powers_match) ok = ok && *powers_match;
  if (parameter_ideals) ok = ok && *parameter_ideals;
  return ok;
}

VanishingTheoremReport verify_vanishing_theorem(const Filtration& F, const HilbertPoly& P,
                                                int box, int margin,
                                                std::optional<bool> h1_vanishing) {
  VanishingTheoremReport rep;
  const int s = F.arity();
  const int d = P.d;
  rep.hypothesis_met = true;
  for (int i = 0; i < s && rep.hypothesis_met; ++i) {
    std::vector<int> alpha(s, 0);
    if (d - 1 > 0) alpha[i] = d - 1;
    if (P.coeff(alpha) != 0) rep.hypothesis_met = false;
  }
  rep.h1_vanishing = h1_vanishing;
  if (!F.ring().cm()) {
    rep.notes.push_back("ring is not declared Cohen-Macaulay; theorem not applied");
    rep.applicable = false;
  } else if (d == 1) {
    rep.applicable = rep.hypothesis_met;
  } else {
    if (!h1_vanishing)
      rep.notes.push_back("H^1 vanishing not evaluated; theorem not applied");
    rep.applicable = rep.hypothesis_met && h1_vanishing.value_or(false);
  }
  if (!rep.applicable) {
    rep.notes.push_back("hypothesis not met; nothing asserted");
    return rep;
  }

  rep.p_equals_h_on_box = true;
  for_each_point(MultiIndex::zero(s), MultiIndex::diag(s, box + margin), [&](const MultiIndex& n) {
    if (rep.p_equals_h_on_box && P.eval(n) != hilbert_function(F, n))
      rep.p_equals_h_on_box = false;
  });
  rep.e_origin_zero = P.coeff(std::vector<int>(s, 0)) == 0;

  if (d == 2 && s == 2) {
    Filtration powers(FiltrationKind::powers, F.base());
    bool match = true;
    for_each_point(MultiIndex::zero(s), MultiIndex::diag(s, box), [&](const MultiIndex& n) {
      if (match && F.at(n) != powers.at(n)) match = false;
    });
    rep.powers_match = match;
    bool params = true;
    for (const auto& I : F.base())
      if (I.min_gen_count() != d) params = false;
    rep.parameter_ideals = params;
  }
  return rep;
}

}  // namespace mgfil
