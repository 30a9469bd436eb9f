#include "mgfil/ring.hpp"

#include <algorithm>
#include <numeric>

#include "mgfil/error.hpp"

namespace mgfil {

Exp exp_add(const Exp& a, const Exp& b) {
  Exp r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Exp exp_scale(const Exp& a, int k) {
  Exp r(a);
  for (int& v : r) v *= k;
  return r;
}

bool exp_leq(const Exp& a, const Exp& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

int exp_total(const Exp& a) {
  int t = 0;
  for (int v : a) t += v;
  return t;
}

// Antichain of minimal exponents, sorted lexicographically.
std::vector<Exp> minimalize_exps(std::vector<Exp> v) {
  if (v.empty()) return v;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (v[0].size() == 1) return {v.front()};
  // two variables: after lex sort (x asc, y asc), keep strictly descending y
  std::vector<Exp> out;
  int best_y = -1;
  for (const auto& g : v) {
    if (best_y < 0 || g[1] < best_y) {
      out.push_back(g);
      best_y = g[1];
    }
  }
  return out;
}

bool PolyRing::quotient_member(const Exp& e) const {
  for (const auto& q : quotient)
    if (exp_leq(q, e)) return true;
  return false;
}

bool SemigroupRing::contains(long v) const {
  if (v < 0) return false;
  if (v > frobenius) return true;
  return table[static_cast<size_t>(v)] != 0;
}

Ring Ring::polynomial(int num_vars, std::vector<Exp> quotient,
                      std::optional<int> declared_dim, std::optional<bool> declared_cm) {
  if (num_vars < 1 || num_vars > 2)
    fail(ErrorKind::invalid_argument, "polynomial backend supports 1 or 2 variables");
  for (const auto& q : quotient) {
    if (static_cast<int>(q.size()) != num_vars)
      fail(ErrorKind::invalid_argument, "quotient generator arity mismatch");
    for (int e : q)
      if (e < 0) fail(ErrorKind::invalid_argument, "negative exponent in quotient generator");
    if (exp_total(q) == 0)
      fail(ErrorKind::invalid_argument, "quotient contains a unit; the ring would be zero");
  }
  quotient = minimalize_exps(std::move(quotient));

  auto r = std::make_shared<PolyRing>();
  r->num_vars = num_vars;
  r->quotient = std::move(quotient);
  if (r->quotient.empty()) {
    r->dim = num_vars;
    r->cm = true;
    if (declared_dim && *declared_dim != num_vars)
      fail(ErrorKind::invalid_argument, "declared dimension disagrees with the free ring");
    if (declared_cm && !*declared_cm)
      fail(ErrorKind::invalid_argument, "regular rings are Cohen-Macaulay");
  } else {
    if (num_vars != 2)
      fail(ErrorKind::invalid_argument, "quotient backend requires 2 ambient variables");
    if (!declared_dim)
      fail(ErrorKind::invalid_argument, "quotient ring requires a declared dimension");
    if (*declared_dim != 1)
      fail(ErrorKind::invalid_argument, "quotient ring dimension must be 1");
    // pure powers of exactly one variable must survive the quotient
    bool x_killed = false, y_killed = false;
    for (const auto& q : r->quotient) {
      if (q[1] == 0) x_killed = true;
      if (q[0] == 0) y_killed = true;
    }
    int survivors = (x_killed ? 0 : 1) + (y_killed ? 0 : 1);
    if (survivors != 1)
      fail(ErrorKind::invalid_argument,
           "declared dimension 1 requires pure powers of exactly one variable to survive");
    r->dim = 1;
    r->cm = declared_cm.value_or(false);
  }
  Ring ring;
  ring.poly_ = std::move(r);
  return ring;
}

Ring Ring::semigroup(std::vector<int> gens) {
  if (gens.empty()) fail(ErrorKind::invalid_argument, "semigroup needs generators");
  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens[i] <= 0) fail(ErrorKind::invalid_argument, "semigroup generators must be positive");
    if (i && gens[i] <= gens[i - 1])
      fail(ErrorKind::invalid_argument, "semigroup generators must be strictly increasing");
  }
  int g = 0;
  for (int a : gens) g = std::gcd(g, a);
  if (g != 1) fail(ErrorKind::invalid_argument, "semigroup generators must have gcd 1");

  auto r = std::make_shared<SemigroupRing>();
  r->gens = std::move(gens);
  // Schur bound: Frobenius number < (a_min - 1)(a_max - 1)
  long bound = static_cast<long>(r->gens.front() - 1) * (r->gens.back() - 1) + r->gens.back() + 1;
  std::vector<char> table(static_cast<size_t>(bound) + 1, 0);
  table[0] = 1;
  for (long v = 1; v <= bound; ++v)
    for (int a : r->gens)
      if (v >= a && table[v - a]) {
        table[v] = 1;
        break;
      }
  long frob = -1;
  for (long v = bound; v >= 0; --v)
    if (!table[v]) {
      frob = v;
      break;
    }
  r->frobenius = static_cast<int>(frob);
  r->table = std::move(table);
  Ring ring;
  ring.sg_ = std::move(r);
  return ring;
}

Ring::Backend Ring::backend() const {
  return poly_ ? Backend::staircase : Backend::semigroup;
}

int Ring::dim() const { return poly_ ? poly_->dim : 1; }
bool Ring::cm() const { return poly_ ? poly_->cm : true; }
int Ring::num_vars() const {
  if (!poly_) fail(ErrorKind::unsupported, "num_vars: not a staircase backend");
  return poly_->num_vars;
}

const PolyRing& Ring::poly() const {
  if (!poly_) fail(ErrorKind::unsupported, "not a staircase backend");
  return *poly_;
}

const SemigroupRing& Ring::sg() const {
  if (!sg_) fail(ErrorKind::unsupported, "not a semigroup backend");
  return *sg_;
}

bool Ring::operator==(const Ring& o) const {
  if (poly_ && o.poly_)
    return poly_->num_vars == o.poly_->num_vars && poly_->quotient == o.poly_->quotient &&
           poly_->dim == o.poly_->dim && poly_->cm == o.poly_->cm;
  if (sg_ && o.sg_) return sg_->gens == o.sg_->gens;
  return false;
}

std::string Ring::describe() const {
  if (sg_) {
    std::string s = "k[[";
    for (size_t i = 0; i < sg_->gens.size(); ++i) {
      if (i) s += ",";
      s += "t^" + std::to_string(sg_->gens[i]);
    }
    return s + "]]";
  }
  std::string s = poly_->num_vars == 1 ? "k[[x]]" : "k[[x,y]]";
  if (!poly_->quotient.empty()) {
    s += "/(";
    for (size_t i = 0; i < poly_->quotient.size(); ++i) {
      if (i) s += ",";
      s += monomial_str(poly_->quotient[i]);
    }
    s += ")";
  }
  return s;
}

std::string Ring::monomial_str(const Exp& e) const {
  if (sg_) return e[0] == 0 ? "1" : (e[0] == 1 ? "t" : "t^" + std::to_string(e[0]));
  static const char* names[2] = {"x", "y"};
  std::string s;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace mgfil
