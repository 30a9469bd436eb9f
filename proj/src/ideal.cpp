#include "mgfil/ideal.hpp"

#include <algorithm>

#include "mgfil/error.hpp"

namespace mgfil {

namespace {

void check_same_ring(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring()) fail(ErrorKind::ring_mismatch, "ideals live in different rings");
}

}  // namespace

Ideal Ideal::make_staircase(const Ring& ring, std::vector<Exp> gens) {
  Ideal I;
  I.ring_ = ring;
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != ring.num_vars())
      fail(ErrorKind::invalid_argument, "generator arity mismatch");
    for (int e : g)
      if (e < 0) fail(ErrorKind::invalid_argument, "negative exponent in generator");
  }
  const auto& q = ring.poly().quotient;
  gens.insert(gens.end(), q.begin(), q.end());
  I.gens_ = minimalize_exps(std::move(gens));
  if (I.gens_.empty()) fail(ErrorKind::invalid_argument, "ideal needs at least one generator");
  return I;
}

// Canonicalize a value-set table: minimal conductor, then the sporadic values
// below it.  The table must be valid (correct membership) up to `bound` and the
// true value set must contain every integer > bound.
Ideal Ideal::make_semigroup_table(const Ring& ring, const std::vector<char>& table, long bound) {
  Ideal I;
  I.ring_ = ring;
  long cond = bound + 1;
  while (cond > 0 && table[cond - 1]) --cond;
  I.cond_ = cond;
  for (long v = 0; v < cond; ++v)
    if (table[v]) I.low_.push_back(v);
  return I;
}

Ideal Ideal::from_gens(const Ring& ring, std::vector<Exp> gens) {
  if (ring.backend() == Ring::Backend::staircase) return make_staircase(ring, std::move(gens));
  const auto& sg = ring.sg();
  if (gens.empty()) fail(ErrorKind::invalid_argument, "ideal needs at least one generator");
  std::vector<long> vals;
  for (const auto& g : gens) {
    if (g.size() != 1) fail(ErrorKind::invalid_argument, "semigroup monomials have one exponent");
    if (!sg.contains(g[0]))
      fail(ErrorKind::invalid_argument,
           "t^" + std::to_string(g[0]) + " is not an element of the semigroup ring");
    vals.push_back(g[0]);
  }
  long maxv = *std::max_element(vals.begin(), vals.end());
  long bound = maxv + sg.frobenius + 1;
  std::vector<char> table(static_cast<size_t>(bound) + 1, 0);
  for (long w = 0; w <= bound; ++w)
    for (long v : vals)
      if (w >= v && sg.contains(w - v)) {
        table[w] = 1;
        break;
      }
  return make_semigroup_table(ring, table, bound);
}

Ideal Ideal::unit(const Ring& ring) {
  if (ring.backend() == Ring::Backend::staircase)
    return make_staircase(ring, {Exp(ring.num_vars(), 0)});
  return from_gens(ring, {Exp{0}});
}

Ideal Ideal::principal(const Ring& ring, const Exp& m) { return from_gens(ring, {m}); }

bool Ideal::is_unit() const {
  if (ring_.backend() == Ring::Backend::staircase) return exp_total(gens_.front()) == 0;
  return value_member(0);
}

bool Ideal::is_m_primary() const {
  if (ring_.backend() == Ring::Backend::semigroup) return true;  // nonzero ideals only
  int nv = ring_.num_vars();
  if (nv == 1) return true;
  bool px = false, py = false;
  for (const auto& g : gens_) {
    if (g[1] == 0) px = true;
    if (g[0] == 0) py = true;
  }
  return px && py;
}

Length Ideal::colength() const {
  if (ring_.backend() == Ring::Backend::semigroup) {
    const auto& sg = ring_.sg();
    Int count = 0;
    for (long v = 0; v < cond_; ++v)
      if (sg.contains(v) && !value_member(v)) ++count;
    return count;
  }
  if (!is_m_primary()) return std::nullopt;
  if (ring_.num_vars() == 1) return Int(gens_.front()[0]);
  // gens sorted lex = (x asc, y desc); count columns under the staircase
  Int count = 0;
  for (size_t i = 0; i + 1 < gens_.size(); ++i)
    count += Int(gens_[i + 1][0] - gens_[i][0]) * gens_[i][1];
  return count;
}

bool Ideal::member(const Exp& m) const {
  if (ring_.backend() == Ring::Backend::semigroup) return value_member(m.at(0));
  for (const auto& g : gens_)
    if (exp_leq(g, m)) return true;
  return false;
}

int Ideal::min_gen_count() const {
  if (ring_.backend() == Ring::Backend::staircase) {
    const auto& q = ring_.poly();
    if (q.quotient.empty()) return static_cast<int>(gens_.size());
    int n = 0;
    for (const auto& g : gens_)
      if (!q.quotient_member(g)) ++n;
    return n;
  }
  // semigroup: v in V is a minimal generator iff v - a is outside V for every
  // semigroup generator a
  const auto& sg = ring_.sg();
  int n = 0;
  long top = cond_ + sg.gens.front();
  for (long v = 0; v < top; ++v) {
    if (!value_member(v)) continue;
    bool minimal = true;
    for (int a : sg.gens)
      if (v - a >= 0 && value_member(v - a) && sg.contains(a)) {
        minimal = false;
        break;
      }
    if (minimal) ++n;
  }
  return n;
}

const std::vector<Exp>& Ideal::staircase_gens() const {
  if (ring_.backend() != Ring::Backend::staircase)
    fail(ErrorKind::unsupported, "staircase_gens: semigroup backend");
  return gens_;
}

long Ideal::conductor() const { return cond_; }
const std::vector<long>& Ideal::low_values() const { return low_; }

bool Ideal::value_member(long v) const {
  if (v >= cond_) return true;
  return std::binary_search(low_.begin(), low_.end(), v);
}

std::string Ideal::str() const {
  if (ring_.backend() == Ring::Backend::staircase) {
    std::string s = "(";
    for (size_t i = 0; i < gens_.size(); ++i) {
      if (i) s += ", ";
      s += ring_.monomial_str(gens_[i]);
    }
    return s + ")";
  }
  std::string s = "{";
  for (size_t i = 0; i < low_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(low_[i]);
  }
  if (!low_.empty()) s += ",";
  s += ">=" + std::to_string(cond_) + "}";
  return s;
}

bool operator==(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  if (a.ring_.backend() == Ring::Backend::staircase) return a.gens_ == b.gens_;
  return a.cond_ == b.cond_ && a.low_ == b.low_;
}

namespace {

// Dense value-set table of a semigroup ideal on [0, bound].
std::vector<char> sg_table(const Ideal& a, long bound) {
  std::vector<char> t(static_cast<size_t>(bound) + 1, 0);
  for (long v = 0; v <= bound; ++v) t[v] = a.value_member(v) ? 1 : 0;
  return t;
}

}  // namespace

Ideal sum(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  if (a.ring().backend() == Ring::Backend::staircase) {
    std::vector<Exp> g(a.gens_);
    g.insert(g.end(), b.gens_.begin(), b.gens_.end());
    return Ideal::make_staircase(a.ring(), std::move(g));
  }
  long bound = std::max(a.cond_, b.cond_);
  auto ta = sg_table(a, bound), tb = sg_table(b, bound);
  for (long v = 0; v <= bound; ++v) ta[v] |= tb[v];
  return Ideal::make_semigroup_table(a.ring(), ta, bound);
}

Ideal product(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  if (a.ring().backend() == Ring::Backend::staircase) {
    std::vector<Exp> g;
    g.reserve(a.gens_.size() * b.gens_.size());
    for (const auto& u : a.gens_)
      for (const auto& v : b.gens_) g.push_back(exp_add(u, v));
    return Ideal::make_staircase(a.ring(), std::move(g));
  }
  long bound = a.cond_ + b.cond_ + 1;
  auto ta = sg_table(a, bound), tb = sg_table(b, bound);
  std::vector<char> t(static_cast<size_t>(bound) + 1, 0);
  for (long u = 0; u <= bound; ++u) {
    if (!ta[u]) continue;
    for (long v = 0; u + v <= bound; ++v)
      if (tb[v]) t[u + v] = 1;
  }
  return Ideal::make_semigroup_table(a.ring(), t, bound);
}

Ideal power(const Ideal& a, int k) {
  if (k < 0) fail(ErrorKind::invalid_argument, "power: negative exponent");
  Ideal result = Ideal::unit(a.ring());
  Ideal base = a;
  while (k > 0) {
    if (k & 1) result = product(result, base);
    k >>= 1;
    if (k) base = product(base, base);
  }
  return result;
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  if (a.ring().backend() == Ring::Backend::staircase) {
    std::vector<Exp> g;
    g.reserve(a.gens_.size() * b.gens_.size());
    for (const auto& u : a.gens_)
      for (const auto& v : b.gens_) {
        Exp w(u);
        for (size_t i = 0; i < w.size(); ++i) w[i] = std::max(w[i], v[i]);
        g.push_back(std::move(w));
      }
    return Ideal::make_staircase(a.ring(), std::move(g));
  }
  long bound = std::max(a.cond_, b.cond_);
  auto ta = sg_table(a, bound), tb = sg_table(b, bound);
  for (long v = 0; v <= bound; ++v) ta[v] &= tb[v];
  return Ideal::make_semigroup_table(a.ring(), ta, bound);
}

Ideal colon(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  if (a.ring().backend() == Ring::Backend::staircase) {
    // intersection over generators g of b of (a : x^g), each generated by the
    // truncated differences max(m - g, 0)
    Ideal result = Ideal::unit(a.ring());
    for (const auto& g : b.gens_) {
      std::vector<Exp> part;
      part.reserve(a.gens_.size());
      for (const auto& m : a.gens_) {
        Exp w(m);
        for (size_t i = 0; i < w.size(); ++i) w[i] = std::max(w[i] - g[i], 0);
        part.push_back(std::move(w));
      }
      result = intersect(result, Ideal::make_staircase(a.ring(), std::move(part)));
    }
    return result;
  }
  // { v in S : v + valueset(b) subseteq valueset(a) }; membership of the tail
  // of b is automatic once v + cond(b) >= cond(a)
  const auto& sg = a.ring().sg();
  long bound = std::max(a.cond_, static_cast<long>(sg.frobenius) + 1);
  std::vector<char> t(static_cast<size_t>(bound) + 1, 0);
  auto tb = sg_table(b, b.cond_);
  for (long v = 0; v <= bound; ++v) {
    if (!sg.contains(v)) continue;
    bool ok = true;
    for (long w = 0; w < b.cond_ && ok; ++w)
      if (tb[w] && !a.value_member(v + w)) ok = false;
    if (ok && v + b.cond_ < a.cond_) {
      // tail values of b from cond(b) to cond(a)-v must land in a as well
      for (long w = b.cond_; v + w < a.cond_ && ok; ++w)
        if (!a.value_member(v + w)) ok = false;
    }
    if (ok) t[v] = 1;
  }
  return Ideal::make_semigroup_table(a.ring(), t, bound);
}

bool contains(const Ideal& outer, const Ideal& inner) {
  check_same_ring(outer, inner);
  if (outer.ring().backend() == Ring::Backend::staircase) {
    for (const auto& g : inner.staircase_gens())
      if (!outer.member(g)) return false;
    return true;
  }
  for (long v : inner.low_values())
    if (!outer.value_member(v)) return false;
  for (long v = std::min(inner.conductor(), outer.conductor()); v < outer.conductor(); ++v)
    if (inner.value_member(v) && !outer.value_member(v)) return false;
  return true;
}

Ideal integral_closure(const Ideal& a, int k_max) {
  const Ring& ring = a.ring();
  if (ring.backend() != Ring::Backend::staircase)
    fail(ErrorKind::unsupported, "integral_closure: semigroup backend not supported");
  if (!ring.poly().quotient.empty())
    fail(ErrorKind::unsupported, "integral_closure: quotient rings not supported");
  const auto& gens = a.staircase_gens();
  if (ring.num_vars() == 1 || gens.size() == 1) return a;

  // Lower convex hull of the staircase corners (gens sorted lex: x asc, y desc).
  std::vector<Exp> hull;
  for (const auto& p : gens) {
    while (hull.size() >= 2) {
      const Exp& q1 = hull[hull.size() - 2];
      const Exp& q2 = hull[hull.size() - 1];
      long cross = static_cast<long>(q2[0] - q1[0]) * (p[1] - q1[1]) -
                   static_cast<long>(q2[1] - q1[1]) * (p[0] - q1[0]);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }

  const int x_min = hull.front()[0];
  const int x_max = hull.back()[0];
  const int y_min = hull.back()[1];
  std::vector<Exp> out;
  for (int u = x_min; u <= x_max; ++u) {
    int v = y_min;
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
      const Exp& p1 = hull[i];
      const Exp& p2 = hull[i + 1];
      // on or above the edge line: (y1-y2)(u-x1) + (x2-x1)(v-y1) >= 0
      long dx = p2[0] - p1[0];
      long dy = p1[1] - p2[1];
      // v >= y1 - dy*(u-x1)/dx, exact ceiling
      long num = static_cast<long>(p1[1]) * dx - dy * (u - p1[0]);
      long vmin = num >= 0 ? (num + dx - 1) / dx : -((-num) / dx);
      v = std::max(v, static_cast<int>(vmin));
    }
    out.push_back(Exp{u, v});
  }
  Ideal closed = Ideal::from_gens(ring, std::move(out));

  // Power-oracle validation: every claimed generator integrates over a.
  for (const auto& g : closed.staircase_gens()) {
    bool certified = false;
    Ideal pw = Ideal::unit(ring);
    for (int k = 1; k <= k_max && !certified; ++k) {
      pw = product(pw, a);
      if (pw.member(exp_scale(g, k))) certified = true;
    }
    if (!certified)
      fail(ErrorKind::internal,
           "integral_closure: generator " + ring.monomial_str(g) +
               " failed the power-oracle certification");
  }
  return closed;
}

}  // namespace mgfil
