#ifndef MGFIL_IDEAL_HPP
#define MGFIL_IDEAL_HPP

#include <string>
#include <vector>

#include "mgfil/ints.hpp"
#include "mgfil/ring.hpp"

namespace mgfil {

// Monomially generated ideal in either ring backend, kept in canonical form:
//  - staircase: minimal generators sorted lexicographically, with the ring's
//    quotient generators adjoined before minimalization;
//  - semigroup: (conductor, low-value set) with minimal conductor.
// Immutable after construction; equality is canonical-form comparison.
class Ideal {
public:
  static Ideal from_gens(const Ring& ring, std::vector<Exp> gens);
  static Ideal unit(const Ring& ring);
  static Ideal principal(const Ring& ring, const Exp& m);

  const Ring& ring() const { return ring_; }

  bool is_unit() const;
  bool is_m_primary() const;
  // Number of monomials/valuations of the ring outside the ideal; nullopt = infinite.
  Length colength() const;
  bool member(const Exp& m) const;
  // Minimal generators of the ideal's image in the (quotient) ring.
  int min_gen_count() const;

  // staircase backend: canonical generators (quotient adjoined)
  const std::vector<Exp>& staircase_gens() const;
  // semigroup backend
  long conductor() const;
  const std::vector<long>& low_values() const;
  bool value_member(long v) const;

  std::string str() const;

  friend bool operator==(const Ideal& a, const Ideal& b);
  friend bool operator!=(const Ideal& a, const Ideal& b) { return !(a == b); }

  friend Ideal sum(const Ideal& a, const Ideal& b);
  friend Ideal product(const Ideal& a, const Ideal& b);
  friend Ideal intersect(const Ideal& a, const Ideal& b);
  // { r : r*b subseteq a }
  friend Ideal colon(const Ideal& a, const Ideal& b);

private:
  Ideal() = default;
  Ring ring_;
  std::vector<Exp> gens_;   // staircase canonical form
  long cond_ = 0;           // semigroup canonical form
  std::vector<long> low_;

  static Ideal make_staircase(const Ring&, std::vector<Exp> gens);
  static Ideal make_semigroup_table(const Ring&, const std::vector<char>& table, long bound);
};

Ideal power(const Ideal& a, int k);
// outer contains inner?
bool contains(const Ideal& outer, const Ideal& inner);

// Integer points of the Newton polyhedron (staircase backend, no quotient).
// Every claimed generator is validated against the power oracle:
// some k <= k_max with (x^g)^k in a^k.
Ideal integral_closure(const Ideal& a, int k_max = 6);

}  // namespace mgfil

#endif
