#ifndef MGFIL_RING_HPP
#define MGFIL_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mgfil {

// Exponent data of a monomial.  Staircase backend: one entry per variable.
// Semigroup backend: a single entry, the t-adic valuation.
using Exp = std::vector<int>;

Exp exp_add(const Exp& a, const Exp& b);
Exp exp_scale(const Exp& a, int k);
bool exp_leq(const Exp& a, const Exp& b);  // divides: a <= b componentwise
int exp_total(const Exp& a);

// Antichain of minimal exponents, sorted lexicographically.
std::vector<Exp> minimalize_exps(std::vector<Exp> v);

// Power-series ring k[[x]] or k[[x,y]], optionally modulo a monomial ideal.
struct PolyRing {
  int num_vars = 0;
  std::vector<Exp> quotient;  // minimal generators (antichain); empty for the free ring
  int dim = 0;                // Krull dimension, validated against quotient
  bool cm = true;             // Cohen-Macaulay flag; always true when quotient empty

  bool quotient_member(const Exp& e) const;
};

// Numerical semigroup ring k[[t^a1, ..., t^ak]].
struct SemigroupRing {
  std::vector<int> gens;  // strictly increasing, positive, gcd 1
  int frobenius = -1;     // largest integer not in the semigroup (-1 when S = N)
  std::vector<char> table;  // membership for 0..frobenius (+ slack)

  bool contains(long v) const;
};

class Ring {
public:
  enum class Backend { staircase, semigroup };

  // quotient empty: dim = num_vars, cm = true; declared values, if given, must agree.
  // quotient nonempty: num_vars must be 2; declared dim must be 1 and is validated
  // (pure powers of exactly one variable must survive the quotient); cm is the
  // caller's declaration.
  static Ring polynomial(int num_vars, std::vector<Exp> quotient = {},
                         std::optional<int> declared_dim = std::nullopt,
                         std::optional<bool> declared_cm = std::nullopt);
  static Ring semigroup(std::vector<int> gens);

  Backend backend() const;
  int dim() const;
  bool cm() const;
  int num_vars() const;  // staircase backend only

  const PolyRing& poly() const;
  const SemigroupRing& sg() const;

  bool operator==(const Ring& o) const;
  bool operator!=(const Ring& o) const { return !(*this == o); }

  std::string describe() const;
  std::string monomial_str(const Exp& e) const;

private:
  std::shared_ptr<const PolyRing> poly_;
  std::shared_ptr<const SemigroupRing> sg_;
};

}  // namespace mgfil

#endif
