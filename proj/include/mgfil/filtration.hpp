#ifndef MGFIL_FILTRATION_HPP
#define MGFIL_FILTRATION_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mgfil/ideal.hpp"
#include "mgfil/multiindex.hpp"

namespace mgfil {

enum class FiltrationKind {
  powers,        // F(n) = I_1^{n1+} ... I_s^{ns+}
  closure,       // integral closures of the power products
  ratliff_rush,  // Ratliff-Rush closure of the power filtration
};

std::string kind_str(FiltrationKind k);

struct AdmissibleWindowReport {
  struct Direction {
    int i;
    std::optional<int> least_r;          // least r with F(n+e_i) = I_i F(n) for n_i >= r
    std::vector<MultiIndex> failures;    // nonempty when least_r is unset
  };
  int box;
  std::vector<Direction> directions;
  bool ok() const;
};

// Multigraded filtration n -> F(n) over Z^s with the n+ convention.  Lazy and
// cached; evaluations may run concurrently (cache writes for equal keys carry
// equal values, so last-write-wins is sound).
class Filtration {
public:
  Filtration(FiltrationKind kind, std::vector<Ideal> base);

  int arity() const { return static_cast<int>(base_.size()); }
  const Ring& ring() const { return base_.front().ring(); }
  FiltrationKind kind() const { return kind_; }
  const std::vector<Ideal>& base() const { return base_; }

  Ideal at(const MultiIndex& n) const;
  Ideal base_power(int i, int k) const;  // I_i^k, cached
  Ideal product_ideal() const;           // I_1 ... I_s

  // Stable value of the chain (F(n+ke) : F(e)^k).  The chain is increasing and
  // eventually constant; `margin` consecutive equal values end the scan.
  Ideal ratliff_rush(const MultiIndex& n, int margin = 3, int k_max = 32) const;

  AdmissibleWindowReport check_admissible_window(int box) const;

  // Test seam: plant a cache entry (used by negative controls).
  void prime_cache(const MultiIndex& n, Ideal value) const;

  std::string describe() const;

private:
  FiltrationKind kind_;
  std::vector<Ideal> base_;
  std::shared_ptr<Filtration> inner_;  // power filtration under a ratliff_rush kind
  mutable std::mutex mu_;
  mutable std::map<MultiIndex, Ideal> cache_;
  mutable std::map<std::pair<int, int>, Ideal> power_cache_;

  Ideal powers_at(const MultiIndex& nplus) const;
  Ideal compute(const MultiIndex& nplus) const;
};

}  // namespace mgfil

#endif
