#ifndef MGFIL_REGION_HPP
#define MGFIL_REGION_HPP

#include <functional>
#include <string>
#include <vector>

#include "mgfil/multiindex.hpp"

namespace mgfil {

// Up-closed subset of a lattice box, certified by sampling: n belongs iff the
// pointwise predicate holds at every m with n <= m <= (box+margin)e.  The
// certificate (box, margin) travels with the region; nothing is claimed
// beyond it.
struct Region {
  int s = 0;
  int box = 0;
  int margin = 0;
  MultiIndex lo;                     // lower corner of the searched box
  std::vector<MultiIndex> corners;   // minimal elements, an antichain

  bool member(const MultiIndex& n) const;
  bool empty() const { return corners.empty(); }
  bool is_all() const;  // corners == {lo}

  std::string str() const;

  // Evaluate `pointwise` on [lo, (box+margin)e], then keep the n in [lo, box e]
  // whose whole upper window satisfies it.  `threads` > 1 fans the pointwise
  // sweep out over worker threads; the result does not depend on it.
  // threads = 0 uses the process-wide setting.
  static Region from_predicate(int s, const MultiIndex& lo, int box, int margin,
                               const std::function<bool(const MultiIndex&)>& pointwise,
                               int threads = 0);
};

// process-wide worker count for box sweeps (default 1)
void set_sweep_threads(int n);
int sweep_threads();

// Windowed test of the single point `at`: the predicate holds on the whole
// box [at, (box+margin)e].  Equivalent to `at` being a member of the region
// without computing all of it.
bool holds_from(const MultiIndex& at, int box, int margin,
                const std::function<bool(const MultiIndex&)>& pointwise);

}  // namespace mgfil

#endif
