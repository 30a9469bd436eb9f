#include "mgfil/region.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "mgfil/error.hpp"

namespace mgfil {

namespace {
std::atomic<int> g_sweep_threads{1};
}

void set_sweep_threads(int n) { g_sweep_threads = n < 1 ? 1 : n; }
int sweep_threads() { return g_sweep_threads; }

bool Region::member(const MultiIndex& n) const {
  for (const auto& c : corners)
    if (dominates(n, c)) return true;
  return false;
}

bool Region::is_all() const { return corners.size() == 1 && corners.front() == lo; }

std::string Region::str() const {
  return corners_str(corners) + " verified on box [" + lo.str() + ", " +
         MultiIndex::diag(s, box).str() + "] margin " + std::to_string(margin);
}

Region Region::from_predicate(int s, const MultiIndex& lo, int box, int margin,
                              const std::function<bool(const MultiIndex&)>& pointwise,
                              int threads) {
  Region r;
  r.s = s;
  r.box = box;
  r.margin = margin;
  r.lo = lo;
  if (threads <= 0) threads = sweep_threads();
  const MultiIndex top = MultiIndex::diag(s, box + margin);
  const auto pts = box_points(lo, top);

  std::vector<char> good(pts.size(), 0);
  if (threads <= 1 || pts.size() < 32) {
    for (size_t i = 0; i < pts.size(); ++i) good[i] = pointwise(pts[i]) ? 1 : 0;
  } else {
    const size_t n = pts.size();
    const int workers = std::min<int>(threads, static_cast<int>(n));
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&]() {
        size_t i;
        while ((i = next.fetch_add(1)) < n) good[i] = pointwise(pts[i]) ? 1 : 0;
      });
    for (auto& t : pool) t.join();
  }

  // windowed(n) = good(n) and windowed(n + e_i) for every direction
  std::vector<int> dims(s);
  for (int i = 0; i < s; ++i) dims[i] = top[i] - lo[i] + 1;
  auto index_of = [&](const MultiIndex& p) {
    size_t idx = 0;
    for (int i = 0; i < s; ++i) idx = idx * dims[i] + static_cast<size_t>(p[i] - lo[i]);
    return idx;
  };
  std::vector<char> windowed(pts.size(), 0);
  for (size_t k = pts.size(); k-- > 0;) {
    const MultiIndex& p = pts[k];
    char w = good[k];
    for (int i = 0; i < s && w; ++i) {
      if (p[i] < top[i]) w = windowed[index_of(p + MultiIndex::unit(s, i))];
    }
    windowed[k] = w;
  }

  // minimal members within [lo, box e]
  std::vector<MultiIndex> members;
  for (size_t k = 0; k < pts.size(); ++k) {
    if (!windowed[k]) continue;
    const MultiIndex& p = pts[k];
    bool inside = true;
    for (int i = 0; i < s; ++i)
      if (p[i] > box) inside = false;
    if (!inside) continue;
    bool minimal = true;
    for (int i = 0; i < s && minimal; ++i)
      if (p[i] > lo[i] && windowed[index_of(p - MultiIndex::unit(s, i))]) minimal = false;
    if (minimal) members.push_back(p);
  }
  r.corners = minimal_elements(std::move(members));
  return r;
}

bool holds_from(const MultiIndex& at, int box, int margin,
                const std::function<bool(const MultiIndex&)>& pointwise) {
  const int s = at.size();
  bool ok = true;
  for_each_point(at, MultiIndex::diag(s, box + margin), [&](const MultiIndex& m) {
    if (ok && !pointwise(m)) ok = false;
  });
  return ok;
}

}  // namespace mgfil
