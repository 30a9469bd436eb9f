#include "mgfil/multiindex.hpp"

#include <algorithm>

#include "mgfil/error.hpp"

namespace mgfil {

MultiIndex MultiIndex::unit(int s, int i) {
  std::vector<int> c(s, 0);
  c[i] = 1;
  return MultiIndex(std::move(c));
}

MultiIndex MultiIndex::plus() const {
  std::vector<int> c(c_);
  for (int& v : c)
    if (v < 0) v = 0;
  return MultiIndex(std::move(c));
}

bool MultiIndex::is_nonnegative() const {
  return std::all_of(c_.begin(), c_.end(), [](int v) { return v >= 0; });
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  std::vector<int> c(c_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
  return MultiIndex(std::move(c));
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
  std::vector<int> c(c_);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c_[i];
  return MultiIndex(std::move(c));
}

MultiIndex MultiIndex::shifted(int k) const {
  std::vector<int> c(c_);
  for (int& v : c) v += k;
  return MultiIndex(std::move(c));
}

std::string MultiIndex::str() const {
  std::string s = "(";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  return s + ")";
}

bool dominates(const MultiIndex& m, const MultiIndex& n) {
  for (int i = 0; i < m.size(); ++i)
    if (m[i] < n[i]) return false;
  return true;
}

MultiIndex join(const MultiIndex& a, const MultiIndex& b) {
  std::vector<int> c(a.coords());
  for (size_t i = 0; i < c.size(); ++i) c[i] = std::max(c[i], b[i]);
  return MultiIndex(std::move(c));
}

void for_each_point(const MultiIndex& lo, const MultiIndex& hi,
                    const std::function<void(const MultiIndex&)>& fn) {
  const int s = lo.size();
  std::vector<int> cur(lo.coords());
  for (int i = 0; i < s; ++i)
    if (hi[i] < lo[i]) return;
  while (true) {
    fn(MultiIndex(cur));
    int i = s - 1;
    while (i >= 0) {
      if (cur[i] < hi[i]) {
        ++cur[i];
        break;
      }
      cur[i] = lo[i];
      --i;
    }
    if (i < 0) break;
  }
}

std::vector<MultiIndex> box_points(const MultiIndex& lo, const MultiIndex& hi) {
  std::vector<MultiIndex> out;
  for_each_point(lo, hi, [&](const MultiIndex& p) { out.push_back(p); });
  return out;
}

std::vector<MultiIndex> minimal_elements(std::vector<MultiIndex> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<MultiIndex> out;
  for (const auto& p : pts) {
    bool dominated = false;
    for (const auto& q : pts) {
      if (q != p && dominates(p, q)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(p);
  }
  return out;
}

std::string corners_str(const std::vector<MultiIndex>& corners) {
  std::string s = "{";
  for (size_t i = 0; i < corners.size(); ++i) {
    if (i) s += ", ";
    s += corners[i].str();
  }
  return s + "}";
}

}  // namespace mgfil
