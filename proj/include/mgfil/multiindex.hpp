#ifndef MGFIL_MULTIINDEX_HPP
#define MGFIL_MULTIINDEX_HPP

#include <functional>
#include <string>
#include <vector>

namespace mgfil {

// Element of Z^s with the componentwise partial order.
class MultiIndex {
public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> c) : c_(std::move(c)) {}

  static MultiIndex zero(int s) { return MultiIndex(std::vector<int>(s, 0)); }
  static MultiIndex diag(int s, int k) { return MultiIndex(std::vector<int>(s, k)); }
  static MultiIndex unit(int s, int i);

  int size() const { return static_cast<int>(c_.size()); }
  int operator[](int i) const { return c_[i]; }
  const std::vector<int>& coords() const { return c_; }

  // n+ : negative entries clamped to zero.
  MultiIndex plus() const;
  bool is_nonnegative() const;

  MultiIndex operator+(const MultiIndex& o) const;
  MultiIndex operator-(const MultiIndex& o) const;
  // n + k*e
  MultiIndex shifted(int k) const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.c_ == b.c_; }
  friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return a.c_ != b.c_; }
  // lexicographic; used for map keys and deterministic output order
  friend bool operator<(const MultiIndex& a, const MultiIndex& b) { return a.c_ < b.c_; }

  std::string str() const;

private:
  std::vector<int> c_;
};

// m >= n componentwise
bool dominates(const MultiIndex& m, const MultiIndex& n);
// componentwise max
MultiIndex join(const MultiIndex& a, const MultiIndex& b);

// Visit every lattice point of [lo, hi] (inclusive), lexicographic order.
void for_each_point(const MultiIndex& lo, const MultiIndex& hi,
                    const std::function<void(const MultiIndex&)>& fn);
std::vector<MultiIndex> box_points(const MultiIndex& lo, const MultiIndex& hi);

// Antichain of minimal elements under componentwise <=, sorted.
std::vector<MultiIndex> minimal_elements(std::vector<MultiIndex> pts);

std::string corners_str(const std::vector<MultiIndex>& corners);

}  // namespace mgfil

#endif
