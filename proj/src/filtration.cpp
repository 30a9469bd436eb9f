#include "mgfil/filtration.hpp"

#include <algorithm>

#include "mgfil/error.hpp"

namespace mgfil {

std::string kind_str(FiltrationKind k) {
  switch (k) {
    case FiltrationKind::powers: return "powers";
    case FiltrationKind::closure: return "closure";
    case FiltrationKind::ratliff_rush: return "ratliff-rush";
  }
  return "?";
}

bool AdmissibleWindowReport::ok() const {
  return std::all_of(directions.begin(), directions.end(),
                     [](const Direction& d) { return d.least_r.has_value(); });
}

Filtration::Filtration(FiltrationKind kind, std::vector<Ideal> base)
    : kind_(kind), base_(std::move(base)) {
  if (base_.empty()) fail(ErrorKind::invalid_argument, "filtration needs at least one ideal");
  for (const auto& I : base_) {
    if (I.ring() != ring()) fail(ErrorKind::ring_mismatch, "filtration ideals on different rings");
    if (!I.is_m_primary() || !I.colength())
      fail(ErrorKind::not_m_primary,
           "filtration base ideal " + I.str() + " has infinite colength");
  }
  if (kind_ == FiltrationKind::closure &&
      (ring().backend() != Ring::Backend::staircase || !ring().poly().quotient.empty()))
    fail(ErrorKind::unsupported, "closure filtration requires a free power-series ring");
  if (kind_ == FiltrationKind::ratliff_rush)
    inner_ = std::make_shared<Filtration>(FiltrationKind::powers, base_);
}

Ideal Filtration::base_power(int i, int k) const {
  if (k <= 0) return Ideal::unit(ring());
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = power_cache_.find({i, k});
    if (it != power_cache_.end()) return it->second;
  }
  Ideal half = base_power(i, k / 2);
  Ideal value = product(half, half);
  if (k & 1) value = product(value, base_[i]);
  std::lock_guard<std::mutex> lock(mu_);
  return power_cache_.emplace(std::make_pair(i, k), std::move(value)).first->second;
}

Ideal Filtration::product_ideal() const {
  Ideal p = base_.front();
  for (size_t i = 1; i < base_.size(); ++i) p = product(p, base_[i]);
  return p;
}

Ideal Filtration::powers_at(const MultiIndex& nplus) const {
  Ideal p = base_power(0, nplus[0]);
  for (int i = 1; i < arity(); ++i) p = product(p, base_power(i, nplus[i]));
  return p;
}

Ideal Filtration::compute(const MultiIndex& nplus) const {
  switch (kind_) {
    case FiltrationKind::powers: return powers_at(nplus);
    case FiltrationKind::closure: return integral_closure(powers_at(nplus));
    case FiltrationKind::ratliff_rush: return inner_->ratliff_rush(nplus);
  }
  fail(ErrorKind::internal, "unknown filtration kind");
}

Ideal Filtration::at(const MultiIndex& n) const {
  if (n.size() != arity()) fail(ErrorKind::invalid_argument, "multi-index arity mismatch");
  MultiIndex key = n.plus();
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  Ideal value = compute(key);
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(key, std::move(value)).first->second;
}

Ideal Filtration::ratliff_rush(const MultiIndex& n, int margin, int k_max) const {
  MultiIndex base = n.plus();
  Ideal fe = at(MultiIndex::diag(arity(), 1));
  Ideal fe_power = fe;
  Ideal current = colon(at(base.shifted(1)), fe_power);
  int run = 1;
  for (int k = 2; k <= k_max; ++k) {
    fe_power = product(fe_power, fe);
    Ideal next = colon(at(base.shifted(k)), fe_power);
    if (next == current) {
      if (++run >= margin) return current;
    } else {
      current = next;
      run = 1;
    }
  }
  fail(ErrorKind::no_stabilization,
       "Ratliff-Rush chain did not stabilize within " + std::to_string(k_max) + " steps at " +
           n.str());
}

AdmissibleWindowReport Filtration::check_admissible_window(int box) const {
  if (box < 2) fail(ErrorKind::invalid_argument, "admissibility window needs box >= 2");
  AdmissibleWindowReport report;
  report.box = box;
  const int s = arity();
  for (int i = 0; i < s; ++i) {
    AdmissibleWindowReport::Direction dir;
    dir.i = i;
    std::vector<MultiIndex> violations;
    for_each_point(MultiIndex::zero(s), MultiIndex::diag(s, box), [&](const MultiIndex& n) {
      if (at(n + MultiIndex::unit(s, i)) != product(base_[i], at(n))) violations.push_back(n);
    });
    if (violations.empty()) {
      dir.least_r = 0;
    } else {
      int worst = 0;
      for (const auto& v : violations) worst = std::max(worst, v[i]);
      if (worst + 1 <= box)
        dir.least_r = worst + 1;
      else
        dir.failures = std::move(violations);
    }
    report.directions.push_back(std::move(dir));
  }
  return report;
}

void Filtration::prime_cache(const MultiIndex& n, Ideal value) const {
  std::lock_guard<std::mutex> lock(mu_);
  cache_.insert_or_assign(n.plus(), std::move(value));
}

std::string Filtration::describe() const {
  std::string s = kind_str(kind_) + "{";
  for (size_t i = 0; i < base_.size(); ++i) {
    if (i) s += ", ";
    s += base_[i].str();
  }
  return s + "} over " + ring().describe();
}

}  // namespace mgfil
