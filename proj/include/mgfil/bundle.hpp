#ifndef MGFIL_BUNDLE_HPP
#define MGFIL_BUNDLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "mgfil/hilbert.hpp"
#include "mgfil/postulation.hpp"
#include "mgfil/specdoc.hpp"

namespace mgfil {

struct RunOptions {
  int box = -1;     // -1: take the document's value
  int margin = -1;
  int offset = -1;
  int threads = 1;
  std::string command;  // empty: take the document's value
};

struct RegionOut {
  std::string name;
  std::vector<MultiIndex> corners;
  int box = 0;
  int margin = 0;
};

struct ReductionOut {
  std::string name;
  std::string source;  // "user" or "search"
  std::vector<std::string> rows;
  std::vector<std::string> y;
  bool good = false;
  int reduction_number = -1;
  RegionOut vectors;
  std::vector<std::optional<int>> induced_least_n;
};

struct JointOut {
  std::string name;
  std::string source;
  std::string elements;
  bool number_zero = false;
};

struct HPRow {
  MultiIndex n;
  Int H;
  Int P;
};

struct HunekeRow {
  MultiIndex n;
  Int lhs;
  Int rhs;
};

struct H1Row {
  MultiIndex n;
  Int length;
};

// Everything a pipeline run produced.  All numeric content is exact; the only
// non-deterministic field is the timing, which the structured format omits.
struct ResultBundle {
  std::string command;
  int box = 6, margin = 3, offset = 8;
  std::string ring_desc;
  std::string filtration_desc;
  int dim = 0, arity = 0;

  std::optional<HilbertPoly> poly;
  std::vector<HPRow> hp_table;
  std::optional<CoeffIdentityReport> coeff_identity;
  std::vector<RegionOut> vanishing_regions;  // difference function, j = 0,1,2

  std::vector<ReductionOut> reductions;
  std::vector<JointOut> joints;
  std::optional<int> slice_r[2];

  std::optional<RegionOut> postulation;
  std::optional<bool> negative_excluded;

  std::string huneke_reduction;
  std::vector<HunekeRow> huneke_rows;
  std::optional<bool> huneke_all_equal;

  std::vector<H1Row> h1_rows;
  std::optional<bool> h1_vanishing;

  std::optional<bool> admissible_window_ok;

  std::vector<TheoremReport> theorems;
  std::vector<std::string> notes;

  std::string verdict;  // consistent | not-applicable | inconsistent
  int exit_code = 0;
  long elapsed_ms = 0;
};

ResultBundle run(const SpecDocument& doc, const RunOptions& opt = {});

// table (aligned text) | structured (stable JSON) | plotdata (lattice CSV)
std::string emit(const ResultBundle& b, const std::string& format);

}  // namespace mgfil

#endif
