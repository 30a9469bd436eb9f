#ifndef MGFIL_SPECDOC_HPP
#define MGFIL_SPECDOC_HPP

#include <string>
#include <vector>

#include "mgfil/filtration.hpp"

namespace mgfil {

// Parsed analysis document.  The format is a flat, line-oriented key/value
// file with named [blocks]; see docs/specfile.md for the grammar.
struct SpecDocument {
  Ring ring;
  std::vector<std::string> ideal_names;  // declaration order
  std::vector<Ideal> ideals;

  FiltrationKind kind = FiltrationKind::powers;
  std::vector<std::string> filtration_ideals;  // names, in order

  struct NamedMatrix {
    std::string name;
    std::vector<std::string> row_names;  // ideal name per row
    std::vector<std::vector<Exp>> rows;  // reordered to the filtration's ideal order
    int line = 0;
  };
  std::vector<NamedMatrix> reductions;

  struct NamedJoint {
    std::string name;
    std::vector<int> type;
    std::vector<std::string> row_names;
    std::vector<std::vector<Exp>> rows;
    int line = 0;
  };
  std::vector<NamedJoint> joints;

  int box = 6;
  int margin = 3;
  int offset = 8;
  int search_bound = 1;
  std::string command = "verify-all";

  const Ideal& ideal_by_name(const std::string& name, int line = -1) const;
  std::vector<Ideal> filtration_base() const;
  Filtration make_filtration() const;
};

SpecDocument parse_spec(const std::string& text);

}  // namespace mgfil

#endif
