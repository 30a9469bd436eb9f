#include "mgfil/specdoc.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include "mgfil/error.hpp"

namespace mgfil {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& s, int line, const std::string& what) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (...) {
    fail(ErrorKind::parse, "malformed integer for " + what + ": '" + s + "'", line);
  }
}

// x, y^3, x^2*y, t^6, 1
Exp parse_monomial(const std::string& tok, const Ring& ring, int line) {
  const bool sg = ring.backend() == Ring::Backend::semigroup;
  const int nv = sg ? 1 : ring.num_vars();
  Exp e(nv, 0);
  if (tok == "1") return e;
  size_t pos = 0;
  while (pos < tok.size()) {
    char v = static_cast<char>(std::tolower(static_cast<unsigned char>(tok[pos])));
    int idx;
    if (sg) {
      if (v != 't') fail(ErrorKind::parse, "malformed monomial '" + tok + "' (expected t^k)", line);
      idx = 0;
    } else if (v == 'x') {
      idx = 0;
    } else if (v == 'y' && nv == 2) {
      idx = 1;
    } else {
      fail(ErrorKind::parse, "malformed monomial '" + tok + "': unknown variable", line);
    }
    ++pos;
    int exp = 1;
    if (pos < tok.size() && tok[pos] == '^') {
      ++pos;
      size_t start = pos;
      while (pos < tok.size() && (std::isdigit(static_cast<unsigned char>(tok[pos])) || tok[pos] == '-'))
        ++pos;
      exp = parse_int(tok.substr(start, pos - start), line, "exponent");
      if (exp < 0) fail(ErrorKind::parse, "negative exponent in '" + tok + "'", line);
    }
    e[idx] += exp;
    if (pos < tok.size()) {
      if (tok[pos] != '*') fail(ErrorKind::parse, "malformed monomial '" + tok + "'", line);
      ++pos;
      if (pos == tok.size()) fail(ErrorKind::parse, "malformed monomial '" + tok + "'", line);
    }
  }
  return e;
}

struct Block {
  std::string header;  // e.g. "ring", "ideal I"
  int line = 0;
  std::vector<std::pair<std::string, std::pair<std::string, int>>> entries;
};

std::vector<Block> lex_blocks(const std::string& text) {
  std::vector<Block> blocks;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(ErrorKind::parse, "unterminated block header", lineno);
      blocks.push_back({trim(line.substr(1, line.size() - 2)), lineno, {}});
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      fail(ErrorKind::parse, "expected 'key = value' or '[block]'", lineno);
    if (blocks.empty()) fail(ErrorKind::parse, "entry outside any block", lineno);
    blocks.back().entries.push_back(
        {trim(line.substr(0, eq)), {trim(line.substr(eq + 1)), lineno}});
  }
  return blocks;
}

std::optional<std::pair<std::string, int>> find_key(const Block& b, const std::string& key) {
  for (const auto& [k, v] : b.entries)
    if (k == key) return v;
  return std::nullopt;
}

Ring build_ring(const Block& b) {
  auto backend = find_key(b, "backend");
  if (!backend) fail(ErrorKind::parse, "ring block needs 'backend'", b.line);
  try {
    if (backend->first == "semigroup") {
      auto gens = find_key(b, "generators");
      if (!gens) fail(ErrorKind::parse, "semigroup ring needs 'generators'", b.line);
      std::vector<int> vals;
      for (const auto& t : split_ws(gens->first))
        vals.push_back(parse_int(t, gens->second, "semigroup generator"));
      return Ring::semigroup(vals);
    }
    if (backend->first != "polynomial")
      fail(ErrorKind::parse, "unknown backend '" + backend->first + "'", backend->second);
    auto vars = find_key(b, "vars");
    int nv = vars ? parse_int(vars->first, vars->second, "vars") : 2;
    std::vector<Exp> quotient;
    std::optional<int> dim;
    std::optional<bool> cm;
    if (auto q = find_key(b, "quotient")) {
      Ring ambient = Ring::polynomial(nv);
      for (const auto& t : split_ws(q->first))
        quotient.push_back(parse_monomial(t, ambient, q->second));
    }
    if (auto d = find_key(b, "dim")) dim = parse_int(d->first, d->second, "dim");
    if (auto c = find_key(b, "cm")) {
      if (c->first == "true")
        cm = true;
      else if (c->first == "false")
        cm = false;
      else
        fail(ErrorKind::parse, "cm must be true or false", c->second);
    }
    return Ring::polynomial(nv, std::move(quotient), dim, cm);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::parse) throw;
    fail(ErrorKind::parse, std::string("invalid ring: ") + e.what(), b.line);
  }
}

}  // namespace

const Ideal& SpecDocument::ideal_by_name(const std::string& name, int line) const {
  for (size_t i = 0; i < ideal_names.size(); ++i)
    if (ideal_names[i] == name) return ideals[i];
  fail(ErrorKind::parse, "unresolved ideal name '" + name + "'", line);
}

std::vector<Ideal> SpecDocument::filtration_base() const {
  std::vector<Ideal> base;
  for (const auto& n : filtration_ideals) base.push_back(ideal_by_name(n));
  return base;
}

Filtration SpecDocument::make_filtration() const { return Filtration(kind, filtration_base()); }

SpecDocument parse_spec(const std::string& text) {
  SpecDocument doc;
  auto blocks = lex_blocks(text);
  bool have_ring = false, have_filtration = false;

  // ring first: ideal blocks need it
  for (const auto& b : blocks)
    if (b.header == "ring") {
      if (have_ring) fail(ErrorKind::parse, "duplicate ring block", b.line);
      doc.ring = build_ring(b);
      have_ring = true;
    }
  if (!have_ring) fail(ErrorKind::parse, "missing [ring] block", 1);

  for (const auto& b : blocks) {
    if (b.header == "ring") continue;
    if (b.header.rfind("ideal ", 0) == 0) {
      std::string name = trim(b.header.substr(6));
      if (name.empty()) fail(ErrorKind::parse, "ideal block needs a name", b.line);
      if (std::count(doc.ideal_names.begin(), doc.ideal_names.end(), name))
        fail(ErrorKind::parse, "duplicate ideal '" + name + "'", b.line);
      auto gens = find_key(b, "gens");
      if (!gens) fail(ErrorKind::parse, "ideal block needs 'gens'", b.line);
      std::vector<Exp> exps;
      for (const auto& t : split_ws(gens->first))
        exps.push_back(parse_monomial(t, doc.ring, gens->second));
      if (exps.empty()) fail(ErrorKind::parse, "ideal needs at least one generator", gens->second);
      Ideal I = [&] {
        try {
          return Ideal::from_gens(doc.ring, exps);
        } catch (const Error& e) {
          fail(ErrorKind::parse, "invalid ideal '" + name + "': " + e.what(), gens->second);
        }
      }();
      if (!I.is_m_primary() || !I.colength())
        fail(ErrorKind::parse, "ideal '" + name + "' is not m-primary", gens->second);
      doc.ideal_names.push_back(name);
      doc.ideals.push_back(std::move(I));
    } else if (b.header == "filtration") {
      if (have_filtration) fail(ErrorKind::parse, "duplicate filtration block", b.line);
      have_filtration = true;
      if (auto k = find_key(b, "kind")) {
        if (k->first == "powers")
          doc.kind = FiltrationKind::powers;
        else if (k->first == "closure")
          doc.kind = FiltrationKind::closure;
        else if (k->first == "ratliff-rush")
          doc.kind = FiltrationKind::ratliff_rush;
        else
          fail(ErrorKind::parse, "unknown filtration kind '" + k->first + "'", k->second);
      }
      auto names = find_key(b, "ideals");
      if (!names) fail(ErrorKind::parse, "filtration block needs 'ideals'", b.line);
      doc.filtration_ideals = split_ws(names->first);
      if (doc.filtration_ideals.empty())
        fail(ErrorKind::parse, "filtration needs at least one ideal", names->second);
    } else if (b.header.rfind("reduction", 0) == 0) {
      SpecDocument::NamedMatrix m;
      m.name = b.header == "reduction" ? "A" : trim(b.header.substr(9));
      if (m.name.empty()) m.name = "A";
      m.line = b.line;
      for (const auto& [key, val] : b.entries) {
        if (std::count(doc.ideal_names.begin(), doc.ideal_names.end(), key) == 0)
          fail(ErrorKind::parse, "reduction row references unknown ideal '" + key + "'",
               val.second);
        std::vector<Exp> row;
        for (const auto& t : split_ws(val.first))
          row.push_back(parse_monomial(t, doc.ring, val.second));
        m.row_names.push_back(key);
        m.rows.push_back(std::move(row));
      }
      doc.reductions.push_back(std::move(m));
    } else if (b.header.rfind("joint", 0) == 0) {
      SpecDocument::NamedJoint j;
      j.name = b.header == "joint" ? "JR" : trim(b.header.substr(5));
      if (j.name.empty()) j.name = "JR";
      j.line = b.line;
      for (const auto& [key, val] : b.entries) {
        if (key == "type") {
          for (const auto& t : split_ws(val.first))
            j.type.push_back(parse_int(t, val.second, "joint type"));
          continue;
        }
        if (std::count(doc.ideal_names.begin(), doc.ideal_names.end(), key) == 0)
          fail(ErrorKind::parse, "joint row references unknown ideal '" + key + "'", val.second);
        std::vector<Exp> row;
        for (const auto& t : split_ws(val.first))
          row.push_back(parse_monomial(t, doc.ring, val.second));
        j.row_names.push_back(key);
        j.rows.push_back(std::move(row));
      }
      doc.joints.push_back(std::move(j));
    } else if (b.header == "analysis") {
      for (const auto& [key, val] : b.entries) {
        if (key == "box")
          doc.box = parse_int(val.first, val.second, "box");
        else if (key == "margin")
          doc.margin = parse_int(val.first, val.second, "margin");
        else if (key == "offset")
          doc.offset = parse_int(val.first, val.second, "offset");
        else if (key == "search")
          doc.search_bound = parse_int(val.first, val.second, "search");
        else if (key == "command")
          doc.command = val.first;
        else
          fail(ErrorKind::parse, "unknown analysis key '" + key + "'", val.second);
      }
    } else {
      fail(ErrorKind::parse, "unknown block '[" + b.header + "]'", b.line);
    }
  }

  if (!have_filtration) fail(ErrorKind::parse, "missing [filtration] block", 1);
  for (const auto& n : doc.filtration_ideals) doc.ideal_by_name(n, 1);

  const int s = static_cast<int>(doc.filtration_ideals.size());
  const int d = doc.ring.dim();
  // reorder reduction/joint rows to the filtration's ideal order
  auto reorder = [&](std::vector<std::string>& names, std::vector<std::vector<Exp>>& rows,
                     const std::string& what, int line, bool allow_missing) {
    if (!allow_missing && static_cast<int>(rows.size()) != s)
      fail(ErrorKind::parse, what + " needs one row per filtration ideal", line);
    std::vector<std::vector<Exp>> out(s);
    std::vector<std::string> out_names(s);
    std::vector<char> seen(s, 0);
    for (size_t r = 0; r < rows.size(); ++r) {
      auto it = std::find(doc.filtration_ideals.begin(), doc.filtration_ideals.end(), names[r]);
      if (it == doc.filtration_ideals.end())
        fail(ErrorKind::parse, what + " row '" + names[r] + "' is not a filtration ideal", line);
      size_t idx = static_cast<size_t>(it - doc.filtration_ideals.begin());
      if (seen[idx]) fail(ErrorKind::parse, what + " has a duplicate row '" + names[r] + "'", line);
      seen[idx] = 1;
      out[idx] = std::move(rows[r]);
      out_names[idx] = names[r];
    }
    rows = std::move(out);
    names = std::move(out_names);
  };
  for (auto& m : doc.reductions) {
    reorder(m.row_names, m.rows, "reduction '" + m.name + "'", m.line, false);
    for (const auto& row : m.rows)
      if (static_cast<int>(row.size()) != d)
        fail(ErrorKind::parse,
             "reduction '" + m.name + "' rows need " + std::to_string(d) + " entries", m.line);
  }
  for (auto& j : doc.joints) {
    if (static_cast<int>(j.type.size()) != s)
      fail(ErrorKind::parse, "joint '" + j.name + "' type needs one entry per ideal", j.line);
    int total = 0;
    for (int q : j.type) total += q;
    if (total != d)
      fail(ErrorKind::parse, "joint '" + j.name + "' type must sum to the dimension", j.line);
    reorder(j.row_names, j.rows, "joint '" + j.name + "'", j.line, true);
    for (int i = 0; i < s; ++i)
      if (static_cast<int>(j.rows[i].size()) != j.type[i])
        fail(ErrorKind::parse, "joint '" + j.name + "' row sizes must match the type", j.line);
  }
  if (doc.box < 1 || doc.margin < 0 || doc.offset < 1)
    fail(ErrorKind::parse, "analysis parameters out of range", 1);
  static const char* commands[] = {"verify-all", "hilbert", "reductions",
                                   "postulation", "huneke", "h1"};
  if (std::find(std::begin(commands), std::end(commands), doc.command) == std::end(commands))
    fail(ErrorKind::parse, "unknown command '" + doc.command + "'", 1);
  return doc;
}

}  // namespace mgfil
