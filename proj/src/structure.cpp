#include "relsig/structure.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace relsig {

namespace {

// Antichain rendering order: ascending size, ties by ascending component
// tuple.
bool subset_less(Mask a, Mask b) {
  const unsigned pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  const Mask low = (a ^ b) & (~(a ^ b) + 1);
  return (a & low) != 0;
}

std::vector<Mask> reduce_to_antichain(std::vector<Mask> paths) {
  std::sort(paths.begin(), paths.end(), subset_less);
  paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
  std::vector<Mask> kept;
  for (Mask p : paths) {
    bool dominated = false;
    for (Mask q : kept)
      if ((q & ~p) == 0) {  // q subset of p: p is a superset, drop it
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(p);
  }
  return kept;
}

void require_enumerable(unsigned n, const char* what) {
  if (n > kEnumGuard)
    throw SizeGuardError(std::string(what) + ": n = " + std::to_string(n) +
                         " exceeds the 2^n enumeration bound of n = " +
                         std::to_string(kEnumGuard));
}

bool table_is_semicoherent(unsigned n, const std::vector<bool>& table) {
  const std::uint64_t size = std::uint64_t{1} << n;
  if (table[0] || !table[size - 1]) return false;
  for (std::uint64_t a = 0; a < size; ++a)
    if (table[a])
      for (unsigned b = 0; b < n; ++b)
        if (!(a >> b & 1) && !table[a | (std::uint64_t{1} << b)]) return false;
  return true;
}

std::vector<Mask> paths_from_table(unsigned n, const std::vector<bool>& table) {
  std::vector<Mask> paths;
  const std::uint64_t size = std::uint64_t{1} << n;
  for (std::uint64_t a = 1; a < size; ++a) {
    if (!table[a]) continue;
    bool minimal = true;
    for (Mask rest = a; rest;) {
      const Mask bit = rest & (~rest + 1);
      if (table[a ^ bit]) {
        minimal = false;
        break;
      }
      rest ^= bit;
    }
    if (minimal) paths.push_back(a);
  }
  std::sort(paths.begin(), paths.end(), subset_less);
  return paths;
}

}  // namespace

StructureFunction StructureFunction::from_min_path_sets(
    unsigned n, std::vector<Mask> paths) {
  if (n < 1 || n > kMaxComponents)
    throw std::invalid_argument("component count must be in [1, 64]");
  if (paths.empty())
    throw SemicoherenceError(
        "no path sets: the induced structure would be constant 0");
  const Mask full = full_mask(n);
  for (Mask p : paths) {
    if (p == 0) throw std::invalid_argument("empty path set");
    if (p & ~full)
      throw std::invalid_argument("path set references a component beyond n");
  }
  return StructureFunction(n, reduce_to_antichain(std::move(paths)), {});
}

StructureFunction StructureFunction::from_truth_table(unsigned n,
                                                      std::vector<bool> table) {
  if (n < 1) throw std::invalid_argument("component count must be positive");
  require_enumerable(n, "from_truth_table");
  if (table.size() != (std::uint64_t{1} << n))
    throw std::invalid_argument("truth table must hold exactly 2^n entries");
  std::vector<Mask> paths;
  if (table_is_semicoherent(n, table)) paths = paths_from_table(n, table);
  return StructureFunction(n, std::move(paths), std::move(table));
}

bool StructureFunction::evaluate(Mask a) const {
  if (!table_.empty()) return table_[a];
  for (Mask p : paths_)
    if ((p & ~a) == 0) return true;
  return false;
}

std::vector<bool> truth_table(const StructureFunction& phi) {
  const unsigned n = phi.component_count();
  require_enumerable(n, "truth_table");
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<bool> table(size);
  for (std::uint64_t a = 0; a < size; ++a) table[a] = phi.evaluate(a);
  return table;
}

ValidationReport validate_semicoherent(const StructureFunction& phi) {
  const unsigned n = phi.component_count();
  require_enumerable(n, "validate_semicoherent");
  const auto table = truth_table(phi);
  ValidationReport report;
  report.zero_at_empty = !table[0];
  report.one_at_full = table[table.size() - 1];
  for (std::uint64_t a = 0; a < table.size(); ++a) {
    if (!table[a]) continue;
    for (unsigned b = 0; b < n; ++b)
      if (!(a >> b & 1) && !table[a | (std::uint64_t{1} << b)])
        report.violations.push_back({a, b + 1});
  }
  return report;
}

MultilinearPoly reliability_polynomial(const StructureFunction& phi) {
  if (!phi.min_path_sets().empty() &&
      phi.min_path_sets().size() <= kPathGuard)
    return reliability_polynomial_paths(phi);
  if (phi.component_count() <= kEnumGuard)
    return reliability_polynomial_mobius(phi);
  throw SizeGuardError(
      "reliability_polynomial: too many path sets for inclusion-exclusion "
      "and too many components for a truth-table scan");
}

MultilinearPoly reliability_polynomial_paths(const StructureFunction& phi) {
  const auto& paths = phi.min_path_sets();
  if (paths.empty())
    throw SemicoherenceError(
        "reliability_polynomial_paths: no minimal path sets available");
  if (paths.size() > kPathGuard)
    throw SizeGuardError("reliability_polynomial_paths: " +
                         std::to_string(paths.size()) +
                         " path sets exceed the expansion bound of " +
                         std::to_string(kPathGuard));
  const std::uint64_t families = std::uint64_t{1} << paths.size();
  // union of the family s, built from the union of s minus its lowest member
  std::vector<Mask> unions(families, 0);
  std::map<Mask, std::int64_t> acc;
  for (std::uint64_t s = 1; s < families; ++s) {
    unions[s] =
        unions[s & (s - 1)] | paths[std::countr_zero(s)];
    acc[unions[s]] += (popcount(s) & 1) ? 1 : -1;
  }
  std::map<Mask, Rational> terms;
  for (const auto& [mask, count] : acc)
    if (count != 0) terms.emplace(mask, count);
  return MultilinearPoly(phi.component_count(), std::move(terms));
}

MultilinearPoly reliability_polynomial_mobius(const StructureFunction& phi) {
  const unsigned n = phi.component_count();
  require_enumerable(n, "reliability_polynomial_mobius");
  const auto table = truth_table(phi);
  std::vector<std::int64_t> values(table.begin(), table.end());
  for (unsigned b = 0; b < n; ++b) {
    const std::uint64_t bit = std::uint64_t{1} << b;
    for (std::uint64_t a = 0; a < values.size(); ++a)
      if (a & bit) values[a] -= values[a ^ bit];
  }
  std::map<Mask, Rational> terms;
  for (std::uint64_t a = 0; a < values.size(); ++a)
    if (values[a] != 0) terms.emplace(a, values[a]);
  return MultilinearPoly(n, std::move(terms));
}

StructureFunction compose(const ModuleSplit& split) {
  const unsigned m = popcount(split.module_set);
  if (m == 0) throw std::invalid_argument("compose: empty module set");
  if (split.chi.component_count() != m)
    throw std::invalid_argument("compose: chi size does not match the module");
  const unsigned organized = split.psi.component_count();
  if (organized < 1 || split.macro_index < 1 ||
      split.macro_index > organized)
    throw std::invalid_argument("compose: macro position out of range");
  const unsigned n = m + organized - 1;
  require_enumerable(n, "compose");
  if (split.module_set & ~full_mask(n))
    throw std::invalid_argument("compose: module set outside the system");

  const Mask rest = full_mask(n) & ~split.module_set;
  const Mask below_macro = (Mask{1} << (split.macro_index - 1)) - 1;
  std::vector<bool> table(std::uint64_t{1} << n);
  for (std::uint64_t a = 0; a < table.size(); ++a) {
    const bool macro_state =
        split.chi.evaluate(submask_index(a & split.module_set,
                                         split.module_set));
    const std::uint64_t packed = submask_index(a & rest, rest);
    const Mask psi_arg = (packed & below_macro) |
                         ((packed & ~below_macro) << 1) |
                         (Mask{macro_state} << (split.macro_index - 1));
    table[a] = split.psi.evaluate(psi_arg);
  }
  return StructureFunction::from_truth_table(n, std::move(table));
}

bool verify_module_split(const StructureFunction& phi,
                         const ModuleSplit& split) {
  const StructureFunction composed = compose(split);
  if (composed.component_count() != phi.component_count()) return false;
  return truth_table(composed) == truth_table(phi);
}

namespace {

std::optional<ModuleSplit> detect_module(unsigned n,
                                         const std::vector<bool>& table,
                                         Mask m_set) {
  const unsigned m = popcount(m_set);
  const Mask rest = full_mask(n) & ~m_set;
  const unsigned r = n - m;
  const std::uint64_t macro_bit = std::uint64_t{1} << r;

  std::vector<bool> chi_table;
  std::vector<bool> psi_table(std::uint64_t{1} << (r + 1));
  std::vector<bool> section(std::uint64_t{1} << m);
  for (std::uint64_t zi = 0; zi < (std::uint64_t{1} << r); ++zi) {
    const Mask z = nth_submask(zi, rest);
    for (std::uint64_t bi = 0; bi < section.size(); ++bi)
      section[bi] = table[nth_submask(bi, m_set) | z];
    // Sections are monotone, so endpoint equality means constant.
    if (section.front() == section.back()) {
      psi_table[zi] = psi_table[zi | macro_bit] = section.front();
      continue;
    }
    if (chi_table.empty())
      chi_table = section;
    else if (section != chi_table)
      return std::nullopt;
    psi_table[zi] = false;
    psi_table[zi | macro_bit] = true;
  }
  if (chi_table.empty()) {
    // phi never looks at the module; any semicoherent chi satisfies the
    // composition, so pick the series structure.
    chi_table.assign(std::uint64_t{1} << m, false);
    chi_table.back() = true;
  }
  ModuleSplit split;
  split.module_set = m_set;
  split.chi = StructureFunction::from_truth_table(m, std::move(chi_table));
  split.psi =
      StructureFunction::from_truth_table(r + 1, std::move(psi_table));
  split.macro_index = r + 1;
  return split;
}

}  // namespace

std::optional<ModuleSplit> find_module(const StructureFunction& phi,
                                       Mask module_set) {
  const unsigned n = phi.component_count();
  require_enumerable(n, "find_module");
  if (module_set == 0 || (module_set & ~phi.components()))
    throw std::invalid_argument("module set must be a nonempty subset of C");
  const auto table = truth_table(phi);
  if (!table_is_semicoherent(n, table))
    throw SemicoherenceError("find_module requires a semicoherent structure");
  return detect_module(n, table, module_set);
}

std::vector<ModuleSplit> modular_sets(const StructureFunction& phi) {
  const unsigned n = phi.component_count();
  if (n > 12)
    throw SizeGuardError(
        "modular_sets: n = " + std::to_string(n) +
        " exceeds the all-subsets bound of n = 12");
  const auto table = truth_table(phi);
  if (!table_is_semicoherent(n, table))
    throw SemicoherenceError(
        "modular_sets requires a semicoherent structure");
  std::vector<ModuleSplit> out;
  for (Mask m_set = 1; m_set <= full_mask(n); ++m_set)
    if (auto split = detect_module(n, table, m_set))
      out.push_back(std::move(*split));
  return out;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

unsigned parse_component_count(const std::string& token) {
  std::size_t used = 0;
  unsigned long n = 0;
  try {
    n = std::stoul(token, &used);
  } catch (const std::exception&) {
    throw ParseError("invalid component count: '" + token + "'");
  }
  if (used != token.size() || n < 1 || n > kMaxComponents)
    throw ParseError("component count must be an integer in [1, 64], got '" +
                     token + "'");
  return static_cast<unsigned>(n);
}

Mask parse_path_line(const std::string& line, unsigned n, unsigned line_no) {
  Mask path = 0;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos)
      throw ParseError("line " + std::to_string(line_no) +
                       ": empty component entry");
    item = item.substr(first, last - first + 1);
    std::size_t used = 0;
    unsigned long c = 0;
    try {
      c = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": invalid component '" + item + "'");
    }
    if (used != item.size() || c < 1 || c > n)
      throw ParseError("line " + std::to_string(line_no) + ": component '" +
                       item + "' out of range 1.." + std::to_string(n));
    path |= Mask{1} << (c - 1);
  }
  if (path == 0)
    throw ParseError("line " + std::to_string(line_no) + ": empty path set");
  return path;
}

std::string trimmed(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

StructureFunction parse_system_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  unsigned line_no = 0;
  unsigned n = 0;
  bool have_n = false;
  std::vector<Mask> paths;
  while (std::getline(in, line)) {
    ++line_no;
    line = trimmed(line);
    if (line.empty() || line.front() == '#') continue;
    if (!have_n) {
      if (line.rfind("n=", 0) != 0 && line.rfind("n =", 0) != 0)
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected 'n=<count>' first");
      n = parse_component_count(trimmed(line.substr(line.find('=') + 1)));
      have_n = true;
      continue;
    }
    paths.push_back(parse_path_line(line, n, line_no));
  }
  if (!have_n) throw ParseError("missing 'n=<count>' header line");
  if (paths.empty()) throw ParseError("no path sets given");
  return StructureFunction::from_min_path_sets(n, std::move(paths));
}

StructureFunction parse_system_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") ||
      !doc["n"].is_number_unsigned())
    throw ParseError("JSON system needs an unsigned field \"n\"");
  const unsigned n = doc["n"].get<unsigned>();
  if (n < 1 || n > kMaxComponents)
    throw ParseError("\"n\" must be in [1, 64]");

  if (doc.contains("table")) {
    if (!doc["table"].is_string())
      throw ParseError("\"table\" must be a string of 0/1 characters");
    if (n > kEnumGuard)
      throw SizeGuardError("truth-table input is limited to n <= " +
                           std::to_string(kEnumGuard));
    const std::string bits = doc["table"].get<std::string>();
    if (bits.size() != (std::size_t{1} << n))
      throw ParseError("\"table\" must hold exactly 2^n characters");
    std::vector<bool> table(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] != '0' && bits[i] != '1')
        throw ParseError("\"table\" may contain only '0' and '1'");
      table[i] = bits[i] == '1';
    }
    return StructureFunction::from_truth_table(n, std::move(table));
  }

  if (!doc.contains("paths") || !doc["paths"].is_array())
    throw ParseError("JSON system needs \"paths\" (or \"table\")");
  std::vector<Mask> paths;
  for (const auto& entry : doc["paths"]) {
    if (!entry.is_array() || entry.empty())
      throw ParseError("every path must be a nonempty array of components");
    Mask path = 0;
    for (const auto& c : entry) {
      if (!c.is_number_unsigned() || c.get<unsigned>() < 1 ||
          c.get<unsigned>() > n)
        throw ParseError("path component out of range 1.." +
                         std::to_string(n));
      path |= Mask{1} << (c.get<unsigned>() - 1);
    }
    paths.push_back(path);
  }
  if (paths.empty()) throw ParseError("\"paths\" must not be empty");
  return StructureFunction::from_min_path_sets(n, std::move(paths));
}

StructureFunction load_system(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file: " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return parse_system_json(text);
  return parse_system_text(text);
}

}  // namespace relsig
