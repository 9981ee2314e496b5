#include "relsig/cli.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "relsig/oracle.hpp"
#include "relsig/signatures.hpp"
#include "relsig/structure.hpp"

namespace relsig {

namespace {

using nlohmann::json;

json rational_json(const Rational& value) {
  return json{{"num", numerator(value).str()},
              {"den", denominator(value).str()}};
}

json fractions_json(const std::vector<Rational>& values) {
  json out = json::array();
  for (const Rational& v : values) out.push_back(rational_json(v));
  return out;
}

std::string fraction_tuple(const std::vector<Rational>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += to_string(values[i]);
  }
  return out + ")";
}

std::string set_string(Mask set) {
  std::string out = "{";
  const auto components = components_from_mask(set);
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(components[i]);
  }
  return out + "}";
}

std::string paths_string(const std::vector<Mask>& paths) {
  std::string out;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (i) out += ",";
    out += set_string(paths[i]);
  }
  return out;
}

json paths_json(const std::vector<Mask>& paths) {
  json out = json::array();
  for (Mask p : paths) out.push_back(components_from_mask(p));
  return out;
}

json system_json(const StructureFunction& phi) {
  return json{{"n", phi.component_count()},
              {"paths", paths_json(phi.min_path_sets())}};
}

const char* command_name(Command command) {
  switch (command) {
    case Command::signature: return "signature";
    case Command::subsig: return "subsig";
    case Command::bp: return "bp";
    case Command::genfunc: return "genfunc";
    case Command::poly: return "poly";
    case Command::modules: return "modules";
    case Command::verify: return "verify";
  }
  return "?";
}

struct StepList {
  std::vector<std::pair<std::string, std::string>> items;
  void add(std::string name, std::string text) {
    items.emplace_back(std::move(name), std::move(text));
  }
  json to_json() const {
    json out = json::array();
    for (const auto& [name, text] : items)
      out.push_back(json{{"name", name}, {"text", text}});
    return out;
  }
};

Mask set_from_config(const RunConfig& config, const StructureFunction& phi) {
  if (!config.set_m || config.set_m->empty())
    throw std::invalid_argument("this command needs --set with components");
  for (unsigned c : *config.set_m)
    if (c < 1 || c > phi.component_count())
      throw std::invalid_argument("--set component " + std::to_string(c) +
                                  " out of range 1.." +
                                  std::to_string(phi.component_count()));
  return mask_from_components(*config.set_m);
}

// ---- per-command handlers -------------------------------------------------

void run_signature(const RunConfig& config, const StructureFunction& phi,
                   StepList& steps, std::string& text, json& result) {
  const MultilinearPoly h = reliability_polynomial(phi);
  SignatureSteps sig_steps;
  const Subsignature s =
      samaniego_signature(h, config.show_steps ? &sig_steps : nullptr);
  if (config.show_steps) {
    const std::string window = std::to_string(phi.component_count() - 1);
    steps.add("h(x)", sig_steps.h_diag.to_string());
    steps.add("g(x)", sig_steps.g.to_string());
    steps.add("(R^" + window + " g)(x)", sig_steps.g_reflected.to_string());
    steps.add("(R^" + window + " g)(x+1)", sig_steps.g_shifted.to_string());
  }
  text = "s = " + fraction_tuple(s.values);
  result = json{{"set", components_from_mask(s.module_set)},
                {"values", fractions_json(s.values)}};
}

void run_subsig(const RunConfig& config, const StructureFunction& phi,
                StepList& steps, std::string& text, json& result) {
  const Mask m_set = set_from_config(config, phi);
  const MultilinearPoly h = reliability_polynomial(phi);
  SubsignatureSteps sub_steps;
  const Subsignature s =
      subsignature(h, m_set, config.show_steps ? &sub_steps : nullptr);
  if (config.show_steps) {
    const std::string window = std::to_string(popcount(m_set) - 1);
    steps.add("h(x,z)", sub_steps.h_xz.to_string());
    steps.add("g(x,z)", sub_steps.g_xz.to_string());
    steps.add("(R_1^" + window + " g)(x,z)",
              sub_steps.g_reflected.to_string());
    steps.add("(R_1^" + window + " g)(x+1,z)",
              sub_steps.g_shifted.to_string());
    for (std::size_t k = 0; k < sub_steps.c.size(); ++k)
      steps.add("c_" + std::to_string(k) + "(z)",
                sub_steps.c[k].to_string("z"));
  }
  text = "s_M = " + fraction_tuple(s.values);
  result = json{{"set", components_from_mask(m_set)},
                {"values", fractions_json(s.values)}};
}

void run_bp(const RunConfig& config, const StructureFunction& phi,
            StepList& steps, std::string& text, json& result) {
  const MultilinearPoly h = reliability_polynomial(phi);
  std::vector<Rational> indices;
  indices.reserve(phi.component_count());
  for (unsigned j = 1; j <= phi.component_count(); ++j) {
    if (config.show_steps)
      steps.add("(d" + std::to_string(j) + " h)(t)",
                diagonal(h.partial_derivative(j)).to_string("t"));
    indices.push_back(barlow_proschan(h, j));
  }
  text = fraction_tuple(indices);
  result = json{{"values", fractions_json(indices)}};
}

void run_genfunc(const RunConfig& config, const StructureFunction& phi,
                 StepList& steps, std::string& text, json& result) {
  const Mask m_set = set_from_config(config, phi);
  const MultilinearPoly h = reliability_polynomial(phi);
  GenFnSteps gen_steps;
  const SignatureGenFn gf =
      genfunc(h, m_set, config.show_steps ? &gen_steps : nullptr);
  if (config.show_steps) {
    const std::string window = std::to_string(popcount(m_set) - 1);
    steps.add("h(x,z)", gen_steps.h_xz.to_string());
    steps.add("g(x,z)", gen_steps.g_xz.to_string());
    steps.add("(R_1^" + window + " g)(x,z)",
              gen_steps.g_reflected.to_string());
    steps.add("f(t,x,z)", gen_steps.f.to_string());
  }
  text = gf.gen.to_string();
  std::vector<Rational> coeffs;
  for (std::size_t k = 0; k <= popcount(m_set); ++k)
    coeffs.push_back(gf.gen.coefficient(k));
  result = json{{"set", components_from_mask(m_set)},
                {"coeffs", fractions_json(coeffs)}};
}

void run_poly(const StructureFunction& phi, std::string& text, json& result) {
  const MultilinearPoly h = reliability_polynomial(phi);
  text = h.to_string();
  json terms = json::array();
  for (const auto& [mask, coeff] : h.terms())
    terms.push_back(json{{"vars", components_from_mask(mask)},
                         {"coeff", rational_json(coeff)}});
  result = json{{"terms", terms}};
}

void run_modules(const StructureFunction& phi, std::string& text,
                 json& result) {
  const auto splits = modular_sets(phi);
  std::ostringstream out;
  result = json::array();
  for (const ModuleSplit& split : splits) {
    out << "M=" << set_string(split.module_set) << ": chi paths "
        << paths_string(split.chi.min_path_sets()) << "; psi paths "
        << paths_string(split.psi.min_path_sets()) << "; macro at "
        << split.macro_index << "\n";
    result.push_back(json{{"M", components_from_mask(split.module_set)},
                          {"chi_paths", paths_json(split.chi.min_path_sets())},
                          {"psi_paths", paths_json(split.psi.min_path_sets())},
                          {"macro_index", split.macro_index}});
  }
  out << splits.size() << " modular sets";
  text = out.str();
}

bool run_verify(const RunConfig& config, const StructureFunction& phi,
                std::string& text, json& result) {
  const unsigned n = phi.component_count();
  if (config.all_subsets && n > 12)
    throw SizeGuardError("--all-subsets is limited to n <= 12");
  const unsigned size_bound = std::min(n, 4u);
  std::vector<Mask> subsets;
  for (Mask m_set = 1; m_set <= full_mask(n); ++m_set)
    if (config.all_subsets || popcount(m_set) <= size_bound ||
        m_set == full_mask(n))
      subsets.push_back(m_set);
  std::sort(subsets.begin(), subsets.end(), [](Mask a, Mask b) {
    return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
  });

  const MultilinearPoly h = reliability_polynomial(phi);
  const bool run_perms = n <= kPermGuard;
  bool all_agree = true;
  std::ostringstream out;
  json checks = json::array();
  for (Mask m_set : subsets) {
    const Subsignature s = subsignature(h, m_set);
    const unsigned m = popcount(m_set);
    bool agree = true;
    for (unsigned k = 1; k <= m; ++k) {
      if (subsig_by_subset_sums(phi, m_set, k) != s.values[k - 1]) agree = false;
      if (subsig_by_marginal_contributions(phi, m_set, k) != s.values[k - 1])
        agree = false;
    }
    if (run_perms && subsig_by_permutations(phi, m_set).values != s.values)
      agree = false;
    all_agree = all_agree && agree;
    out << "M=" << set_string(m_set) << ": "
        << (agree ? "agrees" : "DISAGREES") << " (subset sums, marginal sums"
        << (run_perms ? ", permutations)" : ")") << "\n";
    checks.push_back(
        json{{"M", components_from_mask(m_set)}, {"agree", agree}});
  }
  result = json{{"subsets", checks}};

  if (config.trials) {
    const Mask full = full_mask(n);
    const Subsignature exact = subsignature(h, full);
    const McResult mc =
        subsig_monte_carlo(phi, full, *config.trials, config.seed);
    bool mc_ok = true;
    json entries = json::array();
    for (unsigned k = 0; k < mc.entries.size(); ++k) {
      const double target = exact.values[k].convert_to<double>();
      const McEntry& entry = mc.entries[k];
      const bool within =
          std::fabs(entry.estimate - target) <= 4.0 * entry.std_error;
      mc_ok = mc_ok && within;
      entries.push_back(json{{"estimate", entry.estimate},
                             {"std_error", entry.std_error},
                             {"exact", rational_json(exact.values[k])},
                             {"within_4se", within}});
    }
    all_agree = all_agree && mc_ok;
    out << "monte-carlo M=" << set_string(full) << " trials=" << mc.trials
        << " seed=" << mc.seed << " rng=" << mc.rng_id << ": "
        << (mc_ok ? "all estimates within 4 standard errors"
                  : "ESTIMATE OUT OF RANGE")
        << "\n";
    result["monte_carlo"] = json{{"set", components_from_mask(full)},
                                 {"trials", mc.trials},
                                 {"seed", mc.seed},
                                 {"rng", mc.rng_id},
                                 {"entries", entries},
                                 {"ok", mc_ok}};
  }

  out << (all_agree ? "all oracles agree" : "ORACLE DISAGREEMENT");
  text = out.str();
  return all_agree;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const StructureFunction phi = load_system(config.input_path);
    if (phi.has_truth_table()) {
      const ValidationReport report = validate_semicoherent(phi);
      if (!report.valid()) {
        err << "error: the input is not semicoherent:";
        if (!report.zero_at_empty) err << " phi(empty) != 0;";
        if (!report.one_at_full) err << " phi(full) != 1;";
        for (std::size_t i = 0;
             i < report.violations.size() && i < 5; ++i)
          err << " phi decreasing at " << set_string(report.violations[i].set)
              << " + component " << report.violations[i].component << ";";
        err << "\n";
        return exit_code::not_semicoherent;
      }
    }

    StepList steps;
    std::string text;
    json result;
    bool agreed = true;
    switch (config.command) {
      case Command::signature:
        run_signature(config, phi, steps, text, result);
        break;
      case Command::subsig:
        run_subsig(config, phi, steps, text, result);
        break;
      case Command::bp:
        run_bp(config, phi, steps, text, result);
        break;
      case Command::genfunc:
        run_genfunc(config, phi, steps, text, result);
        break;
      case Command::poly:
        run_poly(phi, text, result);
        break;
      case Command::modules:
        run_modules(phi, text, result);
        break;
      case Command::verify:
        agreed = run_verify(config, phi, text, result);
        break;
    }

    if (config.format == OutputFormat::json) {
      json report{{"system", system_json(phi)},
                  {"command", command_name(config.command)},
                  {"result", result}};
      if (config.show_steps) report["steps"] = steps.to_json();
      if (config.command == Command::verify)
        report["oracle_agreement"] = agreed;
      out << report.dump(2) << "\n";
    } else {
      for (const auto& [name, body] : steps.items)
        out << name << " = " << body << "\n";
      out << text << "\n";
    }
    return agreed ? exit_code::ok : exit_code::failure;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::parse;
  } catch (const SizeGuardError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::size_guard;
  } catch (const SemicoherenceError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::not_semicoherent;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::failure;
  }
}

}  // namespace relsig
