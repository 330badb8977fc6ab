#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "toric/builtins.hpp"
#include "toric/cohomology.hpp"
#include "toric/fan_json.hpp"
#include "toric/series.hpp"
#include "toric/verify.hpp"

namespace toric {

/// Exit codes: 0 success, 1 mathematical mismatch or validation failure,
/// 2 usage or I/O error.
enum ExitCode { exit_ok = 0, exit_math = 1, exit_usage = 2 };

struct RunConfig {
  std::string command;
  std::string fan_file;  // exactly one fan source
  std::string gen_spec;
  int p = 0;
  std::optional<long long> max_weight;
  std::optional<std::vector<long long>> weights;
  std::string format = "text";
  bool show_labels = false;
  std::string only;                  // verify-examples filter
  std::string output_file;           // gen -o
  std::vector<std::string> gen_words;
};

namespace cli_detail {

inline std::vector<std::string> split_words(const std::string& text) {
  std::istringstream is(text);
  std::vector<std::string> words;
  std::string w;
  while (is >> w) words.push_back(w);
  return words;
}

inline Fan load_fan(const RunConfig& cfg) {
  if (!cfg.fan_file.empty()) {
    std::ifstream in(cfg.fan_file);
    if (!in) throw std::ios_base::failure("cannot open fan file \"" + cfg.fan_file + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_fan(buf.str());
  }
  return gen_from_spec(split_words(cfg.gen_spec));
}

inline std::string fan_summary(const Fan& fan) {
  std::ostringstream os;
  os << "dim " << fan.dim << ", " << fan.rays.size() << " rays, " << fan.max_cones.size()
     << " maximal cones";
  return os.str();
}

inline nlohmann::json element_json(const MonoidElement& v) {
  return nlohmann::json(v);
}

inline std::string element_brackets(const MonoidElement& v) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
  return os.str();
}

inline void print_projectivity_note(std::ostream& err) {
  err << "note: completeness is certified combinatorially; projectivity is assumed, "
         "not checked\n";
}

// The p-th basis label t_i stands for the i-th lattice basis vector; render it
// as a combination of the presentation's standard monomials.
inline std::vector<std::string> basis_labels(const CohomologyPresentation& pres, int p) {
  const auto& basis = pres.basis_by_degree[p];
  const auto& cb = pres.class_basis[p];
  std::vector<std::string> out;
  for (size_t i = 0; i < cb.hnf.size(); ++i) {
    Polynomial combo(static_cast<int>(pres.fan.rays.size()));
    for (size_t j = 0; j < basis.size(); ++j)
      combo.add_term(basis[j], make_rational(cb.hnf[i][j], cb.denom));
    out.push_back(to_string(combo));
  }
  return out;
}

struct EulerData {
  std::map<ClassVector, int> grouped;
  RationalSeriesExpr closed_form;
  std::optional<WeightFunctional> weight;
  std::optional<TruncatedSeries> expansion;
};

inline EulerData euler_data(const CohomologyPresentation& pres, const RunConfig& cfg) {
  EulerData data;
  data.grouped = orbit_class_table(pres, cfg.p).grouped;
  data.closed_form = euler_from_classes(data.grouped);
  if (!cfg.max_weight) return data;
  std::vector<MonoidElement> generators;
  for (const auto& [cls, mult] : data.grouped) generators.push_back(cls.coords);
  if (cfg.weights) {
    WeightFunctional w{*cfg.weights};
    if (w.coeffs.size() != generators.front().size())
      throw std::invalid_argument("--weights must have one entry per basis element (" +
                                  std::to_string(generators.front().size()) + ")");
    for (const auto& g : generators)
      if (w(g) < 1)
        throw std::invalid_argument("--weights is not positive on the class " +
                                    element_brackets(g));
    data.weight = w;
  } else {
    data.weight = find_positive_functional(generators);
  }
  data.expansion = expand(data.closed_form, *data.weight, *cfg.max_weight);
  return data;
}

inline int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Fan fan = load_fan(cfg);
  ValidationReport rep = validate_fan(fan);
  print_projectivity_note(err);
  if (cfg.format == "json") {
    nlohmann::json j;
    j["fan"] = fan_summary(fan);
    j["simplicial"] = rep.simplicial;
    j["smooth"] = rep.smooth;
    j["complete"] = rep.complete;
    j["violations"] = nlohmann::json::array();
    for (const auto& v : rep.violations) j["violations"].push_back(v.detail);
    out << j.dump(2) << "\n";
  } else {
    out << "fan: " << fan_summary(fan) << "\n";
    out << "simplicial: " << (rep.simplicial ? "yes" : "NO") << "\n";
    out << "smooth:     " << (rep.smooth ? "yes" : "NO") << "\n";
    out << "complete:   " << (rep.complete ? "yes" : "NO") << "\n";
    for (const auto& v : rep.violations) out << "violation: " << v.detail << "\n";
  }
  return rep.ok() ? exit_ok : exit_math;
}

inline int cmd_orbits(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Fan fan = load_fan(cfg);
  if (cfg.p < 0 || cfg.p > fan.dim)
    throw std::invalid_argument("-p must be between 0 and " + std::to_string(fan.dim));
  CohomologyPresentation pres = build_presentation(fan);
  print_projectivity_note(err);
  const auto& table = orbit_class_table(pres, cfg.p);
  if (cfg.format == "json") {
    nlohmann::json j;
    j["fan"] = fan_summary(fan);
    j["p"] = cfg.p;
    j["rank"] = cohomology_rank(pres, cfg.p);
    j["rows"] = nlohmann::json::array();
    for (const auto& row : table.rows) {
      j["rows"].push_back({{"cone", row.cone.ray_indices},
                           {"monomial", monomial_to_string(row.equivariant_monomial)},
                           {"class", row.cls.coords}});
    }
    j["grouped"] = nlohmann::json::array();
    for (const auto& [cls, mult] : table.grouped)
      j["grouped"].push_back({{"class", cls.coords}, {"multiplicity", mult}});
    out << j.dump(2) << "\n";
  } else {
    out << "fan: " << fan_summary(fan) << "\n";
    out << "p (codimension): " << cfg.p << ", cohomology rank " << cohomology_rank(pres, cfg.p)
        << "\n";
    out << "cone : equivariant monomial : class\n";
    for (const auto& row : table.rows)
      out << "  " << detail::format_indices(row.cone.ray_indices) << " : "
          << monomial_to_string(row.equivariant_monomial) << " : "
          << element_brackets(row.cls.coords) << "\n";
    out << "grouped classes:\n";
    for (const auto& [cls, mult] : table.grouped)
      out << "  " << element_brackets(cls.coords) << " x" << mult << "\n";
  }
  return exit_ok;
}

inline int cmd_euler(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Fan fan = load_fan(cfg);
  if (cfg.p < 0 || cfg.p > fan.dim)
    throw std::invalid_argument("-p must be between 0 and " + std::to_string(fan.dim));
  CohomologyPresentation pres = build_presentation(fan);
  print_projectivity_note(err);
  EulerData data = euler_data(pres, cfg);
  if (cfg.format == "json") {
    nlohmann::json j;
    j["fan"] = fan_summary(fan);
    j["p"] = cfg.p;
    j["rank"] = cohomology_rank(pres, cfg.p);
    j["closed_form"] = closed_form_to_string(data.closed_form);
    j["factors"] = nlohmann::json::array();
    for (const auto& [cls, mult] : data.grouped)
      j["factors"].push_back({{"class", cls.coords}, {"multiplicity", mult}});
    if (cfg.show_labels) j["labels"] = basis_labels(pres, cfg.p);
    if (data.expansion) {
      j["weight"] = data.weight->coeffs;
      j["max_weight"] = *cfg.max_weight;
      j["expansion"] = nlohmann::json::array();
      for (const auto& [v, c] : data.expansion->support)
        j["expansion"].push_back({{"element", element_json(v)}, {"coefficient", c.get_str()}});
    }
    out << j.dump(2) << "\n";
  } else {
    out << "fan: " << fan_summary(fan) << "\n";
    out << "p (codimension): " << cfg.p << ", cohomology rank " << cohomology_rank(pres, cfg.p)
        << "\n";
    out << "E_p = " << closed_form_to_string(data.closed_form) << "\n";
    if (cfg.show_labels) {
      auto labels = basis_labels(pres, cfg.p);
      out << "basis labels:\n";
      for (size_t i = 0; i < labels.size(); ++i)
        out << "  t" << (i + 1) << " = " << labels[i] << "\n";
    }
    if (data.expansion) {
      out << "weight functional: " << element_brackets(data.weight->coeffs) << "\n";
      out << "max weight: " << *cfg.max_weight << "\n";
      out << "expansion (element -> chi):\n";
      for (const auto& [v, c] : data.expansion->support)
        out << "  " << element_brackets(v) << " -> " << c.get_str() << "\n";
    }
  }
  return exit_ok;
}

inline int cmd_equivariant(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Fan fan = load_fan(cfg);
  if (cfg.p < 0 || cfg.p > fan.dim)
    throw std::invalid_argument("-p must be between 0 and " + std::to_string(fan.dim));
  CohomologyPresentation pres = build_presentation(fan);
  print_projectivity_note(err);
  const auto& table = orbit_class_table(pres, cfg.p);
  const int n_orbits = static_cast<int>(table.rows.size());
  RationalSeriesExpr expr = equivariant_series(n_orbits);

  std::string closed;
  for (const auto& row : table.rows) {
    if (!closed.empty()) closed += " * ";
    closed += "(1/(1-[" + monomial_to_string(row.equivariant_monomial) + "]))";
  }

  std::optional<TruncatedSeries> expansion;
  WeightFunctional orbit_w;
  if (cfg.max_weight) {
    std::vector<MonoidElement> generators;
    for (const auto& [cls, mult] : table.grouped) generators.push_back(cls.coords);
    WeightFunctional w = find_positive_functional(generators);
    for (const auto& row : table.rows) orbit_w.coeffs.push_back(w(row.cls.coords));
    expansion = expand(expr, orbit_w, *cfg.max_weight);
  }

  if (cfg.format == "json") {
    nlohmann::json j;
    j["fan"] = fan_summary(fan);
    j["p"] = cfg.p;
    j["num_orbits"] = n_orbits;
    j["closed_form"] = closed;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : table.rows)
      j["rows"].push_back({{"cone", row.cone.ray_indices},
                           {"monomial", monomial_to_string(row.equivariant_monomial)},
                           {"class", row.cls.coords}});
    if (expansion) {
      j["orbit_weights"] = orbit_w.coeffs;
      j["max_weight"] = *cfg.max_weight;
      j["expansion"] = nlohmann::json::array();
      for (const auto& [v, c] : expansion->support)
        j["expansion"].push_back({{"element", element_json(v)}, {"coefficient", c.get_str()}});
    }
    out << j.dump(2) << "\n";
  } else {
    out << "fan: " << fan_summary(fan) << "\n";
    out << "p (codimension): " << cfg.p << ", invariant orbits: " << n_orbits << "\n";
    out << "E_p^T = " << closed << "\n";
    out << "cone : equivariant monomial : class\n";
    for (const auto& row : table.rows)
      out << "  " << detail::format_indices(row.cone.ray_indices) << " : "
          << monomial_to_string(row.equivariant_monomial) << " : "
          << element_brackets(row.cls.coords) << "\n";
    if (expansion) {
      out << "orbit weights: " << element_brackets(orbit_w.coeffs) << "\n";
      out << "max weight: " << *cfg.max_weight << "\n";
      out << "expansion (element -> chi):\n";
      for (const auto& [v, c] : expansion->support)
        out << "  " << element_brackets(v) << " -> " << c.get_str() << "\n";
    }
  }
  return exit_ok;
}

inline int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  Fan fan = gen_from_spec(cfg.gen_words);
  const std::string text = fan_to_json(fan).dump(2) + "\n";
  if (cfg.output_file.empty()) {
    out << text;
  } else {
    std::ofstream of(cfg.output_file);
    if (!of) throw std::ios_base::failure("cannot write \"" + cfg.output_file + "\"");
    of << text;
  }
  return exit_ok;
}

inline int cmd_verify_examples(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (!cfg.only.empty()) {
    static const std::vector<std::string> groups = {"pn",         "product",     "blowup",
                                                    "hirzebruch", "equivariant", "zero-cycles"};
    if (std::find(groups.begin(), groups.end(), cfg.only) == groups.end())
      throw std::invalid_argument("--only must be one of pn, product, blowup, hirzebruch, "
                                  "equivariant, zero-cycles");
  }
  auto checks = run_example_checks(cfg.only);
  int failed = 0;
  for (const auto& c : checks) failed += c.pass ? 0 : 1;
  if (cfg.format == "json") {
    nlohmann::json j;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks)
      j["checks"].push_back({{"group", c.group},
                             {"name", c.name},
                             {"pass", c.pass},
                             {"expected", c.expected},
                             {"actual", c.actual}});
    j["passed"] = static_cast<int>(checks.size()) - failed;
    j["failed"] = failed;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& c : checks) {
      out << (c.pass ? "PASS" : "FAIL") << " [" << c.group << "] " << c.name;
      if (!c.pass) out << " (expected " << c.expected << ", got " << c.actual << ")";
      out << "\n";
    }
    out << (checks.size() - failed) << "/" << checks.size() << " checks passed\n";
  }
  return failed == 0 ? exit_ok : exit_math;
}

}  // namespace cli_detail

/// Parse arguments (excluding the program name) and run one command.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Euler series of effective-cycle spaces on smooth complete toric varieties"};
  app.require_subcommand(1);

  std::string weights_text;

  auto add_fan_source = [&](CLI::App* cmd) {
    auto* file = cmd->add_option("--fan", cfg.fan_file, "fan file (JSON)");
    auto* spec = cmd->add_option("--gen", cfg.gen_spec,
                                 "builtin fan spec, e.g. \"pn 2\" or \"hirzebruch 3\"");
    file->excludes(spec);
    spec->excludes(file);
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  CLI::App* validate = app.add_subcommand("validate", "check smoothness and completeness");
  add_fan_source(validate);
  add_format(validate);

  CLI::App* orbits = app.add_subcommand("orbits", "orbit closures and their classes");
  add_fan_source(orbits);
  add_format(orbits);
  orbits->add_option("-p", cfg.p, "codimension")->required();

  CLI::App* euler = app.add_subcommand("euler", "Euler series in codimension p");
  add_fan_source(euler);
  add_format(euler);
  euler->add_option("-p", cfg.p, "codimension")->required();
  euler->add_option("--max-weight", cfg.max_weight, "expand the series up to this weight");
  euler->add_option("--weights", weights_text, "comma-separated weight functional override");
  euler->add_flag("--labels", cfg.show_labels, "print the basis label dictionary");

  CLI::App* equivariant = app.add_subcommand("equivariant", "equivariant Euler series");
  add_fan_source(equivariant);
  add_format(equivariant);
  equivariant->add_option("-p", cfg.p, "codimension")->required();
  equivariant->add_option("--max-weight", cfg.max_weight,
                          "expand the equivariant series up to this weight");

  CLI::App* gen = app.add_subcommand("gen", "emit a builtin fan as JSON");
  gen->add_option("spec", cfg.gen_words,
                  "pn <n> | product <n> <m> | blowup-pn <n> | hirzebruch <a>")
      ->expected(-1);
  gen->add_option("-o,--output", cfg.output_file, "write to a file instead of stdout");

  CLI::App* verify = app.add_subcommand("verify-examples", "recompute the worked formulas");
  add_format(verify);
  verify->add_option("--only", cfg.only, "run a single group of checks");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    if (cfg.command != "gen" && cfg.command != "verify-examples" && cfg.fan_file.empty() &&
        cfg.gen_spec.empty())
      throw std::invalid_argument("one fan source is required (--fan or --gen)");
    if (!weights_text.empty()) {
      std::vector<long long> w;
      std::istringstream is(weights_text);
      std::string tok;
      while (std::getline(is, tok, ','))
        w.push_back(std::stoll(tok));
      cfg.weights = std::move(w);
    }
    if (cfg.max_weight && *cfg.max_weight < 0)
      throw std::invalid_argument("--max-weight must be >= 0");

    if (cfg.command == "validate") return cli_detail::cmd_validate(cfg, out, err);
    if (cfg.command == "orbits") return cli_detail::cmd_orbits(cfg, out, err);
    if (cfg.command == "euler") return cli_detail::cmd_euler(cfg, out, err);
    if (cfg.command == "equivariant") return cli_detail::cmd_equivariant(cfg, out, err);
    if (cfg.command == "gen") return cli_detail::cmd_gen(cfg, out, err);
    if (cfg.command == "verify-examples") return cli_detail::cmd_verify_examples(cfg, out, err);
    err << "error: unknown command\n";
    return exit_usage;
  } catch (const PresentationError& e) {
    err << "error: " << e.what() << "\n";
    return exit_math;
  } catch (const NonIntegralCoordinate& e) {
    err << "error: " << e.what() << "\n";
    return exit_math;
  } catch (const NoPositiveFunctional& e) {
    err << "error: " << e.what() << "\n";
    return exit_math;
  } catch (const FanError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
}

}  // namespace toric
