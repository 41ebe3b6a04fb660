#pragma once

// Command-line front end. Kept header-only so tests can drive it in-process
// with captured streams.
//
// Exit codes: 0 ok, 1 bad input, 2 resolution failure (missing entry,
// conflicting entry, inconsistent fragment, inapplicable method),
// 3 underdetermined degree, 4 verify found a degree that is not Equal.

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cohomc/pipeline.hpp"

namespace cohomc {

enum ExitCode : int { kExitOk = 0, kExitInput = 1, kExitResolution = 2, kExitUnderdetermined = 3, kExitMismatch = 4 };

namespace detail {

struct SpaceArgs {
  std::string builtin;
  std::string file;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> n;
};

inline void add_space_options(CLI::App* cmd, SpaceArgs& a) {
  auto* b = cmd->add_option("--builtin", a.builtin, "Builtin space (C1, C2, CStar, C2minus0, P1, P2, E, Eplus, H, P1xC1, Point, Affine)");
  auto* f = cmd->add_option("--space", a.file, "JSON space file");
  b->excludes(f);
  cmd->add_option("-k", a.k, "Family parameter k");
  cmd->add_option("-n", a.n, "Affine dimension n");
}

inline Space load_space(const SpaceArgs& a) {
  if (!a.file.empty()) {
    std::ifstream in(a.file);
    if (!in) throw InvalidArgument("cannot open " + a.file);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw InvalidArgument(a.file + ": " + e.what());
    }
    return space_from_json(j);
  }
  if (a.builtin.empty()) throw InvalidArgument("one of --builtin or --space is required");
  std::map<std::string, std::int64_t> params;
  if (a.k) params["k"] = *a.k;
  if (a.n) params["n"] = *a.n;
  return make_builtin(a.builtin, params);
}

inline void print_list(std::ostream& out, std::int64_t k, const std::vector<Space>& custom) {
  out << "Builtin spaces:\n";
  const std::vector<std::pair<std::string, std::string>> rows{
      {"Point", "a point"},
      {"C1, C2, Affine -n N", "affine space C^n"},
      {"CStar", "C \\ {0}"},
      {"C2minus0", "C^2 \\ {0}"},
      {"P1, P2", "projective line and plane"},
      {"E -k K", "total space of O(-K) over P1"},
      {"Eplus -k K", "total space of O(K) over P1"},
      {"H -k K", "Hirzebruch surface H_K"},
      {"P1xC1", "product P1 x C1"}};
  for (const auto& [name, what] : rows) out << "  " << name << std::string(name.size() < 22 ? 22 - name.size() : 1, ' ') << what << "\n";

  out << "Decompositions (X \\ Y -> complement), Hirzebruch shown for k = " << k << ":\n";
  const std::vector<Space> totals{make_p1(), make_p2(), make_affine(2), make_hirzebruch(k)};
  for (const auto& t : totals) {
    for (const auto& d : builtin_decompositions(t)) {
      const auto lhs = d.label();
      out << "  " << lhs << std::string(lhs.size() < 22 ? 22 - lhs.size() : 1, ' ') << "-> " << d.complement.name
          << "\n";
    }
  }
  out << "Custom spaces:\n";
  if (custom.empty()) out << "  (none)\n";
  for (const auto& s : custom)
    out << "  " << s.name << " (" << s.charts.size() << " charts, dim " << s.complex_dimension() << ", "
        << (s.compact ? "compact" : "noncompact") << ")\n";
}

inline std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace detail

/// Runs one command line (args exclude the program name). A fresh catalog
/// is used per invocation.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cohomc: compactly supported cohomology of monomial-chart spaces"};
  app.require_subcommand(0, 1);
  bool dump_catalog = false;
  app.add_flag("--dump-catalog", dump_catalog, "Print the catalog as JSON");

  detail::SpaceArgs compute_space;
  std::string method = "additive";
  std::optional<int> max_q;
  bool explain = false;
  bool partial = false;
  std::string via;
  auto* compute = app.add_subcommand("compute", "Compute H^q_c for one space");
  detail::add_space_options(compute, compute_space);
  compute->add_option("--method", method, "additive | kunneth | catalog")->capture_default_str();
  compute->add_option("--max-q", max_q, "Highest degree to compute");
  compute->add_flag("--explain", explain, "Include the sequence or Kunneth summands");
  compute->add_flag("--partial", partial, "Report underdetermined degrees instead of failing");
  compute->add_option("--via", via, "Decomposition label (e.g. 'H_{1} \\ Y_1') or total space name");

  detail::SpaceArgs verify_space;
  std::string methods;
  std::int64_t bound = kDefaultOracleBound;
  std::string verify_via;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check two methods with the lattice oracle");
  detail::add_space_options(verify_cmd, verify_space);
  verify_cmd->add_option("--methods", methods, "Two methods, comma separated")->required();
  verify_cmd->add_option("--bound", bound, "Oracle box bound")->capture_default_str();
  verify_cmd->add_option("--via", verify_via, "Decomposition for the additive method");

  std::vector<std::string> list_files;
  std::int64_t list_k = 1;
  auto* list = app.add_subcommand("list", "List builtin spaces and decompositions");
  list->add_option("--space", list_files, "Custom JSON spaces to validate and list");
  list->add_option("-k", list_k, "Hirzebruch parameter used in the listing")->capture_default_str();

  std::vector<std::string> storage{"cohomc"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  Catalog catalog;
  try {
    if (dump_catalog) {
      out << catalog.dump().dump(2) << "\n";
      if (app.get_subcommands().empty()) return kExitOk;
    }
    if (compute->parsed()) {
      const auto space = detail::load_space(compute_space);
      ComputeRequest req;
      req.method = parse_method(method);
      if (max_q && *max_q < 0) throw InvalidArgument("--max-q must be non-negative");
      req.max_q = max_q;
      req.partial = partial;
      if (!via.empty()) req.via = via;
      if (compute_space.k) req.k_hint = *compute_space.k;
      const auto o = run_method(space, req, catalog);
      out << outcome_to_json(o, explain).dump(2) << "\n";
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      const auto names = detail::split_csv(methods);
      if (names.size() != 2) throw InvalidArgument("--methods takes exactly two methods");
      if (bound < 1) throw InvalidArgument("--bound must be positive");
      const auto space = detail::load_space(verify_space);
      ComputeRequest base;
      if (!verify_via.empty()) base.via = verify_via;
      if (verify_space.k) base.k_hint = *verify_space.k;
      const auto v = verify(space, parse_method(names[0]), parse_method(names[1]), bound, catalog, base);
      for (const auto& [q, verdict] : v.verdicts) {
        out << "H^" << q << "_c(" << space.name << "): " << to_string(verdict.kind);
        if (verdict.witness) {
          out << " witness (";
          for (std::size_t i = 0; i < verdict.witness->size(); ++i) out << (i ? "," : "") << (*verdict.witness)[i];
          out << ")";
        }
        if (!verdict.detail.empty()) out << " [" << verdict.detail << "]";
        out << "\n";
      }
      out << (v.all_equal ? "all degrees Equal" : "not all degrees Equal") << " (bound " << bound << ")\n";
      return v.all_equal ? kExitOk : kExitMismatch;
    }
    if (list->parsed()) {
      std::vector<Space> custom;
      for (const auto& f : list_files) custom.push_back(detail::load_space({"", f, std::nullopt, std::nullopt}));
      detail::print_list(out, list_k, custom);
      return kExitOk;
    }
    if (!dump_catalog) {
      out << app.help();
      return kExitInput;
    }
    return kExitOk;
  } catch (const Underdetermined& e) {
    err << "underdetermined: " << e.what() << "\n";
    return kExitUnderdetermined;
  } catch (const InvalidArgument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInput;
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "resolution failed: " << e.what() << "\n";
    return kExitResolution;
  }
}

}  // namespace cohomc
