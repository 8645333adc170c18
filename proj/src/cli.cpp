#include "exbetti/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "exbetti/error.hpp"
#include "exbetti/json_io.hpp"
#include "exbetti/oracle.hpp"

namespace exbetti {

namespace {

constexpr const char* kVersion = "exbetti 0.1.0";

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InfeasibleSpec: return kExitInfeasible;
    case ErrorKind::Uncovered: return kExitUncovered;
    case ErrorKind::VerificationFailed: return kExitVerification;
    default: return kExitUsage;
  }
}

int report_error(std::ostream& err, std::string_view kind, const std::string& message, int code) {
  err << Json{{"error", kind}, {"message", message}}.dump() << '\n';
  return code;
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

Json corner_list(const std::vector<Corner>& corners) {
  Json out = Json::array();
  for (const auto& c : corners) out.push_back(Json{{"k", c.k}, {"l", c.l}});
  return out;
}

int position_exit(const PositionVerdict& verdict) {
  return verdict.status == PositionStatus::Uncovered ? kExitUncovered : kExitInfeasible;
}

std::string_view position_error(const PositionVerdict& verdict) {
  return to_string(verdict.status == PositionStatus::Uncovered ? ErrorKind::Uncovered : ErrorKind::InfeasibleSpec);
}

struct Options {
  std::string input;
  std::string spec;
  std::string mode;
  bool strong = false;
  bool chain = false;
  int m = 0;
  int n = 0;
  int max_degree = 0;
  int max_gens = 0;
  int cap = 0;
  std::uint64_t budget = 0;
};

int cmd_betti(const Options& opt, std::istream& in, std::ostream& out) {
  auto module = module_from_json(parse_json(read_input(opt.input, in)));
  auto table = ek_betti(module);
  auto scan = extremal_from_table(table);
  Json doc{{"n", module.num_vars()}, {"betti", to_json(table)}, {"diagram", render_diagram(table, corners_of(scan.corners))}};
  out << dump_json(doc);
  return kExitOk;
}

int cmd_diagram(const Options& opt, std::istream& in, std::ostream& out) {
  auto module = module_from_json(parse_json(read_input(opt.input, in)));
  auto table = ek_betti(module);
  out << render_diagram(table, corners_of(extremal_from_table(table).corners));
  return kExitOk;
}

int cmd_corners(const Options& opt, std::istream& in, std::ostream& out) {
  auto module = module_from_json(parse_json(read_input(opt.input, in)));
  auto scan = extremal_from_table(ek_betti(module));
  auto view = corner_matrix(module);
  Json ideals = Json::array();
  for (int h : view.corner_ideals) ideals.push_back(h + 1);
  Json components = Json::array();
  for (int h = 0; h < module.rank(); ++h) {
    auto cc = component_corners(module, h);
    components.push_back(Json{{"index", h + 1}, {"own", corner_list(cc.own)}, {"in_module", corner_list(cc.in_module)}});
  }
  Json free_corner = nullptr;
  if (scan.free_corner) free_corner = to_json(std::vector<Extremal>{*scan.free_corner}).front();
  Json doc{{"corners", to_json(scan.corners)},
           {"free_corner", free_corner},
           {"matrix", view.rows},
           {"corner_ideals", ideals},
           {"components", components}};
  out << dump_json(doc);
  return kExitOk;
}

int cmd_check_stable(const Options& opt, std::istream& in, std::ostream& out) {
  auto ideal = ideal_from_json(parse_json(read_input(opt.input, in)));
  auto violation = opt.strong ? first_strong_violation(ideal) : first_stable_violation(ideal);
  Json doc{{"property", opt.strong ? "strongly-stable" : "stable"},
           {"result", !violation.has_value()},
           {"violation", violation ? to_json(*violation) : Json(nullptr)}};
  out << dump_json(doc);
  return kExitOk;
}

int cmd_realize_ideal(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  auto spec_doc = spec_from_json(parse_json(read_input(opt.spec, in)));
  const Mode mode = opt.mode.empty() ? spec_doc.mode : parse_mode(opt.mode);
  spec_doc.mode = mode;
  const CornerSpec& spec = spec_doc.spec;
  Json doc{{"spec", to_json(spec_doc)}};
  auto positions = validate_positions(spec);
  doc["positions"] = to_json(positions);
  if (!positions.admissible()) {
    out << dump_json(doc);
    return report_error(err, position_error(positions), positions.reason, position_exit(positions));
  }
  auto report = compute_bounds(spec);
  auto strict = check_values(spec, report, Mode::StrictPaper);
  auto coupled = check_values(spec, report, Mode::Coupled);
  doc["bounds"] = to_json(report);
  doc["verdicts"] = Json{{"strict-paper", to_json(strict)}, {"coupled", to_json(coupled)}};
  const auto& chosen = mode == Mode::StrictPaper ? strict : coupled;
  if (!chosen.feasible) {
    out << dump_json(doc);
    return report_error(err, to_string(ErrorKind::InfeasibleSpec),
                        "values exceed the " + std::string(to_string(mode)) + " bound at corner " +
                            std::to_string(chosen.failing.value_or(0) + 1),
                        kExitInfeasible);
  }
  auto witness = opt.chain ? construct_degree2_chain(spec) : construct_ideal(spec, mode);
  if (opt.chain) verify_witness(witness, spec);
  auto table = ek_betti(witness);
  doc["witness"] = to_json(witness);
  doc["betti"] = to_json(table);
  doc["verification"] = Json{{"passed", true},
                             {"strongly_stable", is_strongly_stable(witness)},
                             {"extremal", to_json(extremal_from_generators(witness))}};
  out << dump_json(doc);
  return kExitOk;
}

int cmd_realize_module(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  auto spec_doc = spec_from_json(parse_json(read_input(opt.spec, in)));
  const Mode mode = opt.mode.empty() ? spec_doc.mode : parse_mode(opt.mode);
  const int m = opt.m > 0 ? opt.m : spec_doc.m.value_or(0);
  if (m < 1) throw Error(ErrorKind::InvalidSpec, "rank m missing: pass --m or set \"m\" in the spec");
  spec_doc.mode = mode;
  spec_doc.m = m;
  const CornerSpec& spec = spec_doc.spec;
  Json doc{{"spec", to_json(spec_doc)}};
  auto positions = validate_module_spec(spec, m);
  doc["positions"] = to_json(positions);
  if (!positions.admissible()) {
    out << dump_json(doc);
    return report_error(err, position_error(positions), positions.reason, position_exit(positions));
  }
  auto search = find_corner_matrix(spec, m, mode, opt.budget);
  const char* status = search.status == SearchStatus::Found        ? "found"
                       : search.status == SearchStatus::Infeasible ? "infeasible"
                                                                   : "budget-exhausted";
  doc["search"] = Json{{"status", status},
                       {"nodes", search.nodes},
                       {"tightest_row", search.tightest_row ? Json(*search.tightest_row + 1) : Json(nullptr)},
                       {"reason", search.reason}};
  if (search.status != SearchStatus::Found) {
    out << dump_json(doc);
    if (search.status == SearchStatus::Infeasible) {
      return report_error(err, to_string(ErrorKind::InfeasibleSpec), search.reason, kExitInfeasible);
    }
    return report_error(err, to_string(ErrorKind::BudgetExceeded), search.reason, kExitUsage);
  }
  auto module = construct_module(spec, *search.matrix, mode);
  auto table = ek_betti(module);
  doc["matrix"] = to_json(*search.matrix);
  doc["module"] = to_json(module);
  doc["betti"] = to_json(table);
  doc["diagram"] = render_diagram(table, spec.corners);
  doc["verification"] = Json{{"passed", true}, {"extremal", to_json(extremal_from_generators(module))}};
  out << dump_json(doc);
  return kExitOk;
}

int cmd_oracle_betti(const Options& opt, std::istream& in, std::ostream& out) {
  auto module = module_from_json(parse_json(read_input(opt.input, in)));
  const int cap = opt.cap > 0 ? opt.cap : completeness_cap(module);
  auto koszul = koszul_betti(module, cap);
  bool stable = true;
  for (const auto& c : module.components()) stable = stable && is_stable(c);
  Json doc{{"cap", cap}, {"koszul", to_json(koszul)}, {"stable", stable}};
  int code = kExitOk;
  if (stable) {
    auto ek = ek_betti(module);
    Json mismatches = Json::array();
    std::map<BettiTable::Key, std::pair<Count, Count>> both;
    for (const auto& [key, v] : koszul.entries()) both[key].first = v;
    for (const auto& [key, v] : ek.entries()) both[key].second = v;
    for (const auto& [key, v] : both) {
      if (v.first != v.second) {
        mismatches.push_back(Json{{"i", key.first}, {"j", key.second}, {"koszul", v.first}, {"ek", v.second}});
      }
    }
    doc["ek"] = to_json(ek);
    doc["agree"] = mismatches.empty();
    doc["mismatches"] = mismatches;
    if (!mismatches.empty()) code = kExitVerification;
  } else {
    doc["ek"] = nullptr;
    doc["agree"] = nullptr;
  }
  out << dump_json(doc);
  return code;
}

int cmd_census(const Options& opt, std::ostream& out) {
  CensusLimits limits;
  if (opt.max_gens > 0) limits.max_gens = opt.max_gens;
  if (opt.budget > 0) limits.budget = opt.budget;
  enumerate_strongly_stable(opt.n, opt.max_degree, limits,
                            [&](const MonomialIdeal& ideal) { out << to_json(ideal).dump() << '\n'; });
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Betti tables, corners and realizability for stable monomial ideals and submodules"};
  app.name("exbetti");
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1, 1);
  Options opt;
  opt.budget = 5'000'000;

  auto add_input = [&](CLI::App* sub) { sub->add_option("-i,--input", opt.input, "JSON file, '-' for stdin")->required(); };
  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("--spec", opt.spec, "spec JSON file, '-' for stdin")->required();
    sub->add_option("--mode", opt.mode, "coupled | strict-paper (overrides the file)")
        ->check(CLI::IsMember({"coupled", "strict-paper"}));
  };

  auto* betti = app.add_subcommand("betti", "Eliahou-Kervaire Betti table");
  add_input(betti);
  auto* corners = app.add_subcommand("corners", "corner set, values, corner matrix and corner ideals");
  add_input(corners);
  auto* check = app.add_subcommand("check-stable", "stability test with the first violating move");
  add_input(check);
  check->add_flag("--strong", opt.strong, "test strong stability");
  auto* ideal = app.add_subcommand("realize-ideal", "build a strongly stable ideal with given corners");
  add_spec(ideal);
  ideal->add_flag("--chain", opt.chain, "use the degree-2 chain construction (l_1 = 2, unit values)");
  auto* module = app.add_subcommand("realize-module", "build a strongly stable submodule of S^m");
  add_spec(module);
  module->add_option("--m", opt.m, "rank of the ambient free module")->check(CLI::PositiveNumber);
  module->add_option("--budget", opt.budget, "search node budget");
  auto* oracle = app.add_subcommand("oracle-betti", "Betti table from Koszul homology");
  add_input(oracle);
  oracle->add_option("--cap", opt.cap, "largest internal degree to compute");
  auto* census = app.add_subcommand("census", "stream every strongly stable ideal within the bounds");
  census->add_option("--n", opt.n, "number of variables")->required();
  census->add_option("--max-degree", opt.max_degree, "largest generator degree")->required();
  census->add_option("--max-gens", opt.max_gens, "largest number of generators");
  census->add_option("--budget", opt.budget, "search node budget");
  auto* diagram = app.add_subcommand("diagram", "ASCII Betti diagram with corners marked");
  add_input(diagram);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return report_error(err, "Usage", e.what(), kExitUsage);
  }

  try {
    if (betti->parsed()) return cmd_betti(opt, in, out);
    if (corners->parsed()) return cmd_corners(opt, in, out);
    if (check->parsed()) return cmd_check_stable(opt, in, out);
    if (ideal->parsed()) return cmd_realize_ideal(opt, in, out, err);
    if (module->parsed()) return cmd_realize_module(opt, in, out, err);
    if (oracle->parsed()) return cmd_oracle_betti(opt, in, out);
    if (census->parsed()) return cmd_census(opt, out);
    if (diagram->parsed()) return cmd_diagram(opt, in, out);
  } catch (const Error& e) {
    return report_error(err, to_string(e.kind()), e.what(), exit_code(e.kind()));
  } catch (const std::exception& e) {
    return report_error(err, "Internal", e.what(), kExitUsage);
  }
  return kExitUsage;
}

}  // namespace exbetti
