#include "synorder/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "synorder/algebra.hpp"
#include "synorder/error.hpp"
#include "synorder/logic.hpp"
#include "synorder/oracle.hpp"
#include "synorder/order_decide.hpp"
#include "synorder/order_type.hpp"
#include "synorder/structured.hpp"
#include "synorder/sync_automaton.hpp"

namespace synorder::cli {

namespace {

using nlohmann::ordered_json;

SyncAutomaton load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(Errc::BadParameters, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_automaton_json(buf.str());
}

void write_output(const std::string& text, const std::string& path,
                  std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(Errc::BadParameters, "cannot write '" + path + "'");
  f << text;
}

int verdict(bool yes, std::ostream& out, bool json, const char* key) {
  if (json) {
    ordered_json j;
    j[key] = yes;
    out << j.dump() << "\n";
  } else {
    out << (yes ? "true" : "false") << "\n";
  }
  return yes ? 0 : 1;
}

Direction parse_direction(const std::string& text) {
  if (text == "omega" || text == "asc") return Direction::Ascending;
  if (text == "omega-star" || text == "desc") return Direction::Descending;
  throw Error(Errc::BadParameters, "unknown direction '" + text + "'");
}

std::map<std::string, UPSet> parse_bindings(const std::vector<std::string>& lets) {
  std::map<std::string, UPSet> named;
  for (const auto& binding : lets) {
    auto eq = binding.find('=');
    if (eq == std::string::npos)
      throw Error(Errc::BadParameters, "--let expects NAME=UPSET");
    named.insert_or_assign(binding.substr(0, eq),
                           UPSet::parse(binding.substr(eq + 1)));
  }
  return named;
}

struct OpSpec {
  std::size_t automata;
  std::size_t extra;
};

const std::map<std::string, OpSpec> kOps = {
    {"union", {2, 0}},        {"intersect", {2, 0}},
    {"complement", {1, 0}},   {"inverse", {1, 0}},
    {"compose", {2, 0}},      {"sum", {2, 0}},
    {"scale", {1, 2}},        {"trace", {0, 2}},
    {"complete-with", {1, 1}}, {"collapse", {1, 0}},
};

SyncAutomaton run_op(const std::string& name,
                     const std::vector<std::string>& args) {
  auto it = kOps.find(name);
  if (it == kOps.end())
    throw Error(Errc::BadParameters, "unknown operation '" + name + "'");
  if (args.size() != it->second.automata + it->second.extra)
    throw Error(Errc::BadParameters,
                "operation '" + name + "' takes " +
                    std::to_string(it->second.automata + it->second.extra) +
                    " arguments");
  if (name == "union")
    return product(load_file(args[0]), load_file(args[1]), BoolOp::Union);
  if (name == "intersect")
    return product(load_file(args[0]), load_file(args[1]), BoolOp::Intersection);
  if (name == "complement") return complement(load_file(args[0]));
  if (name == "inverse") return inverse(load_file(args[0]));
  if (name == "compose") return compose(load_file(args[0]), load_file(args[1]));
  if (name == "sum") return sum_disjoint(load_file(args[0]), load_file(args[1]));
  if (name == "scale")
    return scale(load_file(args[0]), std::stoull(args[1]), std::stoull(args[2]));
  if (name == "trace")
    return natural_order_on(UPSet::parse(args[0]), parse_direction(args[1]));
  if (name == "complete-with")
    return complete_with(load_file(args[0]), parse_direction(args[1]));
  return collapse_finite_complement(load_file(args[0]));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"order decision procedures for unary synchronous automata"};
  app.name("synorder");
  bool json = false;
  app.add_flag("--json", json, "emit verdicts as JSON");
  app.require_subcommand(1);

  std::string file_a, file_b, check_what, extremal_side, op_name, formula_text,
      out_path, oracle_file;
  std::uint64_t member_k = 0, member_l = 0, oracle_max = 50;
  std::vector<std::string> op_args, lets;

  auto* member = app.add_subcommand("member", "is the pair (k,l) in the relation");
  member->add_option("automaton", file_a)->required();
  member->add_option("k", member_k)->required();
  member->add_option("l", member_l)->required();

  auto* check = app.add_subcommand("check", "test order, linear or complete");
  check->add_option("property", check_what)->required()
      ->check(CLI::IsMember({"order", "linear", "complete"}));
  check->add_option("automaton", file_a)->required();

  auto* chains = app.add_subcommand("chains", "infinite chain verdicts");
  chains->add_option("automaton", file_a)->required();

  auto* antichains = app.add_subcommand("antichains", "infinite antichain verdict");
  antichains->add_option("automaton", file_a)->required();

  auto* extremal = app.add_subcommand("extremal", "maximal or minimal elements");
  extremal->add_option("side", extremal_side)->required()
      ->check(CLI::IsMember({"max", "min"}));
  extremal->add_option("automaton", file_a)->required();

  auto* type = app.add_subcommand("type", "order type of a linear order");
  type->add_option("automaton", file_a)->required();

  auto* equiv = app.add_subcommand("equiv", "are two linear orders equivalent");
  equiv->add_option("first", file_a)->required();
  equiv->add_option("second", file_b)->required();

  auto* op = app.add_subcommand("op", "apply a relation operation");
  op->add_option("operation", op_name)->required();
  op->add_option("args", op_args);
  op->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* compile = app.add_subcommand("compile", "compile a formula");
  compile->add_option("formula", formula_text)->required();
  compile->add_option("--let", lets, "bind NAME=UPSET")->take_all();
  compile->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* to_form = app.add_subcommand("to-formula", "defining formula of an automaton");
  to_form->add_option("automaton", file_a)->required();

  auto* norm = app.add_subcommand("normalize", "dump the aligned normal form");
  norm->add_option("automaton", file_a)->required();

  auto* dot = app.add_subcommand("export-dot", "write the automaton as DOT");
  dot->add_option("automaton", file_a)->required();

  auto* oracle = app.add_subcommand("oracle", "brute-force cross-checks");
  auto* verify = oracle->add_subcommand("verify", "compare verdicts on a prefix");
  verify->add_option("automaton", oracle_file)->required();
  verify->add_option("--max", oracle_max, "prefix bound");
  oracle->require_subcommand(1);

  std::vector<const char*> argv;
  argv.push_back("synorder");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "PARSE_ERROR: " << e.what() << "\n";
    return 2;
  }

  try {
    if (member->parsed()) {
      SyncAutomaton a = load_file(file_a);
      return verdict(a.accepts({member_k, member_l}), out, json, "member");
    }
    if (check->parsed()) {
      SyncAutomaton a = load_file(file_a);
      bool yes = check_what == "order" ? is_strict_order(a)
                 : check_what == "linear" ? is_linear(a)
                                          : is_complete(a);
      return verdict(yes, out, json, check_what.c_str());
    }
    if (chains->parsed()) {
      SyncAutomaton a = load_file(file_a);
      ChainVerdict asc = has_infinite_chain(a, Direction::Ascending);
      ChainVerdict desc = has_infinite_chain(a, Direction::Descending);
      ordered_json j;
      j["asc"] = asc.exists;
      j["desc"] = desc.exists;
      j["witness"] = ordered_json::object();
      if (asc.witness)
        j["witness"]["asc"] = {{"start", asc.witness->start},
                               {"step", asc.witness->step}};
      if (desc.witness)
        j["witness"]["desc"] = {{"start", desc.witness->start},
                                {"step", desc.witness->step}};
      out << j.dump() << "\n";
      return asc.exists || desc.exists ? 0 : 1;
    }
    if (antichains->parsed()) {
      SyncAutomaton a = load_file(file_a);
      bool infinite = has_infinite_antichain(a);
      ordered_json j;
      j["infinite"] = infinite;
      if (!infinite) j["bound"] = antichain_bound(a);
      out << j.dump() << "\n";
      return infinite ? 0 : 1;
    }
    if (extremal->parsed()) {
      SyncAutomaton a = load_file(file_a);
      ExtremalVerdict v = extremal_element(
          a, extremal_side == "max" ? Side::Max : Side::Min);
      ordered_json j;
      j["exists"] = v.exists;
      if (v.witness) j["witness"] = *v.witness;
      out << j.dump() << "\n";
      return v.exists ? 0 : 1;
    }
    if (type->parsed()) {
      PoorSum t = order_type(load_file(file_a));
      if (json) {
        ordered_json j;
        j["type"] = to_string(t);
        out << j.dump() << "\n";
      } else {
        out << to_string(t) << "\n";
      }
      return 0;
    }
    if (equiv->parsed()) {
      bool yes = equivalent_orders(load_file(file_a), load_file(file_b));
      return verdict(yes, out, json, "equivalent");
    }
    if (op->parsed()) {
      write_output(dump_automaton_json(run_op(op_name, op_args)), out_path, out);
      return 0;
    }
    if (compile->parsed()) {
      Formula f = parse_formula(formula_text, parse_bindings(lets));
      write_output(dump_automaton_json(compile_formula(f)), out_path, out);
      return 0;
    }
    if (to_form->parsed()) {
      out << to_string(automaton_to_formula(load_file(file_a))) << "\n";
      return 0;
    }
    if (norm->parsed()) {
      out << dump(normalize(to_structured(load_file(file_a))));
      return 0;
    }
    if (dot->parsed()) {
      out << to_dot(load_file(file_a));
      return 0;
    }
    if (verify->parsed()) {
      auto divs = verify_against_brute_force(load_file(oracle_file), oracle_max);
      out << divergences_to_json(divs);
      return divs.empty() ? 0 : 1;
    }
  } catch (const Error& e) {
    err << to_string(e.code()) << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "ERROR: " << e.what() << "\n";
    return 2;
  }
  err << "ERROR: no subcommand\n";
  return 2;
}

}  // namespace synorder::cli
