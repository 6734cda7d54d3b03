#pragma once

// Command-line front end. run_cli() takes its streams as arguments so the
// whole tool can be driven in-process by tests.
//
// Exit codes: 0 definite verdict, 2 input error, 3 guard refusal.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "htour/classify.hpp"
#include "htour/completion.hpp"
#include "htour/core.hpp"
#include "htour/families.hpp"
#include "htour/io.hpp"
#include "htour/random.hpp"
#include "htour/ramsey.hpp"
#include "htour/report.hpp"
#include "htour/verify.hpp"

namespace htour {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitGuard = 3;

namespace cli_detail {

struct Options {
  std::string input = "-";
  std::string allow = "C4,O4";
  std::string family;
  int n = -1;
  std::optional<std::size_t> cap;
  std::optional<std::uint64_t> seed;
  int jobs = 1;
  bool no_timing = false;
  std::string order;
  std::string kind = "cyclic";
  std::string c_file, b_file, a_file;
  std::string sizes;
  bool prune = false;
  bool override_guard = false;
  std::string level = "quick";
};

inline std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    std::istringstream tok(item);
    int v = 0;
    std::string rest;
    if (!(tok >> v) || (tok >> rest)) throw InputError("bad integer list '" + s + "'");
    out.push_back(v);
  }
  return out;
}

inline HTDocument load(const std::string& path, std::istream& in) {
  if (path == "-") return read_htfile(in);
  std::ifstream f(path);
  if (!f) throw InputError("cannot open '" + path + "'");
  return read_htfile(f);
}

inline OrderedHT load_ordered(const std::string& path, ExpansionKind kind, std::istream& in) {
  HTDocument doc = load(path, in);
  LinearOrder ord = doc.order ? *doc.order : LinearOrder::natural(doc.ht.size());
  std::optional<SimpleGraph> graph = doc.graph;
  if (kind == ExpansionKind::Even && !graph) graph = SimpleGraph(doc.ht.size());
  if (kind != ExpansionKind::Even) graph.reset();
  return expand(std::move(doc.ht), kind, std::move(ord), std::move(graph));
}

inline HTDocument generate(const Options& o) {
  auto need_n = [&](int lo) {
    if (o.n < lo) throw InputError("--family " + o.family + " needs --n >= " + std::to_string(lo));
    return o.n;
  };
  const std::string& f = o.family;
  if (f == "h4") return {h4_instance(), {}, {}};
  if (f == "o4") return {o4_instance(), {}, {}};
  if (f == "c4") return {c4_instance(), {}, {}};
  if (f == "g") return {gadget(LinkKind::Fwd), {}, {}};
  if (f == "gneg") return {gadget(LinkKind::FwdNeg), {}, {}};
  if (f == "on") return {gen_on(need_n(6)), {}, {}};
  if (f == "onneg") return {gen_onneg(need_n(6)), {}, {}};
  if (f == "bn") return {gen_bn(need_n(6)), {}, {}};
  if (f == "cyclic" || f == "even") {
    const int n = need_n(1);
    Rng rng(o.seed.value_or(0));
    LinearOrder ord = o.seed ? random_order(rng, n) : LinearOrder::natural(n);
    if (f == "cyclic") return {gen_cyclic(ord), ord, {}};
    SimpleGraph g = random_graph(rng, n);
    return {gen_even(g, ord), ord, g};
  }
  throw InputError("unknown family '" + f + "'");
}

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                   std::ostream& err) {
  using cli_detail::Options;
  Options o;
  CLI::App app{"Construct, classify, complete and verify finite 3-hypertournaments", "htour"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub, bool with_input) {
    if (with_input) sub->add_option("file", o.input, "HTFile to read ('-' for stdin)");
    sub->add_flag("--no-timing", o.no_timing, "Emit timing as null for byte-stable reports");
    return sub;
  };
  auto with_allow = [&](CLI::App* sub) {
    sub->add_option("--allow", o.allow, "Allowed 4-types, e.g. C4,O4");
    return sub;
  };

  auto* validate = common(app.add_subcommand("validate", "Parse and canonicalize a structure"), true);
  auto* classify4 = common(app.add_subcommand("classify4", "Type of a 4-vertex structure"), true);
  auto* member = with_allow(common(app.add_subcommand("member", "4-constrained class membership"), true));
  auto* hat_cmd = common(app.add_subcommand("hat", "Hypergraph of a structure under an order"), true);
  hat_cmd->add_option("--order", o.order, "Comma-separated order (default: file order or natural)");
  auto* complete_cmd = with_allow(common(app.add_subcommand("complete", "Find a completion"), true));
  auto* enumerate = with_allow(common(app.add_subcommand("enumerate", "List all completions"), true));
  enumerate->add_option("--cap", o.cap, "Stop after this many completions");
  auto* minimal = with_allow(
      common(app.add_subcommand("minimal-obstruction", "Check minimal non-completability"), true));
  minimal->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  auto* gen = common(app.add_subcommand("gen", "Generate a named structure as an HTFile"), false);
  gen->add_option("--family", o.family, "h4|o4|c4|g|gneg|on|onneg|bn|cyclic|even")->required();
  gen->add_option("--n", o.n, "Size parameter");
  gen->add_option("--seed", o.seed, "Random order/graph for cyclic and even");
  auto* ramsey = common(app.add_subcommand("ramsey", "Exhaustive arrow check C -> (B)^A_2"), false);
  ramsey->add_option("--kind", o.kind, "cyclic|even|all");
  ramsey->add_option("--c", o.c_file, "HTFile for C");
  ramsey->add_option("--b", o.b_file, "HTFile for B");
  ramsey->add_option("--a", o.a_file, "HTFile for A");
  ramsey->add_option("--sizes", o.sizes, "C,B,A sizes of naturally ordered cyclic structures");
  ramsey->add_flag("--prune", o.prune, "Depth-first search with early cuts");
  ramsey->add_flag("--override-guard", o.override_guard, "Allow more than 25 embeddings (needs --prune)");
  ramsey->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  auto* orders = common(app.add_subcommand("orders-count", "Orders compatible with a cyclic structure"), true);
  auto* verify_cmd = common(app.add_subcommand("verify-paper", "Run the verification suite"), false);
  verify_cmd->add_option("--level", o.level, "quick|standard|full");
  verify_cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", o.seed, "Seed for the randomized drivers");

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "htour: " << e.what() << "\n" << app.help();
    return kExitInput;
  }

  const auto t0 = std::chrono::steady_clock::now();
  auto finish = [&](Json report) {
    std::optional<double> ms;
    if (!o.no_timing) {
      ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
    set_timing(report, ms);
    out << render(report);
    return kExitOk;
  };
  std::string command = app.get_subcommands().front()->get_name();
  auto fail = [&](const char* kind, const std::exception& e, int code) {
    err << "htour: " << e.what() << "\n";
    Json report = make_report(command, nullptr, "error", Json{{"kind", kind}, {"message", e.what()}});
    set_timing(report, std::nullopt);
    out << render(report);
    return code;
  };

  try {
    const ConstraintSet allowed = ConstraintSet::parse(o.allow);
    if (validate->parsed()) return finish(report_validate(cli_detail::load(o.input, in)));
    if (classify4->parsed()) return finish(report_classify4(cli_detail::load(o.input, in).ht));
    if (member->parsed()) return finish(report_member(cli_detail::load(o.input, in).ht, allowed));
    if (hat_cmd->parsed()) {
      HTDocument doc = cli_detail::load(o.input, in);
      LinearOrder ord = !o.order.empty() ? LinearOrder(cli_detail::parse_int_list(o.order))
                        : doc.order      ? *doc.order
                                         : LinearOrder::natural(doc.ht.size());
      return finish(report_hat(doc.ht, ord));
    }
    if (complete_cmd->parsed()) return finish(report_complete(cli_detail::load(o.input, in).ht, allowed));
    if (enumerate->parsed()) {
      return finish(report_enumerate(cli_detail::load(o.input, in).ht, allowed, o.cap));
    }
    if (minimal->parsed()) {
      return finish(report_minimal_obstruction(cli_detail::load(o.input, in).ht, allowed, o.jobs));
    }
    if (gen->parsed()) {
      out << emit_htfile(cli_detail::generate(o));
      return kExitOk;
    }
    if (ramsey->parsed()) {
      const ExpansionKind kind = parse_expansion_kind(o.kind);
      const ArrowOptions opt{o.prune, o.override_guard, o.jobs};
      if (!o.sizes.empty()) {
        if (kind != ExpansionKind::Cyclic) throw InputError("--sizes builds cyclic structures only");
        const auto s = cli_detail::parse_int_list(o.sizes);
        if (s.size() != 3) throw InputError("--sizes takes C,B,A");
        for (int v : s)
          if (v < 0 || v > kMaxVertices) throw InputError("size out of range");
        return finish(report_ramsey(verify::ordered_cyclic(s[0]), verify::ordered_cyclic(s[1]),
                                    verify::ordered_cyclic(s[2]), opt));
      }
      if (o.c_file.empty() || o.b_file.empty() || o.a_file.empty()) {
        throw InputError("ramsey needs --c, --b and --a, or --sizes");
      }
      return finish(report_ramsey(cli_detail::load_ordered(o.c_file, kind, in),
                                  cli_detail::load_ordered(o.b_file, kind, in),
                                  cli_detail::load_ordered(o.a_file, kind, in), opt));
    }
    if (orders->parsed()) return finish(report_orders_count(cli_detail::load(o.input, in).ht));
    if (verify_cmd->parsed()) {
      verify::Plan plan = verify::plan_for(o.level);
      plan.jobs = o.jobs;
      if (o.seed) plan.seed = *o.seed;
      const auto results = verify::run_all(plan);
      bool all = true;
      for (const auto& r : results) {
        err << verify::summary_line(r) << "\n";
        for (const auto& f : r.failures) err << "      " << f << "\n";
        all = all && r.passed;
      }
      Json inputs{{"level", o.level}, {"seed", plan.seed}, {"jobs", plan.jobs}};
      finish(make_report("verify-paper", std::move(inputs), all ? "pass" : "fail",
                         verify::results_json(results, !o.no_timing)));
      return all ? kExitOk : 1;
    }
  } catch (const GuardRefusal& e) {
    return fail("guard", e, kExitGuard);
  } catch (const ContradictoryTriple& e) {
    return fail("ContradictoryTriple", e, kExitInput);
  } catch (const InputError& e) {
    return fail("input", e, kExitInput);
  }
  return kExitInput;
}

}  // namespace htour
