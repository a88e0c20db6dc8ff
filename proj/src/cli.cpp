#include "hpnet/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "hpnet/dsl.hpp"
#include "hpnet/hierarchy.hpp"
#include "hpnet/pattern.hpp"
#include "hpnet/report.hpp"
#include "hpnet/timed.hpp"

namespace hpnet {

namespace {

struct Options {
  std::string input;
  bool json = false;
  bool strict_intervals = false;
  std::int64_t k = 1;
  std::int64_t deadline = -1;  // < 0: none
  ExploreLimits limits;
};

std::optional<std::string> read_file(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "hpnet: cannot open '" << path << "'\n";
    return std::nullopt;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_diagnostics(const std::string& origin,
                       const std::vector<Diagnostic>& diags, std::ostream& err) {
  for (const auto& d : diags) err << origin << ":" << to_string(d) << "\n";
}

std::optional<HierarchicalNet> load_net(const Options& opt, std::ostream& err) {
  auto text = read_file(opt.input, err);
  if (!text) return std::nullopt;
  NetParseResult parsed = parse_net({*text, opt.input});
  print_diagnostics(opt.input, parsed.diagnostics, err);
  if (!parsed.ok()) return std::nullopt;
  return std::move(parsed.net);
}

std::optional<PatternExpr> load_pattern(const Options& opt, std::ostream& err) {
  auto text = read_file(opt.input, err);
  if (!text) return std::nullopt;
  PatternParseResult parsed = parse_pattern({*text, opt.input});
  print_diagnostics(opt.input, parsed.diagnostics, err);
  if (!parsed.ok()) return std::nullopt;
  return std::move(parsed.pattern);
}

int emit(const Options& opt, const std::string& command, const Verdicts& verdicts,
         std::ostream& out) {
  Json report = report_envelope(command, opt.input, verdicts);
  if (opt.json)
    out << report.dump(2) << "\n";
  else
    out << render_human(report);
  return verdicts.all_pass() ? 0 : 1;
}

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::yes: return "pass";
    case Verdict::no: return "fail";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

// ------------------------------------------------------------- commands

int cmd_validate(const Options& opt, std::ostream& out, std::ostream& err) {
  auto h = load_net(opt, err);
  if (!h) return 2;
  Verdicts verdicts;

  std::vector<Violation> status;
  auto collect = [&](const std::string& name, const Net& net) {
    for (auto v : validate_structure(net, opt.strict_intervals).violations) {
      v.where = name + "/" + v.where;
      status.push_back(std::move(v));
    }
  };
  collect(h->root_name, h->root.net);
  for (const auto& [name, def] : h->subnets) collect(name, def.net);
  verdicts.add("validate_structure", status.empty() ? "pass" : "fail",
               Json{{"violations", violations_to_json(status)}});

  const auto hv = validate_hierarchy(*h);
  verdicts.add("hierarchy", hv.ok() ? "pass" : "fail",
               Json{{"violations", violations_to_json(hv.violations)}});
  return emit(opt, "validate", verdicts, out);
}

int cmd_flatten(const Options& opt, std::ostream& out, std::ostream& err) {
  auto h = load_net(opt, err);
  if (!h) return 2;
  FlattenResult flat = flatten(*h);
  for (const auto& w : flat.warnings)
    err << opt.input << ": warning[" << w.code << "] " << w.where << ": " << w.detail
        << "\n";
  if (!flat.ok()) {
    Verdicts verdicts;
    verdicts.add("flatten", "fail", Json{{"errors", violations_to_json(flat.errors)}});
    return emit(opt, "flatten", verdicts, out);
  }
  const std::string text = serialize_flat(*flat.net, h->root_name);
  if (opt.json) {
    Verdicts verdicts;
    Json details;
    details["net"] = text;
    details["warnings"] = violations_to_json(flat.warnings);
    verdicts.add("flatten", "pass", std::move(details));
    return emit(opt, "flatten", verdicts, out);
  }
  out << text;
  return 0;
}

int cmd_analyze(const Options& opt, std::ostream& out, std::ostream& err) {
  auto h = load_net(opt, err);
  if (!h) return 2;
  FlattenResult flat = flatten(*h);
  Verdicts verdicts;
  if (!flat.ok()) {
    verdicts.add("flatten", "fail", Json{{"errors", violations_to_json(flat.errors)}});
    return emit(opt, "analyze", verdicts, out);
  }
  const Net& net = *flat.net;

  const auto structure = validate_structure(net, opt.strict_intervals);
  verdicts.add("validate_structure", structure.ok() ? "pass" : "fail",
               Json{{"violations", violations_to_json(structure.violations)}});

  const auto wf = check_wellformed_workflow(net);
  verdicts.add("wellformed_workflow", wf.ok() ? "pass" : "fail",
               Json{{"violations", violations_to_json(wf.violations)}});

  Marking m0;
  m0.set(net.entry, 1);

  const auto bounded = check_boundedness(net, m0, opt.k, opt.limits);
  {
    Json details;
    details["k"] = opt.k;
    if (bounded.witness) details["witness_marking"] = bounded.witness->to_string();
    verdicts.add("boundedness", verdict_str(bounded.bounded), std::move(details),
                 bounded.witness ? trace_to_json(bounded.witness_path) : Json());
  }

  const auto deadlock = check_deadlock_freedom(net, m0, opt.limits);
  {
    Json details;
    if (deadlock.witness) details["witness_marking"] = deadlock.witness->to_string();
    verdicts.add("deadlock_freedom", verdict_str(deadlock.deadlock_free),
                 std::move(details),
                 deadlock.witness ? trace_to_json(deadlock.witness_path) : Json());
  }

  const auto completion = check_proper_completion(net, opt.limits);
  {
    Json details;
    if (!completion.detail.empty()) details["reason"] = completion.detail;
    if (completion.residual_witness)
      details["witness_marking"] = completion.residual_witness->to_string();
    verdicts.add("proper_completion", verdict_str(completion.proper), std::move(details),
                 completion.residual_witness ? trace_to_json(completion.residual_path)
                                             : Json());
  }
  return emit(opt, "analyze", verdicts, out);
}

int cmd_schedule(const Options& opt, std::ostream& out, std::ostream& err) {
  auto h = load_net(opt, err);
  if (!h) return 2;
  FlattenResult flat = flatten(*h);
  Verdicts verdicts;
  if (!flat.ok()) {
    verdicts.add("flatten", "fail", Json{{"errors", violations_to_json(flat.errors)}});
    return emit(opt, "schedule", verdicts, out);
  }
  const Net& net = *flat.net;

  std::optional<std::int64_t> deadline;
  if (opt.deadline >= 0) deadline = opt.deadline;
  const auto sched = check_schedulability(net, deadline, opt.limits);
  {
    Json details;
    if (sched.schedulable == Verdict::yes)
      details["completion"] = interval_to_json(sched.completion);
    if (deadline) details["deadline"] = *deadline;
    if (sched.truncated) details["truncated"] = true;
    details["violations"] = timed_violations_to_json(sched.violations);
    verdicts.add("schedulability", verdict_str(sched.schedulable), std::move(details),
                 sched.schedulable == Verdict::yes ? trace_to_json(sched.fastest)
                                                   : Json());
  }

  const auto consistency = check_time_consistency(net, opt.limits);
  verdicts.add("time_consistency", consistency.empty() ? "pass" : "fail",
               Json{{"violations", timed_violations_to_json(consistency)}});
  return emit(opt, "schedule", verdicts, out);
}

int cmd_teb(const Options& opt, std::ostream& out, std::ostream& err) {
  auto pattern = load_pattern(opt, err);
  if (!pattern) return 2;
  const TimeInterval teb = teb_eval(*pattern);
  if (!opt.json) {
    out << teb.to_string() << "\n";
    return 0;
  }
  Verdicts verdicts;
  verdicts.add("teb", "pass", Json{{"teb", interval_to_json(teb)}});
  return emit(opt, "teb", verdicts, out);
}

int cmd_oracle_check(const Options& opt, std::ostream& out, std::ostream& err) {
  auto pattern = load_pattern(opt, err);
  if (!pattern) return 2;
  const BoundsReport bounds = check_bounds_against_oracle(*pattern, opt.limits);
  Verdicts verdicts;
  Json details;
  details["calculus"] = interval_to_json(bounds.calculus);
  details["statespace"] = interval_to_json(bounds.statespace);
  details["relation"] = to_string(bounds.relation);
  const bool pass = bounds.relation == BoundsRelation::equal ||
                    bounds.relation == BoundsRelation::calculus_contains_statespace;
  verdicts.add("bounds_relation",
               bounds.relation == BoundsRelation::unknown_relation ? "unknown"
               : pass                                              ? "pass"
                                                                   : "fail",
               std::move(details));
  return emit(opt, "oracle-check", verdicts, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"verification workbench for hierarchical timed workflow nets"};
  app.name("hpnet");
  app.require_subcommand(1);

  Options opt;

  auto add_common = [&](CLI::App* sub, bool timing) {
    sub->add_option("input", opt.input, "input file")->required();
    sub->add_flag("--json", opt.json, "emit a JSON report");
    sub->add_option("--max-states", opt.limits.max_states, "state exploration cap");
    sub->add_option("--max-token-bound", opt.limits.max_token_bound,
                    "per-place token cap for unboundedness detection");
    sub->add_flag("--strict-intervals", opt.strict_intervals,
                  "require strictly increasing interval bounds");
    if (timing)
      sub->add_option("--deadline", opt.deadline, "end-to-end completion deadline");
  };

  CLI::App* validate = app.add_subcommand("validate", "structural and hierarchy checks");
  add_common(validate, false);
  CLI::App* flatten_cmd = app.add_subcommand("flatten", "print the flattened net");
  add_common(flatten_cmd, false);
  CLI::App* analyze = app.add_subcommand(
      "analyze", "untimed checks (structure, workflow shape, boundedness, deadlock, completion)");
  add_common(analyze, false);
  analyze->add_option("--k", opt.k, "token bound to check (default 1, safeness)");
  CLI::App* schedule =
      app.add_subcommand("schedule", "timed schedulability and time consistency");
  add_common(schedule, true);
  CLI::App* teb = app.add_subcommand("teb", "evaluate a pattern file's TEB interval");
  add_common(teb, false);
  CLI::App* oracle = app.add_subcommand(
      "oracle-check", "compare the pattern calculus against the timed state space");
  add_common(oracle, false);

  std::vector<const char*> argv{"hpnet"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "hpnet: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(opt, out, err);
    if (app.got_subcommand(flatten_cmd)) return cmd_flatten(opt, out, err);
    if (app.got_subcommand(analyze)) return cmd_analyze(opt, out, err);
    if (app.got_subcommand(schedule)) return cmd_schedule(opt, out, err);
    if (app.got_subcommand(teb)) return cmd_teb(opt, out, err);
    if (app.got_subcommand(oracle)) return cmd_oracle_check(opt, out, err);
  } catch (const NetError& e) {
    err << "hpnet: " << e.what() << "\n";
    return 2;
  }
  err << "hpnet: no command\n";
  return 2;
}

}  // namespace hpnet
