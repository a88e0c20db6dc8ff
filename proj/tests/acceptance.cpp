// Acceptance suite: exercises the whole workbench at desk scale against
// independent enumerators and pinned golden reports. Prints one line per
// criterion; exits non-zero if any fails.

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "generators.hpp"
#include "oracles.hpp"

#include "hpnet/cli.hpp"
#include "hpnet/dsl.hpp"
#include "hpnet/fixtures.hpp"
#include "hpnet/pattern.hpp"
#include "hpnet/report.hpp"
#include "hpnet/timed.hpp"

using namespace hpnet;

namespace {

struct Criterion {
  bool passed = true;
  std::ostringstream detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

void report(int index, const char* title, const Criterion& c, double elapsed,
            bool& all) {
  std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << "criterion " << index << ": "
            << title;
  const std::string detail = c.detail.str();
  if (!detail.empty()) std::cout << " -- " << detail;
  std::cout << " (" << elapsed << " s)\n";
  all = all && c.passed;
}

// ---------------------------------------------------------------- 1

Criterion untimed_oracle_equivalence(double budget_s) {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();
  testgen::Rng rng(1001);
  const ExploreLimits lim{};
  int mismatches = 0;
  const int runs = 500;
  for (int i = 0; i < runs; ++i) {
    const Net net = testgen::random_untimed_net(rng);
    const Marking m0 = testgen::random_initial_marking(rng, net);
    const auto expected =
        oracle::enumerate_untimed(net, m0, 1, lim.max_token_bound, lim.max_states);
    const auto bounded = check_boundedness(net, m0, 1, lim);
    const auto deadlock = check_deadlock_freedom(net, m0, lim);
    const auto proper = check_proper_completion(net, lim);
    if (bounded.bounded != expected.bounded ||
        deadlock.deadlock_free != expected.deadlock_free ||
        proper.proper != expected.proper)
      mismatches++;
  }
  const double elapsed = seconds_since(start);
  c.passed = mismatches == 0 && elapsed < budget_s;
  c.detail << runs << " nets, " << mismatches << " mismatches";
  if (elapsed >= budget_s) c.detail << ", over the " << budget_s << " s budget";
  return c;
}

// ---------------------------------------------------------------- 2

Criterion timed_saturation_soundness(double budget_s) {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();
  testgen::Rng rng(2002);
  const ExploreLimits lim{};
  int compared = 0, mismatches = 0, skipped = 0;
  while (compared < 200 && skipped < 400) {
    const Net net = testgen::random_timed_workflow(rng);
    const auto brute = oracle::enumerate_timed(net, lim.max_token_bound, 400'000);
    const auto sched = check_schedulability(net, std::nullopt, lim);
    if (brute.truncated || sched.truncated) {
      skipped++;
      continue;
    }
    compared++;
    bool same = sched.schedulable == brute.schedulable;
    if (same && sched.schedulable == Verdict::yes)
      same = sched.completion.lo == brute.completion_lo &&
             sched.completion.hi == brute.completion_hi;
    if (!same) mismatches++;
  }
  const double elapsed = seconds_since(start);
  c.passed = compared >= 200 && mismatches == 0 && elapsed < budget_s;
  c.detail << compared << " nets compared, " << mismatches << " mismatches";
  if (elapsed >= budget_s) c.detail << ", over the " << budget_s << " s budget";
  return c;
}

// ---------------------------------------------------------------- 3

Criterion pattern_calculus_agreement() {
  Criterion c;
  testgen::Rng rng(3003);
  const ExploreLimits lim{};
  int equal_count = 0, envelope_failures = 0, mismatches = 0;
  for (int i = 0; i < 100; ++i) {
    const PatternExpr e = testgen::random_pattern(rng, 4, false);
    const auto r = check_bounds_against_oracle(e, lim);
    if (r.relation == BoundsRelation::equal)
      equal_count++;
    else
      mismatches++;
  }
  int cond_trees = 0;
  while (cond_trees < 100) {
    const PatternExpr e = testgen::random_pattern(rng, 4, true);
    const auto r = check_bounds_against_oracle(e, lim);
    if (r.relation == BoundsRelation::unknown_relation) continue;
    cond_trees++;
    if (r.relation == BoundsRelation::mismatch) mismatches++;
    if (r.statespace.hi > r.calculus.hi) envelope_failures++;
  }
  c.passed = equal_count == 100 && mismatches == 0 && envelope_failures == 0;
  c.detail << equal_count << "/100 cond-free exact, " << cond_trees
           << " mixed trees enveloped, " << mismatches << " mismatches";
  return c;
}

// ---------------------------------------------------------------- 4

using Run = std::vector<std::string>;

bool complete_runs(const Net& net, std::set<Run>& out) {
  Marking m;
  m.set(net.entry, 1);
  Marking target;
  target.set(net.exit, 1);
  Run prefix;
  bool within_caps = true;
  std::function<void(const Marking&)> walk = [&](const Marking& cur) {
    if (!within_caps) return;
    if (prefix.size() > 40 || out.size() > 200'000) {
      within_caps = false;
      return;
    }
    if (cur == target) {
      out.insert(prefix);
      return;
    }
    for (const auto& t : enabled_transitions(net, cur)) {
      prefix.push_back(t);
      walk(fire(net, cur, t));
      prefix.pop_back();
    }
  };
  walk(m);
  return within_caps;
}

Run erase_refinement(const Run& run) {
  Run mapped;
  for (const auto& id : run) {
    const auto dot = id.find('.');
    if (dot == std::string::npos) {
      mapped.push_back(id);
    } else if (id.substr(dot + 1) == "_in") {
      mapped.push_back(id.substr(0, dot));
    }  // subnet internals and exit glue are erased
  }
  return mapped;
}

Criterion flattening_correspondence() {
  Criterion c;
  testgen::Rng rng(4004);
  int checked = 0, failures = 0;
  for (int i = 0; i < 50; ++i) {
    const HierarchicalNet h = testgen::random_hierarchy(rng);
    const FlattenResult flat = flatten(h);
    if (!flat.ok()) {
      failures++;
      continue;
    }
    checked++;

    std::set<Run> abstract_runs, flat_runs;
    if (!complete_runs(h.root.net, abstract_runs) ||
        !complete_runs(*flat.net, flat_runs)) {
      failures++;
      continue;
    }
    std::set<Run> mapped;
    for (const auto& run : flat_runs) mapped.insert(erase_refinement(run));
    if (mapped != abstract_runs) failures++;

    // a binding-free hierarchy flattens to its own root
    HierarchicalNet bare = h;
    bare.root.bindings.clear();
    const FlattenResult identity = flatten(bare);
    if (!identity.ok() || !(*identity.net == bare.root.net)) failures++;
  }
  c.passed = checked == 50 && failures == 0;
  c.detail << checked << " hierarchies, " << failures << " failures";
  return c;
}

// ---------------------------------------------------------------- 5

Criterion dsl_round_trip() {
  Criterion c;
  int failures = 0;

  const std::vector<std::string> fixture_files = {
      "fixtures/healthcare.hpn", "fixtures/linear.hpn", "fixtures/empty_window.hpn"};
  for (const auto& path : fixture_files) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      failures++;
      continue;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    const auto parsed = parse_net({buf.str(), path});
    if (!parsed.ok()) {
      failures++;
      continue;
    }
    const std::string canon = serialize_net(*parsed.net);
    const auto reparsed = parse_net({canon, path});
    if (!reparsed.ok() || !(*reparsed.net == *parsed.net) ||
        serialize_net(*reparsed.net) != canon)
      failures++;
  }

  testgen::Rng rng(5005);
  for (int i = 0; i < 200; ++i) {
    const HierarchicalNet doc = testgen::random_document(rng);
    const std::string text = serialize_net(doc);
    const auto parsed = parse_net({text});
    if (!parsed.ok() || !(*parsed.net == doc) || serialize_net(*parsed.net) != text)
      failures++;
  }
  c.passed = failures == 0;
  c.detail << fixture_files.size() << " fixtures + 200 random documents, " << failures
           << " failures";
  return c;
}

// ---------------------------------------------------------------- 6

Criterion healthcare_end_to_end(double budget_s) {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();

  auto run = [&](std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return std::pair<int, std::string>(code, out.str());
  };
  auto slurp = [&](const std::string& path) -> std::string {
    std::ifstream in(path, std::ios::binary);
    if (!in) return "<missing golden: " + path + ">";
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };

  const auto analyze = run({"analyze", "fixtures/healthcare.hpn", "--json"});
  const auto schedule = run({"schedule", "fixtures/healthcare.hpn", "--json"});
  if (analyze.first != 0) {
    c.passed = false;
    c.detail << "analyze exited " << analyze.first << "; ";
  }
  if (schedule.first != 0) {
    c.passed = false;
    c.detail << "schedule exited " << schedule.first << "; ";
  }
  if (analyze.second != slurp("fixtures/golden/healthcare_analyze.json")) {
    c.passed = false;
    c.detail << "analyze deviates from its golden report; ";
  }
  if (schedule.second != slurp("fixtures/golden/healthcare_schedule.json")) {
    c.passed = false;
    c.detail << "schedule deviates from its golden report; ";
  }

  for (const auto& text : {analyze.second, schedule.second}) {
    if (text.empty()) continue;
    const Json report = Json::parse(text, nullptr, false);
    if (report.is_discarded()) {
      c.passed = false;
      c.detail << "unparseable report; ";
      continue;
    }
    for (const auto& v : report.at("verdicts"))
      if (v.at("result") != "pass") {
        c.passed = false;
        c.detail << std::string(v.at("check")) << " not pass; ";
      }
  }

  const double elapsed = seconds_since(start);
  if (elapsed >= budget_s) {
    c.passed = false;
    c.detail << "over the " << budget_s << " s budget";
  }
  if (c.passed) c.detail << "analyze + schedule match pinned reports";
  return c;
}

// ---------------------------------------------------------------- 7

Criterion worked_formula_spot_checks() {
  Criterion c;
  const ExploreLimits lim{};
  auto expect = [&](bool ok, const char* what) {
    if (!ok) {
      c.passed = false;
      c.detail << what << " failed; ";
    }
  };

  expect(teb_eval(PatternExpr::seq(PatternExpr::leaf("i", {1, 2}),
                                   PatternExpr::leaf("j", {2, 3}), {0, 1})) ==
             TimeInterval{3, 6},
         "seq formula");
  expect(teb_eval(PatternExpr::par({PatternExpr::leaf("i", {1, 4}),
                                    PatternExpr::leaf("j", {2, 3})})) ==
             TimeInterval{2, 4},
         "par formula");
  expect(teb_eval(PatternExpr::loop(PatternExpr::leaf("i", {1, 2}), 3)) ==
             TimeInterval{3, 6},
         "loop formula");

  Net net;
  net.places = {{"p0", true, false, {0, TimeInterval::kUnbounded}},
                {"p1", false, true, {0, TimeInterval::kUnbounded}}};
  net.transitions = {{"t1", "", "", {2, 5}, 1, false}};
  net.arcs = {{"p0", "t1"}, {"t1", "p1"}};
  net.entry = "p0";
  net.exit = "p1";
  net.normalize();
  const auto sched = check_schedulability(net, std::nullopt, lim);
  expect(sched.schedulable == Verdict::yes && sched.completion == TimeInterval{3, 6},
         "single-transition completion [3,6]");

  if (c.passed) c.detail << "all formulas exact";
  return c;
}

}  // namespace

int main() {
  bool all = true;
  const auto t0 = std::chrono::steady_clock::now();

  auto timed_step = [&](int index, const char* title, auto&& fn) {
    const auto s = std::chrono::steady_clock::now();
    const Criterion c = fn();
    report(index, title, c, seconds_since(s), all);
  };

  timed_step(1, "untimed verdicts match the exhaustive enumerator",
             [] { return untimed_oracle_equivalence(60.0); });
  timed_step(2, "timed verdicts and completion bounds match brute force",
             [] { return timed_saturation_soundness(120.0); });
  timed_step(3, "pattern calculus agrees with the timed state space",
             [] { return pattern_calculus_agreement(); });
  timed_step(4, "flattening preserves the abstract firing sequences",
             [] { return flattening_correspondence(); });
  timed_step(5, "DSL round-trip is structural identity and canonical",
             [] { return dsl_round_trip(); });
  timed_step(6, "bundled scenario end-to-end matches pinned reports",
             [] { return healthcare_end_to_end(5.0); });
  timed_step(7, "worked formula spot checks are exact",
             [] { return worked_formula_spot_checks(); });

  std::cout << (all ? "acceptance: all criteria passed" : "acceptance: FAILURES")
            << " (" << seconds_since(t0) << " s total)\n";
  return all ? 0 : 1;
}
