#include "hpnet/pattern.hpp"

#include <algorithm>
#include <set>

#include "hpnet/timed.hpp"

namespace hpnet {

PatternExpr PatternExpr::leaf(std::string id, TimeInterval teb) {
  PatternExpr e;
  e.kind = Kind::leaf;
  e.id = std::move(id);
  e.teb = teb;
  return e;
}

PatternExpr PatternExpr::seq(PatternExpr first, PatternExpr second, TimeInterval tec) {
  PatternExpr e;
  e.kind = Kind::seq;
  e.tec = tec;
  e.children.push_back(std::move(first));
  e.children.push_back(std::move(second));
  return e;
}

PatternExpr PatternExpr::par(std::vector<PatternExpr> branches) {
  PatternExpr e;
  e.kind = Kind::par;
  e.children = std::move(branches);
  return e;
}

PatternExpr PatternExpr::cond(PatternExpr pre, std::vector<PatternExpr> branches,
                              TimeInterval tec) {
  PatternExpr e;
  e.kind = Kind::cond;
  e.tec = tec;
  e.children.push_back(std::move(pre));
  for (auto& b : branches) e.children.push_back(std::move(b));
  return e;
}

PatternExpr PatternExpr::loop(PatternExpr body, std::int64_t k) {
  PatternExpr e;
  e.kind = Kind::loop;
  e.loop_count = k;
  e.children.push_back(std::move(body));
  return e;
}

TimeInterval teb_eval(const PatternExpr& e) {
  switch (e.kind) {
    case PatternExpr::Kind::leaf:
      return e.teb;
    case PatternExpr::Kind::seq:
      return interval_add(
          interval_add(teb_eval(e.children[0]), teb_eval(e.children[1])), e.tec);
    case PatternExpr::Kind::par: {
      TimeInterval acc{0, 0};
      for (const auto& b : e.children) acc = interval_max(acc, teb_eval(b));
      return acc;
    }
    case PatternExpr::Kind::cond: {
      // the calculus takes the componentwise max over branches, including
      // on the lower bound
      const TimeInterval pre = teb_eval(e.children[0]);
      TimeInterval acc{0, 0};
      for (std::size_t i = 1; i < e.children.size(); ++i)
        acc = interval_max(
            acc, interval_add(interval_add(pre, teb_eval(e.children[i])), e.tec));
      return acc;
    }
    case PatternExpr::Kind::loop:
      return interval_scale(teb_eval(e.children[0]), e.loop_count);
  }
  return {0, 0};
}

namespace {

struct Generator {
  Net net;
  int place_counter = 0;
  int trans_counter = 0;

  struct Frag {
    NodeId entry;
    NodeId exit;
  };

  NodeId add_place() {
    NodeId id = "q" + std::to_string(place_counter++);
    net.places.push_back({id, false, false, {0, TimeInterval::kUnbounded}});
    return id;
  }

  NodeId add_transition(const std::string& name, TimeInterval window) {
    NodeId id = "t" + std::to_string(trans_counter++);
    net.transitions.push_back({id, name, "", window, 0, false});
    return id;
  }

  void arc(const NodeId& a, const NodeId& b) { net.arcs.push_back({a, b}); }

  // Adds the connector TEC to the window of every transition that consumes
  // the fragment's entry place; this realizes "+ TEC" of the calculus under
  // the timed firing rule.
  void fold_tec(const NodeId& place, const TimeInterval& tec) {
    if (tec == TimeInterval{0, 0}) return;
    std::set<NodeId> consumers;
    for (const auto& a : net.arcs)
      if (a.source == place) consumers.insert(a.target);
    for (auto& t : net.transitions)
      if (consumers.count(t.id)) t.window = interval_add(t.window, tec);
  }

  void merge_place(const NodeId& keep, const NodeId& drop) {
    for (auto& a : net.arcs) {
      if (a.source == drop) a.source = keep;
      if (a.target == drop) a.target = keep;
    }
    std::erase_if(net.places, [&](const Place& p) { return p.id == drop; });
  }

  Frag build(const PatternExpr& e) {
    switch (e.kind) {
      case PatternExpr::Kind::leaf: {
        Frag f{add_place(), add_place()};
        NodeId t = add_transition(e.id, e.teb);
        arc(f.entry, t);
        arc(t, f.exit);
        return f;
      }
      case PatternExpr::Kind::seq: {
        Frag a = build(e.children[0]);
        Frag b = build(e.children[1]);
        fold_tec(b.entry, e.tec);
        merge_place(a.exit, b.entry);  // a.exit becomes the connector place
        return {a.entry, b.exit};
      }
      case PatternExpr::Kind::par: {
        Frag f{add_place(), add_place()};
        NodeId split = add_transition("", {0, 0});
        NodeId join = add_transition("", {0, 0});
        arc(f.entry, split);
        arc(join, f.exit);
        for (const auto& branch : e.children) {
          Frag fb = build(branch);
          arc(split, fb.entry);
          arc(fb.exit, join);
        }
        return f;
      }
      case PatternExpr::Kind::cond: {
        Frag pre = build(e.children[0]);
        NodeId out = add_place();
        for (std::size_t i = 1; i < e.children.size(); ++i) {
          Frag fb = build(e.children[i]);
          fold_tec(fb.entry, e.tec);
          merge_place(pre.exit, fb.entry);  // the choice happens at the connector
          merge_place(out, fb.exit);
        }
        return {pre.entry, out};
      }
      case PatternExpr::Kind::loop: {
        Frag whole = build(e.children[0]);
        for (std::int64_t i = 1; i < e.loop_count; ++i) {
          Frag next = build(e.children[0]);
          merge_place(whole.exit, next.entry);
          whole.exit = next.exit;
        }
        return whole;
      }
    }
    return {"", ""};
  }
};

}  // namespace

Net pattern_to_net(const PatternExpr& e) {
  Generator gen;
  Generator::Frag root = gen.build(e);
  for (auto& p : gen.net.places) {
    if (p.id == root.entry) p.is_entry = true;
    if (p.id == root.exit) p.is_exit = true;
  }
  gen.net.entry = root.entry;
  gen.net.exit = root.exit;
  gen.net.normalize();
  return gen.net;
}

std::string to_string(BoundsRelation r) {
  switch (r) {
    case BoundsRelation::equal: return "equal";
    case BoundsRelation::calculus_contains_statespace:
      return "calculus_contains_statespace";
    case BoundsRelation::mismatch: return "mismatch";
    case BoundsRelation::unknown_relation: return "unknown";
  }
  return "unknown";
}

BoundsReport check_bounds_against_oracle(const PatternExpr& e,
                                         const ExploreLimits& lim) {
  BoundsReport report;
  report.calculus = teb_eval(e);

  const Net net = pattern_to_net(e);
  const ScheduleReport sched = check_schedulability(net, std::nullopt, lim);
  if (sched.truncated || sched.schedulable == Verdict::unknown) {
    report.relation = BoundsRelation::unknown_relation;
    return report;
  }
  if (sched.schedulable != Verdict::yes) {
    report.relation = BoundsRelation::mismatch;  // patterns must always complete
    return report;
  }
  report.statespace = sched.completion;
  if (report.statespace == report.calculus)
    report.relation = BoundsRelation::equal;
  else if (report.statespace.lo <= report.calculus.lo &&
           report.statespace.hi <= report.calculus.hi)
    report.relation = BoundsRelation::calculus_contains_statespace;
  else
    report.relation = BoundsRelation::mismatch;
  return report;
}

}  // namespace hpnet
