#include "hpnet/reach.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "indexed_net.hpp"

namespace hpnet {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

using detail::IndexedNet;
using StateVec = std::vector<std::int64_t>;

struct Explored {
  IndexedNet idx;
  std::vector<StateVec> states;           // BFS discovery order
  std::vector<std::pair<int, int>> parent;  // (state index, transition index)
  std::vector<ReachGraph::Edge> edges;
  bool truncated = false;
  std::optional<int> suspect;  // first state exceeding the token bound

  explicit Explored(const Net& net) : idx(net) {}

  bool exceeds(const StateVec& s, std::int64_t bound) const {
    return std::any_of(s.begin(), s.end(), [&](std::int64_t c) { return c > bound; });
  }

  bool enabled(const StateVec& s, int t) const {
    for (int p : idx.pre[t])
      if (s[p] < 1) return false;
    return true;
  }

  StateVec successor(const StateVec& s, int t) const {
    StateVec n = s;
    for (int p : idx.pre[t]) n[p]--;
    for (int p : idx.post[t]) n[p]++;
    return n;
  }

  Trace trace_to(int state) const {
    Trace trace;
    for (int s = state; parent[s].first >= 0; s = parent[s].first)
      trace.push_back({idx.transitions[parent[s].second]->id, std::nullopt});
    std::reverse(trace.begin(), trace.end());
    return trace;
  }
};

Explored explore(const Net& net, const Marking& m0, const ExploreLimits& lim) {
  Explored ex(net);
  std::map<StateVec, int> seen;
  std::deque<int> queue;

  StateVec init = ex.idx.to_vector(m0);
  ex.states.push_back(init);
  ex.parent.emplace_back(-1, -1);
  seen[init] = 0;
  if (ex.exceeds(init, lim.max_token_bound)) {
    ex.truncated = true;
    ex.suspect = 0;
    return ex;
  }
  queue.push_back(0);

  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    const StateVec state = ex.states[cur];
    for (int t = 0; t < static_cast<int>(ex.idx.transitions.size()); ++t) {
      if (!ex.enabled(state, t)) continue;
      StateVec next = ex.successor(state, t);
      auto it = seen.find(next);
      if (it != seen.end()) {
        ex.edges.push_back({static_cast<std::size_t>(cur),
                            ex.idx.transitions[t]->id,
                            static_cast<std::size_t>(it->second)});
        continue;
      }
      if (static_cast<std::int64_t>(ex.states.size()) >= lim.max_states) {
        ex.truncated = true;
        continue;
      }
      int id = static_cast<int>(ex.states.size());
      ex.states.push_back(next);
      ex.parent.emplace_back(cur, t);
      seen[next] = id;
      ex.edges.push_back({static_cast<std::size_t>(cur), ex.idx.transitions[t]->id,
                          static_cast<std::size_t>(id)});
      if (ex.exceeds(next, lim.max_token_bound)) {
        // keep the offending marking but do not expand past it
        ex.truncated = true;
        if (!ex.suspect) ex.suspect = id;
      } else {
        queue.push_back(id);
      }
    }
  }
  return ex;
}

StateVec proper_marking(const Explored& ex) {
  StateVec m(ex.idx.places.size(), 0);
  if (ex.idx.exit_index >= 0) m[ex.idx.exit_index] = 1;
  return m;
}

bool any_enabled(const Explored& ex, const StateVec& s) {
  for (int t = 0; t < static_cast<int>(ex.idx.transitions.size()); ++t)
    if (ex.enabled(s, t)) return true;
  return false;
}

}  // namespace

ReachGraph reachability_graph(const Net& net, const Marking& m0,
                              const ExploreLimits& lim) {
  Explored ex = explore(net, m0, lim);
  ReachGraph g;
  g.initial = m0;
  g.truncated = ex.truncated;
  for (const auto& s : ex.states) g.states.push_back(ex.idx.to_marking(s));
  g.edges = ex.edges;
  if (ex.suspect) g.unbounded_suspect = ex.idx.to_marking(ex.states[*ex.suspect]);
  return g;
}

BoundednessReport check_boundedness(const Net& net, const Marking& m0,
                                    std::int64_t k, const ExploreLimits& lim) {
  Explored ex = explore(net, m0, lim);
  BoundednessReport report;
  report.k = k;
  report.truncated = ex.truncated;
  for (std::size_t i = 0; i < ex.states.size(); ++i) {
    if (ex.exceeds(ex.states[i], k)) {
      report.bounded = Verdict::no;
      report.witness = ex.idx.to_marking(ex.states[i]);
      report.witness_path = ex.trace_to(static_cast<int>(i));
      return report;
    }
  }
  report.bounded = ex.truncated ? Verdict::unknown : Verdict::yes;
  return report;
}

DeadlockReport check_deadlock_freedom(const Net& net, const Marking& m0,
                                      const ExploreLimits& lim) {
  Explored ex = explore(net, m0, lim);
  DeadlockReport report;
  report.truncated = ex.truncated;
  const StateVec target = proper_marking(ex);
  for (std::size_t i = 0; i < ex.states.size(); ++i) {
    if (ex.states[i] == target) continue;  // proper completion is not a deadlock
    if (!any_enabled(ex, ex.states[i])) {
      report.deadlock_free = Verdict::no;
      report.witness = ex.idx.to_marking(ex.states[i]);
      report.witness_path = ex.trace_to(static_cast<int>(i));
      return report;
    }
  }
  report.deadlock_free = ex.truncated ? Verdict::unknown : Verdict::yes;
  return report;
}

CompletionReport check_proper_completion(const Net& net, const ExploreLimits& lim) {
  if (net.find_place(net.entry) == nullptr || net.find_place(net.exit) == nullptr)
    throw NetError(ErrorCode::invalid_argument,
                   "proper completion requires entry and exit places");
  Marking m0;
  m0.set(net.entry, 1);

  Explored ex = explore(net, m0, lim);
  CompletionReport report;
  report.truncated = ex.truncated;
  const StateVec target = proper_marking(ex);
  const int exit_idx = ex.idx.exit_index;

  for (std::size_t i = 0; i < ex.states.size(); ++i) {
    if (ex.states[i] == target) {
      report.completion_reachable = true;
      continue;
    }
    if (exit_idx >= 0 && ex.states[i][exit_idx] >= 1 && !report.residual_witness) {
      report.residual_witness = ex.idx.to_marking(ex.states[i]);
      report.residual_path = ex.trace_to(static_cast<int>(i));
    }
  }

  if (report.residual_witness) {
    report.proper = Verdict::no;
    report.detail = "clause (b): tokens remain alongside a completion token";
  } else if (report.completion_reachable && !ex.truncated) {
    report.proper = Verdict::yes;
  } else if (ex.truncated) {
    report.proper = Verdict::unknown;
    report.detail = "exploration truncated before a verdict";
  } else {
    report.proper = Verdict::no;
    report.detail = "clause (a): the completion marking is unreachable";
  }
  return report;
}

ValidationReport check_wellformed_workflow(const Net& net) {
  std::vector<Violation> out;
  auto emit = [&](std::string code, NodeId where, std::string detail) {
    out.push_back({std::move(code), std::move(where), std::move(detail)});
  };

  const Place* entry = net.find_place(net.entry);
  const Place* exitp = net.find_place(net.exit);
  if (entry == nullptr || !entry->is_entry)
    emit("MISSING_ENTRY", net.entry, "no unique entry place");
  if (exitp == nullptr || !exitp->is_exit)
    emit("MISSING_EXIT", net.exit, "no unique exit place");
  int entries = 0, exits = 0;
  for (const auto& p : net.places) {
    entries += p.is_entry ? 1 : 0;
    exits += p.is_exit ? 1 : 0;
  }
  if (entries > 1) emit("MULTIPLE_ENTRY", "", "more than one entry place");
  if (exits > 1) emit("MULTIPLE_EXIT", "", "more than one exit place");

  if (entry && !preset(net, net.entry).empty())
    emit("EMPTY_PRESET_VIOLATION", net.entry, "entry place has incoming arcs");
  if (exitp && !postset(net, net.exit).empty())
    emit("EMPTY_POSTSET_VIOLATION", net.exit, "exit place has outgoing arcs");

  if (entry && exitp) {
    // forward closure from entry, backward closure from exit
    std::set<NodeId> fwd{net.entry}, bwd{net.exit};
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& a : net.arcs) {
        if (fwd.count(a.source) && fwd.insert(a.target).second) grew = true;
        if (bwd.count(a.target) && bwd.insert(a.source).second) grew = true;
      }
    }
    std::vector<NodeId> all;
    for (const auto& p : net.places) all.push_back(p.id);
    for (const auto& t : net.transitions) all.push_back(t.id);
    std::sort(all.begin(), all.end());
    for (const auto& id : all)
      if (!fwd.count(id) || !bwd.count(id))
        emit("NOT_ON_PATH", id, "node lies on no directed path from entry to exit");
  }

  std::sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.where, a.code) < std::tie(b.where, b.code);
  });
  return {out};
}

}  // namespace hpnet
