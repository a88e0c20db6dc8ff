#include "hpnet/timed.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "indexed_net.hpp"

namespace hpnet {

namespace {

using detail::IndexedNet;

constexpr std::int64_t kInf = TimeInterval::kUnbounded;

std::int64_t sub_cap(std::int64_t a, std::int64_t b) {
  return a == kInf ? kInf : a - b;
}

// Canonical relative state: per-place sorted token ages (saturated) and
// per-place sorted remaining production delays.
struct TState {
  std::vector<std::vector<std::int64_t>> ages;
  std::vector<std::vector<std::int64_t>> pending;

  auto operator<=>(const TState&) const = default;
};

struct Engine {
  const Net& net;
  IndexedNet idx;
  std::int64_t clamp = 1;
  std::vector<std::int64_t> pl, pu;      // place window bounds
  std::vector<std::int64_t> tl, tu, td;  // transition window bounds + duration

  std::vector<TState> states;
  std::vector<char> expanded;
  std::vector<TimedGraph::Edge> edges;
  std::vector<int> parent_edge;  // edge index that discovered the state, -1 for init
  std::vector<std::size_t> accepting;
  bool truncated = false;

  explicit Engine(const Net& n) : net(n), idx(n) {
    const std::size_t np = idx.places.size(), nt = idx.transitions.size();
    pl.resize(np);
    pu.resize(np);
    for (std::size_t p = 0; p < np; ++p) {
      pl[p] = idx.places[p]->window.lo;
      pu[p] = idx.places[p]->window.hi;
    }
    tl.resize(nt);
    tu.resize(nt);
    td.resize(nt);
    for (std::size_t t = 0; t < nt; ++t) {
      tl[t] = idx.transitions[t]->window.lo;
      tu[t] = idx.transitions[t]->window.hi;
      td[t] = idx.transitions[t]->duration;
    }
    // Absorption bound for token ages: beyond it, every window comparison has
    // a fixed outcome, so older states are behaviorally identical.
    std::int64_t max_pl = 0, max_pu = 0, max_tl = 0, max_tu = 0;
    for (std::size_t p = 0; p < np; ++p) {
      max_pl = std::max(max_pl, pl[p]);
      if (pu[p] != kInf) max_pu = std::max(max_pu, pu[p]);
    }
    for (std::size_t t = 0; t < nt; ++t) {
      max_tl = std::max(max_tl, tl[t]);
      if (tu[t] != kInf) max_tu = std::max(max_tu, tu[t]);
    }
    clamp = 1 + std::max({std::int64_t{0}, max_pu, max_pl + max_tu, max_pl + max_tl});
  }

  // --- per-combination window arithmetic -------------------------------

  struct Combo {
    std::vector<std::int64_t> age;  // chosen token age per input place
    std::int64_t readiness_gap = 0;  // min_i(age_i - pl_i)
    std::int64_t alive_budget = kInf;  // min_i(pu_i - age_i), < 0 if expired
    std::int64_t min_age = 0;
  };

  // All combinations of distinct token ages, oldest (most constraining)
  // first per place. Empty result means the transition is not enabled.
  std::vector<Combo> combos(const TState& s, int t) const {
    const auto& inputs = idx.pre[t];
    for (int p : inputs)
      if (s.ages[p].empty()) return {};
    std::vector<std::vector<std::int64_t>> options(inputs.size());
    for (std::size_t k = 0; k < inputs.size(); ++k) {
      const auto& ages = s.ages[inputs[k]];
      for (auto it = ages.rbegin(); it != ages.rend(); ++it)
        if (options[k].empty() || options[k].back() != *it) options[k].push_back(*it);
    }
    std::vector<Combo> result;
    std::vector<std::size_t> pick(inputs.size(), 0);
    while (true) {
      Combo c;
      c.readiness_gap = kInf;
      c.min_age = kInf;
      for (std::size_t k = 0; k < inputs.size(); ++k) {
        const std::int64_t age = options[k][pick[k]];
        c.age.push_back(age);
        c.readiness_gap = std::min(c.readiness_gap, age - pl[inputs[k]]);
        if (pu[inputs[k]] != kInf)
          c.alive_budget = std::min(c.alive_budget, pu[inputs[k]] - age);
        c.min_age = std::min(c.min_age, age);
      }
      if (inputs.empty()) {
        c.readiness_gap = 0;
        c.min_age = 0;
      }
      result.push_back(std::move(c));
      std::size_t k = 0;
      for (; k < inputs.size(); ++k) {
        if (++pick[k] < options[k].size()) break;
        pick[k] = 0;
      }
      if (k == inputs.size()) break;
      if (inputs.empty()) break;
    }
    return result;
  }

  // Offsets d (relative to the state's instant) at which the combo may fire:
  //   max(tl - gap, dmin) <= d <= min(tu - gap, alive_budget, dmax)
  // kInf is the maximum int64, so plain min handles unbounded values.
  bool feasible(const Combo& c, int t, std::int64_t dmin, std::int64_t dmax) const {
    const std::int64_t lo = std::max(tl[t] - c.readiness_gap, dmin);
    const std::int64_t hi =
        std::min({sub_cap(tu[t], c.readiness_gap), c.alive_budget, dmax});
    return lo <= hi;
  }

  bool fireable_now(const Combo& c, int t) const { return feasible(c, t, 0, 0); }
  bool fireable_future(const Combo& c, int t) const { return feasible(c, t, 1, kInf); }
  bool fireable_ever(const Combo& c, int t) const {
    return feasible(c, t, -c.min_age, kInf);
  }

  // --- successor construction ------------------------------------------

  TState fire(const TState& s, int t, const Combo& c) const {
    TState n = s;
    const auto& inputs = idx.pre[t];
    for (std::size_t k = 0; k < inputs.size(); ++k) {
      auto& ages = n.ages[inputs[k]];
      ages.erase(std::find(ages.begin(), ages.end(), c.age[k]));
    }
    for (int p : idx.post[t]) {
      if (td[t] == 0) {
        n.ages[p].insert(std::upper_bound(n.ages[p].begin(), n.ages[p].end(),
                                          std::int64_t{0}),
                         0);
      } else {
        n.pending[p].insert(
            std::upper_bound(n.pending[p].begin(), n.pending[p].end(), td[t]), td[t]);
      }
    }
    return n;
  }

  TState tick(const TState& s) const {
    TState n = s;
    for (auto& ages : n.ages)
      for (auto& a : ages) a = std::min(a + 1, clamp);
    for (std::size_t p = 0; p < n.pending.size(); ++p) {
      std::vector<std::int64_t> still;
      for (std::int64_t r : n.pending[p]) {
        if (r - 1 == 0)
          n.ages[p].insert(n.ages[p].begin(), 0);
        else
          still.push_back(r - 1);
      }
      n.pending[p] = std::move(still);
    }
    return n;
  }

  bool has_pending(const TState& s) const {
    for (const auto& v : s.pending)
      if (!v.empty()) return true;
    return false;
  }

  bool tick_allowed(const TState& s) const {
    if (has_pending(s)) return true;
    for (std::size_t t = 0; t < idx.transitions.size(); ++t)
      for (const auto& c : combos(s, static_cast<int>(t)))
        if (fireable_future(c, static_cast<int>(t))) return true;
    return false;
  }

  bool is_accepting(const TState& s) const {
    if (idx.exit_index < 0) return false;
    if (has_pending(s)) return false;
    for (std::size_t p = 0; p < s.ages.size(); ++p) {
      if (static_cast<int>(p) == idx.exit_index) {
        if (s.ages[p].size() != 1) return false;
      } else if (!s.ages[p].empty()) {
        return false;
      }
    }
    return true;
  }

  bool over_token_bound(const TState& s, std::int64_t bound) const {
    for (std::size_t p = 0; p < s.ages.size(); ++p)
      if (static_cast<std::int64_t>(s.ages[p].size() + s.pending[p].size()) > bound)
        return true;
    return false;
  }

  // --- exploration -------------------------------------------------------

  void explore(const ExploreLimits& lim) {
    TState init;
    init.ages.resize(idx.places.size());
    init.pending.resize(idx.places.size());
    if (idx.entry_index >= 0) init.ages[idx.entry_index].push_back(0);

    std::map<TState, int> seen;
    std::deque<int> queue;
    states.push_back(init);
    expanded.push_back(false);
    parent_edge.push_back(-1);
    seen[init] = 0;
    if (is_accepting(init)) accepting.push_back(0);
    if (over_token_bound(init, lim.max_token_bound)) {
      truncated = true;
      return;
    }
    queue.push_back(0);

    auto add_edge = [&](int from, std::optional<NodeId> label, const TState& next) {
      auto it = seen.find(next);
      int to;
      if (it != seen.end()) {
        to = it->second;
      } else {
        if (static_cast<std::int64_t>(states.size()) >= lim.max_states) {
          truncated = true;
          return;
        }
        to = static_cast<int>(states.size());
        states.push_back(next);
        expanded.push_back(false);
        parent_edge.push_back(static_cast<int>(edges.size()));
        seen[next] = to;
        if (is_accepting(next)) accepting.push_back(to);
        if (over_token_bound(next, lim.max_token_bound))
          truncated = true;  // recorded but not scheduled for expansion
        else
          queue.push_back(to);
      }
      edges.push_back({static_cast<std::size_t>(from), std::move(label),
                       static_cast<std::size_t>(to)});
    };

    while (!queue.empty()) {
      const int cur = queue.front();
      queue.pop_front();
      expanded[cur] = true;
      const TState state = states[cur];

      std::set<std::pair<int, TState>> fired;  // dedup identical successors per t
      for (std::size_t t = 0; t < idx.transitions.size(); ++t) {
        for (const auto& c : combos(state, static_cast<int>(t))) {
          if (!fireable_now(c, static_cast<int>(t))) continue;
          TState next = fire(state, static_cast<int>(t), c);
          if (fired.emplace(static_cast<int>(t), next).second)
            add_edge(cur, idx.transitions[t]->id, next);
        }
      }
      if (tick_allowed(state)) add_edge(cur, std::nullopt, tick(state));
    }
  }

  // Path from the initial state to `target` along discovery edges.
  Trace trace_to(int target) const {
    std::vector<int> path_edges;
    int s = target;
    while (parent_edge[s] >= 0) {
      path_edges.push_back(parent_edge[s]);
      s = static_cast<int>(edges[parent_edge[s]].from);
    }
    std::reverse(path_edges.begin(), path_edges.end());
    return edges_to_trace(path_edges);
  }

  Trace edges_to_trace(const std::vector<int>& path_edges) const {
    Trace trace;
    std::int64_t now = 0;
    for (int e : path_edges) {
      if (edges[e].transition)
        trace.push_back({*edges[e].transition, now});
      else
        now++;
    }
    return trace;
  }

  // --- violations --------------------------------------------------------

  std::vector<TimedViolation> dead_end_violations() const {
    std::vector<TimedViolation> out;
    std::vector<char> has_out(states.size(), false);
    for (const auto& e : edges) has_out[e.from] = true;
    std::set<std::pair<std::string, NodeId>> reported;
    for (std::size_t s = 0; s < states.size(); ++s) {
      if (!expanded[s] || has_out[s]) continue;
      if (is_accepting(states[s])) continue;
      for (std::size_t t = 0; t < idx.transitions.size(); ++t) {
        auto cs = combos(states[s], static_cast<int>(t));
        if (cs.empty()) continue;  // not enabled
        bool ever = false;
        for (const auto& c : cs)
          if (fireable_ever(c, static_cast<int>(t))) ever = true;
        const std::string code = ever ? "WINDOW_PASSED" : "EMPTY_WINDOW";
        if (!reported.emplace(code, idx.transitions[t]->id).second) continue;
        TimedViolation v;
        v.code = code;
        v.transition = idx.transitions[t]->id;
        v.witness = trace_to(static_cast<int>(s));
        v.detail = ever ? "the firing window passed while the transition stayed enabled"
                        : "the firing window is empty under the place windows";
        out.push_back(std::move(v));
      }
    }
    return out;
  }

  // Transitions enabled somewhere with a window that never opened at all.
  std::vector<TimedViolation> structural_empty_windows() const {
    std::vector<TimedViolation> out;
    std::set<NodeId> reported;
    for (std::size_t s = 0; s < states.size(); ++s) {
      if (!expanded[s]) continue;
      for (std::size_t t = 0; t < idx.transitions.size(); ++t) {
        if (reported.count(idx.transitions[t]->id)) continue;
        auto cs = combos(states[s], static_cast<int>(t));
        if (cs.empty()) continue;
        bool ever = false;
        for (const auto& c : cs)
          if (fireable_ever(c, static_cast<int>(t))) ever = true;
        if (ever) continue;
        reported.insert(idx.transitions[t]->id);
        TimedViolation v;
        v.code = "EMPTY_WINDOW";
        v.transition = idx.transitions[t]->id;
        v.witness = trace_to(static_cast<int>(s));
        v.detail = "transition is enabled but its firing window is empty";
        out.push_back(std::move(v));
      }
    }
    return out;
  }

  // --- completion bounds ---------------------------------------------------

  struct CompletionBounds {
    bool reachable = false;
    std::int64_t lo = 0;
    std::int64_t hi = 0;  // kInf when delays can grow forever
    Trace lo_trace;
    Trace hi_trace;
  };

  CompletionBounds completion_bounds() const {
    CompletionBounds result;
    if (accepting.empty()) return result;
    result.reachable = true;

    const std::size_t n = states.size();
    std::vector<std::vector<int>> out_edges(n);
    for (std::size_t e = 0; e < edges.size(); ++e)
      out_edges[edges[e].from].push_back(static_cast<int>(e));

    // 0-1 BFS for the earliest completion
    std::vector<std::int64_t> dist(n, kInf);
    std::vector<int> pred(n, -1);
    std::deque<int> dq{0};
    dist[0] = 0;
    while (!dq.empty()) {
      int u = dq.front();
      dq.pop_front();
      for (int e : out_edges[u]) {
        const int v = static_cast<int>(edges[e].to);
        const std::int64_t w = edges[e].transition ? 0 : 1;
        if (dist[u] + w < dist[v]) {
          dist[v] = dist[u] + w;
          pred[v] = e;
          if (w == 0)
            dq.push_front(v);
          else
            dq.push_back(v);
        }
      }
    }
    std::size_t best = accepting.front();
    for (std::size_t a : accepting)
      if (dist[a] < dist[best]) best = a;
    result.lo = dist[best];
    {
      std::vector<int> path;
      for (int s = static_cast<int>(best); pred[s] >= 0; s = static_cast<int>(edges[pred[s]].from))
        path.push_back(pred[s]);
      std::reverse(path.begin(), path.end());
      result.lo_trace = edges_to_trace(path);
    }

    // Longest completion over the subgraph that can still reach acceptance.
    std::vector<char> coreach(n, false);
    {
      std::vector<std::vector<int>> in_edges(n);
      for (std::size_t e = 0; e < edges.size(); ++e)
        in_edges[edges[e].to].push_back(static_cast<int>(e));
      std::deque<int> q;
      for (std::size_t a : accepting) {
        coreach[a] = true;
        q.push_back(static_cast<int>(a));
      }
      while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int e : in_edges[u]) {
          int v = static_cast<int>(edges[e].from);
          if (!coreach[v]) {
            coreach[v] = true;
            q.push_back(v);
          }
        }
      }
    }

    // Kosaraju SCC on the co-reachable subgraph.
    std::vector<int> order;
    {
      std::vector<char> seen(n, false);
      for (std::size_t s0 = 0; s0 < n; ++s0) {
        if (!coreach[s0] || seen[s0]) continue;
        std::vector<std::pair<int, std::size_t>> stack{{static_cast<int>(s0), 0}};
        seen[s0] = true;
        while (!stack.empty()) {
          auto& [u, i] = stack.back();
          if (i < out_edges[u].size()) {
            const int e = out_edges[u][i++];
            const int v = static_cast<int>(edges[e].to);
            if (coreach[v] && !seen[v]) {
              seen[v] = true;
              stack.push_back({v, 0});
            }
          } else {
            order.push_back(u);
            stack.pop_back();
          }
        }
      }
    }
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    {
      std::vector<std::vector<int>> rev(n);
      for (const auto& e : edges)
        if (coreach[e.from] && coreach[e.to])
          rev[e.to].push_back(static_cast<int>(e.from));
      for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (comp[*it] >= 0) continue;
        std::deque<int> q{*it};
        comp[*it] = ncomp;
        while (!q.empty()) {
          int u = q.front();
          q.pop_front();
          for (int v : rev[u])
            if (comp[v] < 0) {
              comp[v] = ncomp;
              q.push_back(v);
            }
        }
        ncomp++;
      }
    }

    // A cycle containing a time step means acceptance can be postponed
    // forever.
    for (const auto& e : edges) {
      if (!coreach[e.from] || !coreach[e.to]) continue;
      if (comp[e.from] == comp[e.to] && !e.transition) {
        result.hi = kInf;
        return result;
      }
    }

    // Condensation longest path; Kosaraju discovers components in
    // topological order (sources first), so process them in index order.
    std::vector<std::vector<int>> comp_edges(ncomp);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (!coreach[edges[e].from] || !coreach[edges[e].to]) continue;
      if (comp[edges[e].from] != comp[edges[e].to])
        comp_edges[comp[edges[e].from]].push_back(static_cast<int>(e));
    }
    std::vector<std::int64_t> comp_dist(ncomp, -1);
    std::vector<int> comp_pred(ncomp, -1);  // edge index entering the component
    if (coreach[0]) comp_dist[comp[0]] = 0;
    for (int c = 0; c < ncomp; ++c) {
      if (comp_dist[c] < 0) continue;
      for (int ei : comp_edges[c]) {
        const auto& e = edges[ei];
        const std::int64_t w = e.transition ? 0 : 1;
        if (comp_dist[c] + w > comp_dist[comp[e.to]]) {
          comp_dist[comp[e.to]] = comp_dist[c] + w;
          comp_pred[comp[e.to]] = ei;
        }
      }
    }
    std::size_t slowest = accepting.front();
    for (std::size_t a : accepting)
      if (comp_dist[comp[a]] > comp_dist[comp[slowest]]) slowest = a;
    result.hi = comp_dist[comp[slowest]];

    // Reconstruct: component chain, then zero-weight paths inside components.
    std::vector<int> chain;  // connecting edges, reversed
    int c = comp[slowest];
    while (comp_pred[c] >= 0) {
      chain.push_back(comp_pred[c]);
      c = comp[edges[comp_pred[c]].from];
    }
    std::reverse(chain.begin(), chain.end());

    auto intra_path = [&](int from, int to) {
      std::vector<int> path;
      if (from == to) return path;
      std::vector<int> how(n, -1);
      std::deque<int> q{from};
      while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        if (u == to) break;
        for (int e : out_edges[u]) {
          int v = static_cast<int>(edges[e].to);
          if (coreach[v] && comp[v] == comp[from] && how[v] < 0 && v != from) {
            how[v] = e;
            q.push_back(v);
          }
        }
      }
      for (int s = to; s != from;) {
        path.push_back(how[s]);
        s = static_cast<int>(edges[how[s]].from);
      }
      std::reverse(path.begin(), path.end());
      return path;
    };

    std::vector<int> full;
    int at = 0;
    for (int e : chain) {
      for (int pe : intra_path(at, static_cast<int>(edges[e].from))) full.push_back(pe);
      full.push_back(e);
      at = static_cast<int>(edges[e].to);
    }
    for (int pe : intra_path(at, static_cast<int>(slowest))) full.push_back(pe);
    result.hi_trace = edges_to_trace(full);
    return result;
  }

  TimedGraph to_public() const {
    TimedGraph g;
    g.truncated = truncated;
    g.age_clamp = clamp;
    g.accepting = accepting;
    for (const auto& s : states) {
      TimedGraph::State out;
      for (std::size_t p = 0; p < s.ages.size(); ++p) {
        if (!s.ages[p].empty())
          out.marking.set(idx.places[p]->id, static_cast<std::int64_t>(s.ages[p].size()));
        for (std::int64_t a : s.ages[p]) out.token_ages.emplace_back(idx.places[p]->id, a);
        for (std::int64_t r : s.pending[p]) out.pending.emplace_back(idx.places[p]->id, r);
      }
      g.states.push_back(std::move(out));
    }
    g.edges = edges;
    return g;
  }
};

}  // namespace

std::vector<TimedFiring> timed_successors(const Net& net, const TimedState& s,
                                          std::int64_t horizon_cap) {
  std::vector<TimedFiring> out;
  for (const auto& trans : net.transitions) {
    const auto inputs = preset(net, trans.id);
    // one token choice per input place; enumerate combinations of distinct
    // arrival times, most constraining (earliest expiry) first
    std::vector<std::vector<std::int64_t>> options;
    bool enabled = true;
    for (const auto& p : inputs) {
      std::set<std::int64_t> arrivals;
      for (const auto& tok : s.tokens)
        if (tok.place == p) arrivals.insert(tok.arrived);
      if (arrivals.empty()) {
        enabled = false;
        break;
      }
      options.emplace_back(arrivals.begin(), arrivals.end());
    }
    if (!enabled) continue;

    std::vector<std::size_t> pick(inputs.size(), 0);
    while (true) {
      std::int64_t readiness = 0, expiry = kInf;
      for (std::size_t k = 0; k < inputs.size(); ++k) {
        const Place* p = net.find_place(inputs[k]);
        const std::int64_t arrived = options[k][pick[k]];
        readiness = std::max(readiness, sat_add(arrived, p->window.lo));
        expiry = std::min(expiry, sat_add(arrived, p->window.hi));
      }
      const std::int64_t lower =
          std::max(sat_add(readiness, trans.window.lo), s.now);
      const std::int64_t upper =
          std::min(sat_add(readiness, trans.window.hi), expiry);
      std::int64_t last = upper;
      if (upper == kInf) last = sat_add(lower, horizon_cap);
      for (std::int64_t tau = lower; tau <= last && tau != kInf; ++tau) {
        TimedState next;
        next.now = std::max(s.now, tau + trans.duration);
        next.tokens = s.tokens;
        for (std::size_t k = 0; k < inputs.size(); ++k) {
          auto it = std::find(next.tokens.begin(), next.tokens.end(),
                              TimedToken{inputs[k], options[k][pick[k]]});
          next.tokens.erase(it);
        }
        for (const auto& p : postset(net, trans.id))
          next.tokens.push_back({p, tau + trans.duration});
        std::sort(next.tokens.begin(), next.tokens.end(),
                  [](const TimedToken& a, const TimedToken& b) {
                    return std::tie(a.place, a.arrived) < std::tie(b.place, b.arrived);
                  });
        out.push_back({trans.id, tau, std::move(next)});
      }
      std::size_t k = 0;
      for (; k < inputs.size(); ++k) {
        if (++pick[k] < options[k].size()) break;
        pick[k] = 0;
      }
      if (k == inputs.size()) break;
    }
  }
  return out;
}

TimedGraph timed_state_graph(const Net& net, const ExploreLimits& lim) {
  Engine engine(net);
  engine.explore(lim);
  return engine.to_public();
}

ScheduleReport check_schedulability(const Net& net,
                                    std::optional<std::int64_t> deadline,
                                    const ExploreLimits& lim) {
  Engine engine(net);
  engine.explore(lim);

  ScheduleReport report;
  report.deadline = deadline;
  report.truncated = engine.truncated;
  report.violations = engine.dead_end_violations();

  auto bounds = engine.completion_bounds();
  if (!bounds.reachable) {
    report.schedulable = engine.truncated ? Verdict::unknown : Verdict::no;
    return report;
  }
  report.completion = {bounds.lo, bounds.hi};
  report.fastest = bounds.lo_trace;
  report.slowest = bounds.hi_trace;
  if (deadline && bounds.lo > *deadline)
    report.schedulable = engine.truncated ? Verdict::unknown : Verdict::no;
  else
    report.schedulable = Verdict::yes;
  return report;
}

std::vector<TimedViolation> check_time_consistency(const Net& net,
                                                   const ExploreLimits& lim) {
  Engine engine(net);
  engine.explore(lim);

  // Structural issues only: windows that can never open. Run-level timing
  // dead ends (WINDOW_PASSED) belong to the schedulability report.
  std::vector<TimedViolation> out = engine.structural_empty_windows();

  // A firing duration longer than an output place's consumability span
  // leaves the produced token no room to be consumed in the paper's
  // start-relative reading; flagged for every transition that actually
  // fires in the graph.
  std::set<NodeId> fired;
  for (const auto& e : engine.edges)
    if (e.transition) fired.insert(*e.transition);
  for (const auto& t : net.transitions) {
    if (!fired.count(t.id) || t.duration == 0) continue;
    for (const auto& p : postset(net, t.id)) {
      const Place* place = net.find_place(p);
      if (place->window.bounded() && t.duration > place->window.hi) {
        TimedViolation v;
        v.code = "DURATION_OVERSHOOT";
        v.transition = t.id;
        v.place = p;
        v.detail = "duration " + std::to_string(t.duration) +
                   " overshoots the consumability bound " +
                   place->window.to_string() + " of place " + p;
        out.push_back(std::move(v));
      }
    }
  }
  return out;
}

}  // namespace hpnet
