#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace oracle {

namespace {

using hpnet::Net;
using hpnet::NodeId;
using hpnet::TimeInterval;
using hpnet::Verdict;

constexpr std::int64_t kInf = TimeInterval::kUnbounded;

using M = std::map<NodeId, std::int64_t>;

struct Adj {
  std::vector<NodeId> trans;                 // sorted ids
  std::map<NodeId, std::set<NodeId>> in;     // transition -> input places
  std::map<NodeId, std::set<NodeId>> out;    // transition -> output places
};

Adj scan(const Net& net) {
  Adj adj;
  for (const auto& t : net.transitions) {
    adj.trans.push_back(t.id);
    adj.in[t.id];
    adj.out[t.id];
  }
  std::sort(adj.trans.begin(), adj.trans.end());
  for (const auto& a : net.arcs) {
    if (adj.in.count(a.target)) adj.in[a.target].insert(a.source);
    if (adj.out.count(a.source)) adj.out[a.source].insert(a.target);
  }
  return adj;
}

std::int64_t count_of(const M& m, const NodeId& p) {
  auto it = m.find(p);
  return it == m.end() ? 0 : it->second;
}

bool enabled(const Adj& adj, const M& m, const NodeId& t) {
  for (const auto& p : adj.in.at(t))
    if (count_of(m, p) < 1) return false;
  return true;
}

M fire(const Adj& adj, const M& m, const NodeId& t) {
  M next = m;
  for (const auto& p : adj.in.at(t)) {
    if (--next[p] == 0) next.erase(p);
  }
  for (const auto& p : adj.out.at(t)) next[p]++;
  return next;
}

bool enabled_any(const Adj& adj, const M& m) {
  for (const auto& t : adj.trans)
    if (enabled(adj, m, t)) return true;
  return false;
}

struct Space {
  std::map<M, std::size_t> depth;
  bool truncated = false;
};

Space crawl(const Adj& adj, const M& init, std::int64_t token_cap,
            std::int64_t state_cap) {
  Space space;
  auto over_cap = [&](const M& m) {
    for (const auto& [_, c] : m)
      if (c > token_cap) return true;
    return false;
  };
  std::deque<M> queue;
  space.depth[init] = 0;
  if (over_cap(init)) {
    space.truncated = true;
    return space;
  }
  queue.push_back(init);
  while (!queue.empty()) {
    M cur = queue.front();
    queue.pop_front();
    const std::size_t d = space.depth[cur];
    for (const auto& t : adj.trans) {
      if (!enabled(adj, cur, t)) continue;
      M next = fire(adj, cur, t);
      if (space.depth.count(next)) continue;
      if (static_cast<std::int64_t>(space.depth.size()) >= state_cap) {
        space.truncated = true;
        continue;
      }
      space.depth[next] = d + 1;
      if (over_cap(next))
        space.truncated = true;
      else
        queue.push_back(next);
    }
  }
  return space;
}

}  // namespace

UntimedVerdicts enumerate_untimed(const Net& net, const hpnet::Marking& m0,
                                  std::int64_t k, std::int64_t token_cap,
                                  std::int64_t state_cap) {
  const Adj adj = scan(net);
  UntimedVerdicts out;

  M init(m0.tokens.begin(), m0.tokens.end());
  const Space space = crawl(adj, init, token_cap, state_cap);
  out.truncated = space.truncated;
  out.marking_count = space.depth.size();

  M proper;
  proper[net.exit] = 1;

  bool over_k = false;
  for (const auto& [m, d] : space.depth) {
    for (const auto& [_, c] : m)
      if (c > k) over_k = true;
    if (!enabled_any(adj, m) && m != proper) {
      if (!out.min_deadlock_depth || d < *out.min_deadlock_depth)
        out.min_deadlock_depth = d;
    }
  }
  out.bounded = over_k ? Verdict::no
                       : (space.truncated ? Verdict::unknown : Verdict::yes);
  out.deadlock_free = out.min_deadlock_depth
                          ? Verdict::no
                          : (space.truncated ? Verdict::unknown : Verdict::yes);

  // proper completion always starts from {entry: 1}
  M from_entry;
  from_entry[net.entry] = 1;
  const Space cspace = crawl(adj, from_entry, token_cap, state_cap);
  bool reached = false, residual = false;
  for (const auto& [m, _] : cspace.depth) {
    if (m == proper) reached = true;
    else if (count_of(m, net.exit) >= 1) residual = true;
  }
  if (residual)
    out.proper = Verdict::no;
  else if (reached && !cspace.truncated)
    out.proper = Verdict::yes;
  else
    out.proper = cspace.truncated ? Verdict::unknown : Verdict::no;
  return out;
}

// ------------------------------------------------------------------ timed

namespace {

struct TimedConsts {
  std::map<NodeId, std::int64_t> pl, pu;
  std::map<NodeId, std::int64_t> tl, tu, td;
};

TimedConsts consts_of(const Net& net) {
  TimedConsts c;
  for (const auto& p : net.places) {
    c.pl[p.id] = p.window.lo;
    c.pu[p.id] = p.window.hi;
  }
  for (const auto& t : net.transitions) {
    c.tl[t.id] = t.window.lo;
    c.tu[t.id] = t.window.hi;
    c.td[t.id] = t.duration;
  }
  return c;
}

struct TS {
  std::int64_t now = 0;
  std::map<NodeId, std::multiset<std::int64_t>> placed;    // arrival times <= now
  std::map<NodeId, std::multiset<std::int64_t>> incoming;  // arrival times > now

  bool operator<(const TS& o) const {
    return std::tie(now, placed, incoming) < std::tie(o.now, o.placed, o.incoming);
  }
};

struct ComboScan {
  // Enumerates one arrival choice per input place of a transition.
  std::vector<NodeId> places;
  std::vector<std::vector<std::int64_t>> options;
  std::vector<std::size_t> pick;
  bool exhausted = false;

  ComboScan(const Adj& adj, const TS& s, const NodeId& t) {
    for (const auto& p : adj.in.at(t)) {
      places.push_back(p);
      auto it = s.placed.find(p);
      std::vector<std::int64_t> arrivals;
      if (it != s.placed.end())
        for (std::int64_t a : std::set<std::int64_t>(it->second.begin(), it->second.end()))
          arrivals.push_back(a);
      if (arrivals.empty()) {
        exhausted = true;
        return;
      }
      options.push_back(std::move(arrivals));
    }
    pick.assign(places.size(), 0);
  }

  bool next() {
    if (exhausted) return false;
    for (std::size_t k = 0; k < pick.size(); ++k) {
      if (++pick[k] < options[k].size()) return true;
      pick[k] = 0;
    }
    exhausted = true;
    return false;
  }

  std::int64_t arrival(std::size_t k) const { return options[k][pick[k]]; }
};

struct Window {
  std::int64_t lower = 0;
  std::int64_t upper = -1;  // empty by default
};

Window window_of(const TimedConsts& c, const ComboScan& combo, const NodeId& t) {
  std::int64_t readiness = 0, expiry = kInf;
  for (std::size_t k = 0; k < combo.places.size(); ++k) {
    const NodeId& p = combo.places[k];
    readiness = std::max(readiness, combo.arrival(k) + c.pl.at(p));
    if (c.pu.at(p) != kInf) expiry = std::min(expiry, combo.arrival(k) + c.pu.at(p));
  }
  Window w;
  w.lower = readiness + c.tl.at(t);
  w.upper = c.tu.at(t) == kInf ? expiry
                               : std::min(readiness + c.tu.at(t), expiry);
  return w;
}

}  // namespace

TimedOracleResult enumerate_timed(const Net& net, std::int64_t token_cap,
                                  std::int64_t state_cap) {
  const Adj adj = scan(net);
  const TimedConsts c = consts_of(net);

  std::int64_t horizon = 8;
  for (const auto& t : net.transitions) {
    horizon += c.tl.at(t.id) + c.td.at(t.id);
    if (c.tu.at(t.id) != kInf) horizon += c.tu.at(t.id);
  }
  for (const auto& p : net.places) {
    horizon += c.pl.at(p.id);
    if (c.pu.at(p.id) != kInf) horizon += c.pu.at(p.id);
  }

  TimedOracleResult result;
  std::set<TS> seen;
  std::deque<TS> queue;
  std::set<std::int64_t> completions;

  TS init;
  init.placed[net.entry].insert(0);
  seen.insert(init);
  queue.push_back(init);

  M proper;
  proper[net.exit] = 1;

  auto over_cap = [&](const TS& s) {
    std::map<NodeId, std::int64_t> total;
    for (const auto& [p, arr] : s.placed) total[p] += arr.size();
    for (const auto& [p, arr] : s.incoming) total[p] += arr.size();
    for (const auto& [_, n] : total)
      if (n > token_cap) return true;
    return false;
  };
  auto accepting = [&](const TS& s) {
    if (!s.incoming.empty()) return false;
    if (s.placed.size() != 1) return false;
    const auto& [p, arrivals] = *s.placed.begin();
    return p == net.exit && arrivals.size() == 1;
  };
  auto push = [&](TS next) {
    if (seen.count(next)) return;
    if (static_cast<std::int64_t>(seen.size()) >= state_cap) {
      result.truncated = true;
      return;
    }
    if (accepting(next)) completions.insert(*next.placed.begin()->second.begin());
    if (over_cap(next)) {
      result.truncated = true;
      seen.insert(std::move(next));
      return;
    }
    seen.insert(next);
    queue.push_back(std::move(next));
  };

  while (!queue.empty()) {
    TS cur = queue.front();
    queue.pop_front();

    bool future_event = false;
    for (const auto& [p, arrivals] : cur.incoming)
      if (!arrivals.empty()) future_event = true;

    for (const auto& t : adj.trans) {
      ComboScan combo(adj, cur, t);
      if (combo.exhausted && !adj.in.at(t).empty()) continue;
      do {
        const Window w = window_of(c, combo, t);
        if (w.lower <= w.upper && w.upper >= cur.now + 1) future_event = true;
        if (w.lower <= cur.now && cur.now <= w.upper) {
          TS next = cur;
          for (std::size_t k = 0; k < combo.places.size(); ++k)
            next.placed[combo.places[k]].erase(
                next.placed[combo.places[k]].find(combo.arrival(k)));
          std::erase_if(next.placed, [](const auto& kv) { return kv.second.empty(); });
          for (const auto& p : adj.out.at(t)) {
            if (c.td.at(t) == 0)
              next.placed[p].insert(cur.now);
            else
              next.incoming[p].insert(cur.now + c.td.at(t));
          }
          push(std::move(next));
        }
      } while (combo.next());
    }

    if (future_event) {
      if (cur.now >= horizon) {
        result.truncated = true;
      } else {
        TS next = cur;
        next.now++;
        for (auto& [p, arrivals] : next.incoming) {
          while (!arrivals.empty() && *arrivals.begin() <= next.now) {
            next.placed[p].insert(*arrivals.begin());
            arrivals.erase(arrivals.begin());
          }
        }
        std::erase_if(next.incoming, [](const auto& kv) { return kv.second.empty(); });
        push(std::move(next));
      }
    }
  }

  if (!completions.empty()) {
    result.schedulable = Verdict::yes;
    result.completion_lo = *completions.begin();
    result.completion_hi = *completions.rbegin();
  } else {
    result.schedulable = result.truncated ? Verdict::unknown : Verdict::no;
  }
  return result;
}

std::optional<std::int64_t> replay_timed(const Net& net, const hpnet::Trace& trace) {
  const Adj adj = scan(net);
  const TimedConsts c = consts_of(net);

  // tokens as (place, arrival) multiset; consumed tokens chosen by
  // backtracking over arrival choices
  using Tokens = std::map<NodeId, std::multiset<std::int64_t>>;
  Tokens init;
  init[net.entry].insert(0);

  std::function<std::optional<std::int64_t>(const Tokens&, std::size_t)> step =
      [&](const Tokens& tokens, std::size_t i) -> std::optional<std::int64_t> {
    if (i == trace.size()) {
      // all productions land eventually; proper completion wanted
      if (tokens.size() != 1) return std::nullopt;
      const auto& [p, arrivals] = *tokens.begin();
      if (p != net.exit || arrivals.size() != 1) return std::nullopt;
      return *arrivals.begin();
    }
    const auto& stepv = trace[i];
    if (!stepv.time) return std::nullopt;
    const std::int64_t tau = *stepv.time;
    const NodeId& t = stepv.transition;
    if (!adj.in.count(t)) return std::nullopt;

    struct Shim {
      std::vector<NodeId> places;
      std::vector<std::vector<std::int64_t>> options;
    } shim;
    for (const auto& p : adj.in.at(t)) {
      auto it = tokens.find(p);
      if (it == tokens.end()) return std::nullopt;
      std::set<std::int64_t> distinct(it->second.begin(), it->second.end());
      shim.places.push_back(p);
      shim.options.emplace_back(distinct.begin(), distinct.end());
    }
    std::vector<std::size_t> pick(shim.places.size(), 0);
    while (true) {
      std::int64_t readiness = 0, expiry = kInf;
      bool available = true;
      for (std::size_t k = 0; k < shim.places.size(); ++k) {
        const std::int64_t arr = shim.options[k][pick[k]];
        if (arr > tau) available = false;
        readiness = std::max(readiness, arr + c.pl.at(shim.places[k]));
        if (c.pu.at(shim.places[k]) != kInf)
          expiry = std::min(expiry, arr + c.pu.at(shim.places[k]));
      }
      const std::int64_t lower = readiness + c.tl.at(t);
      const std::int64_t upper =
          c.tu.at(t) == kInf ? expiry : std::min(readiness + c.tu.at(t), expiry);
      if (available && lower <= tau && tau <= upper) {
        Tokens next = tokens;
        for (std::size_t k = 0; k < shim.places.size(); ++k) {
          auto& arrivals = next[shim.places[k]];
          arrivals.erase(arrivals.find(shim.options[k][pick[k]]));
          if (arrivals.empty()) next.erase(shim.places[k]);
        }
        for (const auto& p : adj.out.at(t)) next[p].insert(tau + c.td.at(t));
        if (auto done = step(next, i + 1)) return done;
      }
      std::size_t k = 0;
      for (; k < shim.places.size(); ++k) {
        if (++pick[k] < shim.options[k].size()) break;
        pick[k] = 0;
      }
      if (k == shim.places.size()) break;
    }
    return std::nullopt;
  };
  return step(init, 0);
}

}  // namespace oracle
