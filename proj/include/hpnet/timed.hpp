#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hpnet/net.hpp"
#include "hpnet/reach.hpp"

namespace hpnet {

// Timed semantics. A token that arrived at place p at time a is consumable
// during [a + TCmin(p), a + TCmax(p)]. A transition t whose chosen input
// tokens arrived at times a_i is ready at e = max_i(a_i + TCmin(p_i)) and may
// fire at any integer time
//     e + TCmin(t) <= tau <= min(e + TCmax(t), min_i(a_i + TCmax(p_i))).
// Firing consumes the inputs at tau and produces output tokens that arrive at
// tau + TD(t). Time passes only towards some possible future event: a state
// whose enabled transitions have all lost their windows is a timing
// violation, not a silent skip.

struct TimedToken {
  NodeId place;
  std::int64_t arrived = 0;

  bool operator==(const TimedToken&) const = default;
};

struct TimedState {
  std::int64_t now = 0;
  std::vector<TimedToken> tokens;  // tokens with arrived > now are in transit

  bool operator==(const TimedState&) const = default;
};

struct TimedFiring {
  NodeId transition;
  std::int64_t time = 0;
  TimedState state;
};

/// Definitional successor enumeration on absolute-time states. Fires happen
/// at integer times >= s.now; transitions whose upper firing bound is
/// unbounded are enumerated up to lower + horizon_cap choices (the state
/// graph itself handles unbounded windows exactly through age saturation).
std::vector<TimedFiring> timed_successors(const Net& net, const TimedState& s,
                                          std::int64_t horizon_cap = 64);

/// Explicit timed state graph. States carry token ages relative to the
/// exploration clock, saturated at the net's absorption constant
/// 1 + max(TCmax(p), TCmin(p) + TCmax(t), TCmin(p) + TCmin(t)) over finite
/// constants, which keeps the graph finite; `pending` lists produced tokens
/// still in transit with their remaining delay. Edges with a transition fire
/// it instantaneously; edges without one let one time unit pass.
struct TimedGraph {
  struct State {
    Marking marking;
    std::vector<std::pair<NodeId, std::int64_t>> token_ages;  // sorted
    std::vector<std::pair<NodeId, std::int64_t>> pending;     // (place, remaining)
  };
  struct Edge {
    std::size_t from;
    std::optional<NodeId> transition;  // nullopt: one time unit passes
    std::size_t to;
  };

  std::vector<State> states;
  std::vector<Edge> edges;
  std::vector<std::size_t> accepting;  // proper-completion states
  bool truncated = false;
  std::int64_t age_clamp = 0;
};

TimedGraph timed_state_graph(const Net& net, const ExploreLimits& lim);

struct TimedViolation {
  std::string code;        // EMPTY_WINDOW, WINDOW_PASSED, DURATION_OVERSHOOT
  NodeId transition;
  NodeId place;            // set for DURATION_OVERSHOOT
  Trace witness;           // shortest path to the offending state
  std::string detail;
};

struct ScheduleReport {
  Verdict schedulable = Verdict::unknown;
  /// Min/max completion times over all accepting runs; hi is kUnbounded when
  /// runs can be delayed forever. Meaningful when an accepting run exists.
  TimeInterval completion{0, 0};
  std::optional<std::int64_t> deadline;
  Trace fastest;  // accepting run achieving completion.lo
  Trace slowest;  // accepting run achieving a bounded completion.hi
  std::vector<TimedViolation> violations;
  bool truncated = false;
};

/// Schedulability: does some timed run reach proper completion (exactly one
/// token, on the exit place) respecting every window, and within the
/// deadline if one is given? Violations list the timing dead ends
/// encountered: states where every enabled transition's window is empty or
/// has passed.
ScheduleReport check_schedulability(const Net& net,
                                    std::optional<std::int64_t> deadline,
                                    const ExploreLimits& lim);

/// Per-transition time consistency: reports transitions that are enabled
/// somewhere in the timed graph with a structurally empty window
/// (EMPTY_WINDOW) and firing durations that overshoot the consumability
/// span of an output place (DURATION_OVERSHOOT). Run-level timing dead
/// ends are reported by check_schedulability instead. An empty list means
/// the net is time-consistent.
std::vector<TimedViolation> check_time_consistency(const Net& net,
                                                   const ExploreLimits& lim);

}  // namespace hpnet
