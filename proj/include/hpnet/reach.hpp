#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hpnet/net.hpp"

namespace hpnet {

/// Exploration guards. Hitting a limit truncates the search and turns
/// verdicts into "unknown"; it never produces a wrong definite answer.
struct ExploreLimits {
  std::int64_t max_states = 1'000'000;
  std::int64_t max_token_bound = 16;
};

enum class Verdict { yes, no, unknown };

std::string to_string(Verdict v);

struct TraceStep {
  NodeId transition;
  std::optional<std::int64_t> time;  // firing time for timed traces

  bool operator==(const TraceStep&) const = default;
};
using Trace = std::vector<TraceStep>;

/// Explicit reachability graph. States are deduplicated markings in BFS
/// discovery order (transitions tried in sorted-id order), so the graph is
/// identical across runs.
struct ReachGraph {
  struct Edge {
    std::size_t from;
    NodeId transition;
    std::size_t to;
  };

  std::vector<Marking> states;
  std::vector<Edge> edges;
  Marking initial;
  bool truncated = false;
  /// First marking whose per-place count exceeded max_token_bound, if any.
  std::optional<Marking> unbounded_suspect;
};

ReachGraph reachability_graph(const Net& net, const Marking& m0,
                              const ExploreLimits& lim);

struct BoundednessReport {
  Verdict bounded = Verdict::unknown;
  std::int64_t k = 1;
  std::optional<Marking> witness;
  Trace witness_path;
  bool truncated = false;
};

/// k-boundedness from m0; k=1 is the safeness check.
BoundednessReport check_boundedness(const Net& net, const Marking& m0,
                                    std::int64_t k, const ExploreLimits& lim);

struct DeadlockReport {
  Verdict deadlock_free = Verdict::unknown;
  std::optional<Marking> witness;
  Trace witness_path;  // BFS parents make this a shortest trace
  bool truncated = false;
};

/// A deadlock is a reachable marking with no enabled transition that is not
/// the proper-completion marking {exit: 1}.
DeadlockReport check_deadlock_freedom(const Net& net, const Marking& m0,
                                      const ExploreLimits& lim);

struct CompletionReport {
  Verdict proper = Verdict::unknown;
  bool completion_reachable = false;    // clause (a)
  std::optional<Marking> residual_witness;  // clause (b) counterexample
  Trace residual_path;
  bool truncated = false;
  std::string detail;
};

/// From {entry: 1}: (a) the marking {exit: 1} is reachable and (b) every
/// reachable marking with a token on exit is exactly {exit: 1}.
CompletionReport check_proper_completion(const Net& net, const ExploreLimits& lim);

/// Structural workflow shape: unique entry with empty preset, unique exit
/// with empty postset, every node on some directed path entry -> exit.
/// No state space is built.
ValidationReport check_wellformed_workflow(const Net& net);

}  // namespace hpnet
