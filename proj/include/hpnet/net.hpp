#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hpnet/interval.hpp"

namespace hpnet {

using NodeId = std::string;

/// A place models a condition of the process; a token in it marks that the
/// condition currently holds. The optional window constrains how long after
/// arrival a token stays consumable (defaults to [0, inf]).
struct Place {
  NodeId id;
  bool is_entry = false;
  bool is_exit = false;
  TimeInterval window{0, TimeInterval::kUnbounded};

  bool operator==(const Place&) const = default;
};

/// A transition models an action. `name` is the bound service label; the
/// empty string is the silent label (structural step, no service call).
/// `guard` is an uninterpreted predicate label: analyses treat guarded
/// transitions as nondeterministically enabled. The window constrains firing
/// relative to enabling (default [0,0]); `duration` delays token production.
struct Transition {
  NodeId id;
  std::string name;   // empty = silent
  std::string guard;  // empty = none
  TimeInterval window{0, 0};
  std::int64_t duration = 0;
  bool refinable = false;

  bool operator==(const Transition&) const = default;
};

struct Arc {
  NodeId source;
  NodeId target;

  bool operator==(const Arc&) const = default;
  auto operator<=>(const Arc&) const = default;
};

/// Flat net. Node vectors are kept sorted by id (normalize() enforces this);
/// ids are unique across places and transitions jointly.
struct Net {
  std::vector<Place> places;
  std::vector<Transition> transitions;
  std::vector<Arc> arcs;
  NodeId entry;
  NodeId exit;

  const Place* find_place(const NodeId& id) const;
  const Transition* find_transition(const NodeId& id) const;
  bool has_node(const NodeId& id) const;

  /// Sorts nodes and arcs and drops duplicate arcs. All analysis and
  /// serialization code assumes normalized nets.
  void normalize();

  bool operator==(const Net&) const = default;
};

/// Multiset of tokens over places. Zero counts are never stored, so equal
/// markings compare equal structurally.
struct Marking {
  std::map<NodeId, std::int64_t> tokens;

  std::int64_t count(const NodeId& place) const;
  void set(const NodeId& place, std::int64_t n);
  void add(const NodeId& place, std::int64_t delta);
  std::int64_t total() const;

  bool operator==(const Marking&) const = default;
  auto operator<=>(const Marking&) const = default;

  std::string to_string() const;
};

/// One structural problem found by validation; violations are data, not
/// failures.
struct Violation {
  std::string code;
  NodeId where;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

enum class ErrorCode {
  unknown_node,
  not_enabled,
  not_refinable,
  unknown_subnet,
  unbound_transition,
  refinement_cycle,
  refinement_depth,
  invalid_argument,
};

/// Thrown when an operation's precondition is violated (unknown ids, firing
/// a disabled transition, illegal refinement edits). Analysis verdicts are
/// never reported via exceptions.
class NetError : public std::runtime_error {
 public:
  NetError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Checks the structural invariants: non-empty node set, jointly unique ids,
/// arcs between opposite node kinds only, unique entry/exit with matching
/// role flags, well-ordered windows, non-negative durations.
/// With `strict_intervals`, point windows and unbounded upper bounds are
/// additionally rejected.
/// The report is deterministic and ordered by (node id, code).
ValidationReport validate_structure(const Net& net, bool strict_intervals = false);

/// Sources of arcs into `node` / targets of arcs out of it, sorted.
/// Throws NetError(unknown_node) for ids not in the net.
std::vector<NodeId> preset(const Net& net, const NodeId& node);
std::vector<NodeId> postset(const Net& net, const NodeId& node);

/// Plain untimed enabling: every preset place holds at least one token.
std::vector<NodeId> enabled_transitions(const Net& net, const Marking& m);

/// Token-game step. Throws NetError(not_enabled) if `t` is not enabled
/// and NetError(unknown_node) if it does not exist.
Marking fire(const Net& net, const Marking& m, const NodeId& t);

}  // namespace hpnet
