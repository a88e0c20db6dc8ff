#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hpnet/net.hpp"

namespace hpnet {

/// One net definition plus the refinement data scoped to it: which of its
/// refinable transitions is bound to which subnet, and the declared pre/post
/// predicate labels used by the condition-alteration check.
struct NetDef {
  Net net;
  std::map<NodeId, std::string> bindings;            // transition -> subnet name
  std::map<NodeId, std::set<std::string>> pre;       // transition -> labels
  std::map<NodeId, std::set<std::string>> post;

  bool operator==(const NetDef&) const = default;
};

/// A root net together with named subnets. Refinable transitions may be
/// bound to a subnet; flatten() substitutes bound transitions by a copy of
/// their subnet until none remain.
struct HierarchicalNet {
  std::string root_name = "Main";
  NetDef root;
  std::map<std::string, NetDef> subnets;

  const NetDef* find_net(const std::string& name) const;

  bool operator==(const HierarchicalNet&) const = default;
};

/// Hierarchy-level invariants: binding keys are refinable transitions,
/// binding targets exist, the binding graph is acyclic, and every bound
/// subnet has entry and exit places.
ValidationReport validate_hierarchy(const HierarchicalNet& h);

/// Returns a copy of `h` with the binding t -> subnet added. The owning net
/// is located by searching the root first, then subnets in name order.
/// Throws NetError: not_refinable, unknown_subnet, unknown_node, or
/// refinement_cycle (message carries the cycle path).
HierarchicalNet attach_refinement(const HierarchicalNet& h, const NodeId& t,
                                  const std::string& subnet);

struct FlattenResult {
  std::optional<Net> net;
  std::vector<Violation> errors;
  std::vector<Violation> warnings;
  bool ok() const { return net.has_value() && errors.empty(); }
};

/// Expands every bound transition into a copy of its subnet. Subnet node ids
/// are prefixed with "<transition id>."; fresh silent glue transitions
/// "<id>._in" / "<id>._out" route tokens through the subnet's entry and exit
/// places. Unbound refinable transitions stay as ordinary transitions with a
/// warning; a bound transition's own window/duration is dropped with a
/// TIMING_SHADOWED warning. Bound subnets must be well-formed workflow nets.
FlattenResult flatten(const HierarchicalNet& h, int max_depth = 32);

/// Condition-alteration check for a bound transition: the subnet's first
/// transition (sole successor of its entry) must declare a subset of the
/// abstract transition's pre labels, and the subnet's last transition (sole
/// predecessor of its exit) must declare a superset of its post labels.
/// Label-set inclusion approximates logical weakening/strengthening.
struct AlterationReport {
  bool passed = false;
  bool vacuous = false;   // all label sets empty
  std::string detail;
};

AlterationReport check_condition_alteration(const HierarchicalNet& h, const NodeId& t);

}  // namespace hpnet
