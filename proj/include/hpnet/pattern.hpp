#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hpnet/interval.hpp"
#include "hpnet/net.hpp"
#include "hpnet/reach.hpp"

namespace hpnet {

/// Workflow-pattern tree: sequence, parallel split/join, conditional choice,
/// bounded loop, and leaf activities carrying a TEB interval. Seq and Cond
/// carry the TEC interval of their connector place.
struct PatternExpr {
  enum class Kind { leaf, seq, par, cond, loop };

  Kind kind = Kind::leaf;
  std::string id;                // leaf activity name
  TimeInterval teb{0, 0};        // leaf only
  TimeInterval tec{0, 0};        // seq/cond connector
  std::int64_t loop_count = 1;   // loop only, >= 1
  /// seq: {first, second}; par: branches; cond: {pre, branch...}; loop: {body}
  std::vector<PatternExpr> children;

  static PatternExpr leaf(std::string id, TimeInterval teb);
  static PatternExpr seq(PatternExpr first, PatternExpr second, TimeInterval tec);
  static PatternExpr par(std::vector<PatternExpr> branches);
  static PatternExpr cond(PatternExpr pre, std::vector<PatternExpr> branches,
                          TimeInterval tec);
  static PatternExpr loop(PatternExpr body, std::int64_t k);

  bool operator==(const PatternExpr&) const = default;
};

/// The interval calculus over pattern trees:
///   leaf         -> its TEB
///   seq(i,j,tec) -> teb(i) + teb(j) + tec
///   par(b...)    -> componentwise max over branches
///   cond(pre,b...,tec) -> max_i (teb(pre) + teb(b_i) + tec), componentwise
///   loop(i,k)    -> [k * lo, k * hi]
TimeInterval teb_eval(const PatternExpr& e);

/// Generates the net shape of the pattern tree: leaves become single
/// transitions whose window is the leaf TEB, parallel branches sit between
/// silent split/join transitions, conditional branches consume a shared
/// connector place, loops are unrolled. Connector TEC intervals are folded
/// into the windows of the transitions consuming the connector place, which
/// makes the generated net's completion interval match the calculus exactly
/// on Cond-free trees. The result is a well-formed workflow net.
Net pattern_to_net(const PatternExpr& e);

enum class BoundsRelation {
  equal,
  calculus_contains_statespace,  // calculus envelopes the semantic interval
  mismatch,                      // semantics exceeds the calculus: a defect
  unknown_relation,              // state space truncated
};

std::string to_string(BoundsRelation r);

struct BoundsReport {
  TimeInterval calculus{0, 0};
  TimeInterval statespace{0, 0};
  BoundsRelation relation = BoundsRelation::unknown_relation;
};

/// Cross-checks the calculus value against the completion interval of the
/// generated net's timed state space.
BoundsReport check_bounds_against_oracle(const PatternExpr& e,
                                         const ExploreLimits& lim);

}  // namespace hpnet
