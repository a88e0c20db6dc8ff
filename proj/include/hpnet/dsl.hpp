#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hpnet/hierarchy.hpp"
#include "hpnet/pattern.hpp"

namespace hpnet {

struct SourceDocument {
  std::string text;
  std::string origin = "<memory>";
};

struct Diagnostic {
  enum class Severity { error, warning };
  Severity severity = Severity::error;
  std::string code;
  std::string message;
  int line = 1;    // 1-based
  int column = 1;  // 1-based, points inside the offending token
};

std::string to_string(const Diagnostic& d);

struct NetParseResult {
  std::optional<HierarchicalNet> net;
  std::vector<Diagnostic> diagnostics;
  bool ok() const;  // a net was produced and no error diagnostics exist
};

/// Parses a net document. The first net definition is the root; later ones
/// are subnets addressable by `refine`. Never throws on bad input: every
/// failure is a positioned diagnostic.
NetParseResult parse_net(const SourceDocument& doc);

/// Canonical text form: root net first, subnets sorted by name; within a
/// net places, transitions and arcs sorted; default annotations omitted.
/// parse_net(serialize_net(h)) is structurally equal to h, and serializing
/// twice is byte-identical.
std::string serialize_net(const HierarchicalNet& h);

/// Same canonical form for a flat net (single net definition).
std::string serialize_flat(const Net& net, const std::string& name);

struct PatternParseResult {
  std::optional<PatternExpr> pattern;
  std::vector<Diagnostic> diagnostics;
  bool ok() const;
};

/// Parses a pattern document: one expression in the functional syntax
/// seq/par/cond/loop/act.
PatternParseResult parse_pattern(const SourceDocument& doc);

}  // namespace hpnet
