#pragma once

#include <string>

#include "hpnet/interval.hpp"
#include "hpnet/reach.hpp"
#include "hpnet/timed.hpp"

#include "json.hpp"

namespace hpnet {

// Reports use ordered JSON so repeated runs emit byte-identical documents.
using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "hpnet 0.1.0";

/// Accumulates per-check verdicts for one command invocation.
struct Verdicts {
  Json items = Json::array();

  void add(const std::string& check, const std::string& result, Json details,
           Json witness = nullptr);
  bool all_pass() const;
};

/// Top-level report shape: {tool_version, command, input, verdicts}.
Json report_envelope(const std::string& command, const std::string& input,
                     const Verdicts& verdicts);

std::string render_human(const Json& report);

Json interval_to_json(const TimeInterval& w);
Json trace_to_json(const Trace& trace);
Json violations_to_json(const std::vector<Violation>& violations);
Json timed_violations_to_json(const std::vector<TimedViolation>& violations);

}  // namespace hpnet
