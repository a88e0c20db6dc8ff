#pragma once

// Terse net construction for tests.

#include "hpnet/net.hpp"

namespace th {

struct Build {
  hpnet::Net net;

  Build& place(const hpnet::NodeId& id, bool entry = false, bool exit = false,
               hpnet::TimeInterval w = {0, hpnet::TimeInterval::kUnbounded}) {
    net.places.push_back({id, entry, exit, w});
    if (entry) net.entry = id;
    if (exit) net.exit = id;
    return *this;
  }

  Build& trans(const hpnet::NodeId& id, hpnet::TimeInterval w = {0, 0},
               std::int64_t duration = 0) {
    net.transitions.push_back({id, "", "", w, duration, false});
    return *this;
  }

  Build& arc(const hpnet::NodeId& a, const hpnet::NodeId& b) {
    net.arcs.push_back({a, b});
    return *this;
  }

  hpnet::Net done() {
    net.normalize();
    return net;
  }
};

inline hpnet::Marking tokens(std::initializer_list<std::pair<hpnet::NodeId, std::int64_t>> init) {
  hpnet::Marking m;
  for (const auto& [p, n] : init) m.set(p, n);
  return m;
}

// p0 -> t1 -> p1 -> t2 -> p2 (untimed defaults)
inline hpnet::Net linear_chain() {
  return Build{}
      .place("p0", true)
      .place("p1")
      .place("p2", false, true)
      .trans("t1")
      .trans("t2")
      .arc("p0", "t1")
      .arc("t1", "p1")
      .arc("p1", "t2")
      .arc("t2", "p2")
      .done();
}

}  // namespace th
