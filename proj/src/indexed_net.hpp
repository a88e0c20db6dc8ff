#pragma once

// Private dense-index view of a Net shared by the exploration engines.
// Places and transitions are numbered in sorted-id order so that iteration
// by index matches the documented deterministic exploration order.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "hpnet/net.hpp"

namespace hpnet::detail {

struct IndexedNet {
  std::vector<const Place*> places;
  std::vector<const Transition*> transitions;
  std::vector<std::vector<int>> pre;   // transition -> sorted place indices
  std::vector<std::vector<int>> post;
  std::map<NodeId, int> place_index;
  int exit_index = -1;
  int entry_index = -1;

  explicit IndexedNet(const Net& net) {
    for (const auto& p : net.places) places.push_back(&p);
    for (const auto& t : net.transitions) transitions.push_back(&t);
    std::sort(places.begin(), places.end(),
              [](auto* a, auto* b) { return a->id < b->id; });
    std::sort(transitions.begin(), transitions.end(),
              [](auto* a, auto* b) { return a->id < b->id; });
    for (int i = 0; i < static_cast<int>(places.size()); ++i) {
      place_index[places[i]->id] = i;
      if (places[i]->id == net.entry) entry_index = i;
      if (places[i]->id == net.exit) exit_index = i;
    }
    std::map<NodeId, int> trans_index;
    for (int i = 0; i < static_cast<int>(transitions.size()); ++i)
      trans_index[transitions[i]->id] = i;
    pre.resize(transitions.size());
    post.resize(transitions.size());
    for (const auto& a : net.arcs) {
      auto pi = place_index.find(a.source);
      auto ti = trans_index.find(a.target);
      if (pi != place_index.end() && ti != trans_index.end())
        pre[ti->second].push_back(pi->second);
      pi = place_index.find(a.target);
      ti = trans_index.find(a.source);
      if (pi != place_index.end() && ti != trans_index.end())
        post[ti->second].push_back(pi->second);
    }
    for (auto& v : pre) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    for (auto& v : post) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
  }

  std::vector<std::int64_t> to_vector(const Marking& m) const {
    std::vector<std::int64_t> v(places.size(), 0);
    for (const auto& [id, c] : m.tokens) {
      auto it = place_index.find(id);
      if (it != place_index.end()) v[it->second] = c;
    }
    return v;
  }

  Marking to_marking(const std::vector<std::int64_t>& v) const {
    Marking m;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) m.tokens[places[i]->id] = v[i];
    return m;
  }
};

}  // namespace hpnet::detail
