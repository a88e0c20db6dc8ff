#include "hpnet/net.hpp"

#include <algorithm>
#include <sstream>

namespace hpnet {

namespace {

template <typename T>
const T* find_by_id(const std::vector<T>& items, const NodeId& id) {
  // vectors are sorted by id after normalize(); linear scan keeps this
  // correct for un-normalized nets built by hand in tests
  for (const auto& item : items)
    if (item.id == id) return &item;
  return nullptr;
}

}  // namespace

const Place* Net::find_place(const NodeId& id) const {
  return find_by_id(places, id);
}

const Transition* Net::find_transition(const NodeId& id) const {
  return find_by_id(transitions, id);
}

bool Net::has_node(const NodeId& id) const {
  return find_place(id) != nullptr || find_transition(id) != nullptr;
}

void Net::normalize() {
  std::sort(places.begin(), places.end(),
            [](const Place& a, const Place& b) { return a.id < b.id; });
  std::sort(transitions.begin(), transitions.end(),
            [](const Transition& a, const Transition& b) { return a.id < b.id; });
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
}

std::int64_t Marking::count(const NodeId& place) const {
  auto it = tokens.find(place);
  return it == tokens.end() ? 0 : it->second;
}

void Marking::set(const NodeId& place, std::int64_t n) {
  if (n == 0)
    tokens.erase(place);
  else
    tokens[place] = n;
}

void Marking::add(const NodeId& place, std::int64_t delta) {
  set(place, count(place) + delta);
}

std::int64_t Marking::total() const {
  std::int64_t n = 0;
  for (const auto& [_, c] : tokens) n += c;
  return n;
}

std::string Marking::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [p, c] : tokens) {
    if (!first) os << ", ";
    first = false;
    os << p << ":" << c;
  }
  os << "}";
  return os.str();
}

ValidationReport validate_structure(const Net& net, bool strict_intervals) {
  std::vector<Violation> out;
  auto emit = [&](std::string code, NodeId where, std::string detail) {
    out.push_back({std::move(code), std::move(where), std::move(detail)});
  };

  if (net.places.empty() && net.transitions.empty())
    emit("EMPTY_NET", "", "net has no places and no transitions");

  // jointly unique identifiers (this is what keeps P and T disjoint)
  std::map<NodeId, int> seen;
  for (const auto& p : net.places) seen[p.id]++;
  for (const auto& t : net.transitions) seen[t.id]++;
  for (const auto& [id, n] : seen)
    if (n > 1) emit("DUPLICATE_ID", id, "identifier used " + std::to_string(n) + " times");

  auto check_window = [&](const TimeInterval& w, const NodeId& id, const char* kind) {
    if (w.lo < 0)
      emit("INTERVAL_NEGATIVE", id, std::string(kind) + " window lower bound is negative");
    else if (w.lo > w.hi)
      emit("INTERVAL_ORDER", id, std::string(kind) + " window " + w.to_string() + " has lo > hi");
    else if (strict_intervals && w.lo == w.hi)
      emit("INTERVAL_STRICT", id, std::string(kind) + " window " + w.to_string() + " is a point interval");
    if (strict_intervals && !w.bounded())
      emit("INTERVAL_UNBOUNDED", id, std::string(kind) + " window has an unbounded upper bound");
  };

  int entries = 0, exits = 0;
  for (const auto& p : net.places) {
    if (p.is_entry) entries++;
    if (p.is_exit) exits++;
    check_window(p.window, p.id, "place");
  }
  if (entries > 1) emit("MULTIPLE_ENTRY", "", std::to_string(entries) + " places have the entry role");
  if (exits > 1) emit("MULTIPLE_EXIT", "", std::to_string(exits) + " places have the exit role");

  for (const auto& t : net.transitions) {
    check_window(t.window, t.id, "transition");
    if (t.duration < 0)
      emit("DURATION_NEGATIVE", t.id, "duration " + std::to_string(t.duration) + " is negative");
  }

  for (const auto& a : net.arcs) {
    const bool src_place = net.find_place(a.source) != nullptr;
    const bool src_trans = net.find_transition(a.source) != nullptr;
    const bool dst_place = net.find_place(a.target) != nullptr;
    const bool dst_trans = net.find_transition(a.target) != nullptr;
    const std::string arc_name = a.source + " -> " + a.target;
    if (!(src_place || src_trans))
      emit("ARC_ENDPOINT", a.source, "arc " + arc_name + " starts at an unknown node");
    if (!(dst_place || dst_trans))
      emit("ARC_ENDPOINT", a.target, "arc " + arc_name + " ends at an unknown node");
    if ((src_place && dst_place) || (src_trans && dst_trans))
      emit("ARC_SHAPE", a.source, "arc " + arc_name + " connects two nodes of the same kind");
  }

  const Place* entry = net.find_place(net.entry);
  if (entry == nullptr)
    emit("ENTRY_MISSING", net.entry, "entry place does not exist");
  else if (!entry->is_entry)
    emit("ENTRY_ROLE", net.entry, "designated entry place lacks the entry role");
  const Place* exitp = net.find_place(net.exit);
  if (exitp == nullptr)
    emit("EXIT_MISSING", net.exit, "exit place does not exist");
  else if (!exitp->is_exit)
    emit("EXIT_ROLE", net.exit, "designated exit place lacks the exit role");

  std::sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.where, a.code, a.detail) < std::tie(b.where, b.code, b.detail);
  });
  return {out};
}

std::vector<NodeId> preset(const Net& net, const NodeId& node) {
  if (!net.has_node(node))
    throw NetError(ErrorCode::unknown_node, "unknown node: " + node);
  std::set<NodeId> in;
  for (const auto& a : net.arcs)
    if (a.target == node) in.insert(a.source);
  return {in.begin(), in.end()};
}

std::vector<NodeId> postset(const Net& net, const NodeId& node) {
  if (!net.has_node(node))
    throw NetError(ErrorCode::unknown_node, "unknown node: " + node);
  std::set<NodeId> out;
  for (const auto& a : net.arcs)
    if (a.source == node) out.insert(a.target);
  return {out.begin(), out.end()};
}

std::vector<NodeId> enabled_transitions(const Net& net, const Marking& m) {
  std::vector<NodeId> result;
  for (const auto& t : net.transitions) {
    bool enabled = true;
    for (const auto& a : net.arcs) {
      if (a.target == t.id && m.count(a.source) < 1) {
        enabled = false;
        break;
      }
    }
    if (enabled) result.push_back(t.id);
  }
  std::sort(result.begin(), result.end());
  return result;
}

Marking fire(const Net& net, const Marking& m, const NodeId& t) {
  if (net.find_transition(t) == nullptr)
    throw NetError(ErrorCode::unknown_node, "unknown transition: " + t);
  Marking next = m;
  for (const auto& p : preset(net, t)) {
    if (next.count(p) < 1)
      throw NetError(ErrorCode::not_enabled,
                     "transition " + t + " is not enabled: place " + p + " is empty");
    next.add(p, -1);
  }
  for (const auto& p : postset(net, t)) next.add(p, +1);
  return next;
}

}  // namespace hpnet
