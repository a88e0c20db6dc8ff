#include "hpnet/hierarchy.hpp"

#include <algorithm>
#include <functional>

#include "hpnet/reach.hpp"

namespace hpnet {

namespace {

const NetDef* def_for(const HierarchicalNet& h, const std::string& key) {
  if (key == h.root_name) return &h.root;
  auto it = h.subnets.find(key);
  return it == h.subnets.end() ? nullptr : &it->second;
}

// DFS over the "net refers to subnet" graph; returns a cycle path if any.
std::optional<std::vector<std::string>> find_binding_cycle(const HierarchicalNet& h) {
  std::map<std::string, int> state;  // 0 unseen, 1 on stack, 2 done
  std::vector<std::string> stack;
  std::optional<std::vector<std::string>> cycle;

  std::function<void(const std::string&)> visit = [&](const std::string& key) {
    if (cycle) return;
    state[key] = 1;
    stack.push_back(key);
    if (const NetDef* def = def_for(h, key)) {
      for (const auto& [_, target] : def->bindings) {
        if (cycle) return;
        auto it = state.find(target);
        if (it != state.end() && it->second == 1) {
          auto begin = std::find(stack.begin(), stack.end(), target);
          cycle = std::vector<std::string>(begin, stack.end());
          cycle->push_back(target);
          return;
        }
        if (it == state.end() || it->second == 0) visit(target);
      }
    }
    stack.pop_back();
    state[key] = 2;
  };

  visit(h.root_name);
  for (const auto& [name, _] : h.subnets)
    if (state[name] != 2 && !cycle) visit(name);
  return cycle;
}

std::string cycle_to_string(const std::vector<std::string>& cycle) {
  std::string s;
  for (const auto& n : cycle) {
    if (!s.empty()) s += " -> ";
    s += n;
  }
  return s;
}

// Owner lookup: root first, then subnets in name order.
struct Owner {
  std::string key;
  const NetDef* def;
};

std::optional<Owner> find_owner(const HierarchicalNet& h, const NodeId& t) {
  if (h.root.net.find_transition(t)) return Owner{h.root_name, &h.root};
  for (const auto& [name, def] : h.subnets)
    if (def.net.find_transition(t)) return Owner{name, &def};
  return std::nullopt;
}

NodeId fresh_id(const Net& net, NodeId candidate) {
  while (net.has_node(candidate)) candidate += "_";
  return candidate;
}

}  // namespace

const NetDef* HierarchicalNet::find_net(const std::string& name) const {
  if (name == root_name) return &root;
  auto it = subnets.find(name);
  return it == subnets.end() ? nullptr : &it->second;
}

ValidationReport validate_hierarchy(const HierarchicalNet& h) {
  std::vector<Violation> out;
  if (h.subnets.count(h.root_name))
    out.push_back({"DUPLICATE_NET", h.root_name, "a subnet shares the root net's name"});
  auto check_def = [&](const std::string& key, const NetDef& def) {
    for (const auto& [tid, target] : def.bindings) {
      const Transition* t = def.net.find_transition(tid);
      if (t == nullptr)
        out.push_back({"BINDING_UNKNOWN_TRANSITION", tid,
                       "binding refers to a transition not in net " + key});
      else if (!t->refinable)
        out.push_back({"BINDING_NOT_REFINABLE", tid, "bound transition is not refinable"});
      const NetDef* sub = h.find_net(target);
      if (sub == nullptr) {
        out.push_back({"UNKNOWN_SUBNET", tid, "binding targets unknown subnet " + target});
      } else {
        if (sub->net.find_place(sub->net.entry) == nullptr || sub->net.entry.empty())
          out.push_back({"SUBNET_NO_ENTRY", target, "bound subnet lacks an entry place"});
        if (sub->net.find_place(sub->net.exit) == nullptr || sub->net.exit.empty())
          out.push_back({"SUBNET_NO_EXIT", target, "bound subnet lacks an exit place"});
      }
    }
  };
  check_def(h.root_name, h.root);
  for (const auto& [name, def] : h.subnets) check_def(name, def);

  if (auto cycle = find_binding_cycle(h))
    out.push_back({"REFINEMENT_CYCLE", "", cycle_to_string(*cycle)});

  std::sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.where, a.code, a.detail) < std::tie(b.where, b.code, b.detail);
  });
  return {out};
}

HierarchicalNet attach_refinement(const HierarchicalNet& h, const NodeId& t,
                                  const std::string& subnet) {
  auto owner = find_owner(h, t);
  if (!owner)
    throw NetError(ErrorCode::unknown_node, "unknown transition: " + t);
  const Transition* trans = owner->def->net.find_transition(t);
  if (!trans->refinable)
    throw NetError(ErrorCode::not_refinable, "transition " + t + " is not refinable");
  if (h.find_net(subnet) == nullptr)
    throw NetError(ErrorCode::unknown_subnet, "unknown subnet: " + subnet);

  HierarchicalNet next = h;
  NetDef& def = owner->key == next.root_name ? next.root : next.subnets.at(owner->key);
  def.bindings[t] = subnet;

  if (auto cycle = find_binding_cycle(next))
    throw NetError(ErrorCode::refinement_cycle,
                   "refinement cycle: " + cycle_to_string(*cycle));
  return next;
}

FlattenResult flatten(const HierarchicalNet& h, int max_depth) {
  FlattenResult result;
  ValidationReport hv = validate_hierarchy(h);
  if (!hv.ok()) {
    result.errors = hv.violations;
    return result;
  }

  Net flat = h.root.net;
  std::map<NodeId, std::string> pending = h.root.bindings;  // transition -> subnet
  std::map<NodeId, int> depth;
  for (const auto& [tid, _] : pending) depth[tid] = 1;

  for (const auto& t : flat.transitions)
    if (t.refinable && !pending.count(t.id))
      result.warnings.push_back({"UNBOUND_REFINABLE", t.id,
                                 "refinable transition kept as an ordinary transition"});

  while (!pending.empty()) {
    const auto [tid, subnet_name] = *pending.begin();  // smallest id first
    pending.erase(pending.begin());

    if (depth[tid] > max_depth) {
      result.errors.push_back({"REFINEMENT_DEPTH", tid,
                               "refinement depth exceeds " + std::to_string(max_depth)});
      return result;
    }

    const Transition* bound = flat.find_transition(tid);
    if (bound == nullptr) continue;  // unreachable given validation
    const NetDef& sub = *h.find_net(subnet_name);

    ValidationReport wf = check_wellformed_workflow(sub.net);
    if (!wf.ok()) {
      result.errors.push_back({"SUBNET_NOT_WELLFORMED", tid,
                               "binding " + tid + " -> " + subnet_name +
                                   " targets a net that is not a well-formed workflow"});
      for (const auto& v : wf.violations)
        result.errors.push_back({v.code, subnet_name + "/" + v.where, v.detail});
      return result;
    }

    if (bound->window != TimeInterval{0, 0} || bound->duration != 0)
      result.warnings.push_back({"TIMING_SHADOWED", tid,
                                 "timing on the refined transition is dropped in favor of "
                                 "the subnet's internal timing"});

    const std::vector<NodeId> inputs = preset(flat, tid);
    const std::vector<NodeId> outputs = postset(flat, tid);
    const std::string prefix = tid + ".";

    std::erase_if(flat.transitions, [&](const Transition& t) { return t.id == tid; });
    std::erase_if(flat.arcs,
                  [&](const Arc& a) { return a.source == tid || a.target == tid; });

    for (Place p : sub.net.places) {
      p.id = prefix + p.id;
      p.is_entry = p.is_exit = false;
      flat.places.push_back(std::move(p));
    }
    for (Transition t : sub.net.transitions) {
      t.id = prefix + t.id;
      flat.transitions.push_back(std::move(t));
    }
    for (Arc a : sub.net.arcs)
      flat.arcs.push_back({prefix + a.source, prefix + a.target});

    const NodeId glue_in = fresh_id(flat, prefix + "_in");
    flat.transitions.push_back({glue_in, "", "", {0, 0}, 0, false});
    const NodeId glue_out = fresh_id(flat, prefix + "_out");
    flat.transitions.push_back({glue_out, "", "", {0, 0}, 0, false});

    for (const auto& p : inputs) flat.arcs.push_back({p, glue_in});
    flat.arcs.push_back({glue_in, prefix + sub.net.entry});
    flat.arcs.push_back({prefix + sub.net.exit, glue_out});
    for (const auto& p : outputs) flat.arcs.push_back({glue_out, p});

    for (const auto& [inner_tid, inner_target] : sub.bindings) {
      pending[prefix + inner_tid] = inner_target;
      depth[prefix + inner_tid] = depth[tid] + 1;
    }
    for (const auto& t : sub.net.transitions)
      if (t.refinable && !sub.bindings.count(t.id))
        result.warnings.push_back({"UNBOUND_REFINABLE", prefix + t.id,
                                   "refinable transition kept as an ordinary transition"});
  }

  flat.normalize();
  result.net = std::move(flat);
  return result;
}

AlterationReport check_condition_alteration(const HierarchicalNet& h, const NodeId& t) {
  auto owner = find_owner(h, t);
  if (!owner)
    throw NetError(ErrorCode::unknown_node, "unknown transition: " + t);
  auto binding = owner->def->bindings.find(t);
  if (binding == owner->def->bindings.end())
    throw NetError(ErrorCode::unbound_transition, "transition " + t + " has no binding");

  const NetDef* sub = h.find_net(binding->second);
  AlterationReport report;
  if (sub == nullptr) {
    report.detail = "bound subnet " + binding->second + " does not exist";
    return report;
  }

  const auto entry_succ = postset(sub->net, sub->net.entry);
  const auto exit_pred = preset(sub->net, sub->net.exit);
  if (entry_succ.size() != 1 || exit_pred.size() != 1) {
    report.detail =
        "BOUNDARY_AMBIGUOUS: subnet entry/exit must have exactly one "
        "successor/predecessor transition for the label comparison";
    return report;
  }

  auto labels = [](const std::map<NodeId, std::set<std::string>>& m, const NodeId& id) {
    auto it = m.find(id);
    return it == m.end() ? std::set<std::string>{} : it->second;
  };
  const auto abstract_pre = labels(owner->def->pre, t);
  const auto abstract_post = labels(owner->def->post, t);
  const auto first_pre = labels(sub->pre, entry_succ.front());
  const auto last_post = labels(sub->post, exit_pred.front());

  const bool pre_ok = std::includes(abstract_pre.begin(), abstract_pre.end(),
                                    first_pre.begin(), first_pre.end());
  const bool post_ok = std::includes(last_post.begin(), last_post.end(),
                                     abstract_post.begin(), abstract_post.end());
  report.passed = pre_ok && post_ok;
  report.vacuous = abstract_pre.empty() && abstract_post.empty() &&
                   first_pre.empty() && last_post.empty();
  if (report.vacuous)
    report.detail = "VACUOUS: no predicate labels declared on either level";
  else if (!pre_ok)
    report.detail = "subnet precondition is not weaker-or-equal (label subset) "
                    "than the refined transition's";
  else if (!post_ok)
    report.detail = "subnet postcondition is not stronger-or-equal (label superset) "
                    "than the refined transition's";
  else
    report.detail = "label-set inclusion holds (approximates logical implication)";
  return report;
}

}  // namespace hpnet
