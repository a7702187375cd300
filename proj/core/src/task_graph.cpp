#include "polymc/task_graph.hpp"

#include <functional>

#include "polymc/error.hpp"

namespace polymc {

std::size_t TaskGraph::KeyHash::operator()(const TaskNode& n) const noexcept {
  std::size_t h = std::hash<int>{}(static_cast<int>(n.kind));
  h ^= std::hash<std::string>{}(n.atom) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  for (NodeId c : n.children) h ^= c + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

NodeId TaskGraph::add(const Formula& root) {
  // Iterative post-order so deep formulas cannot overflow the stack.
  std::vector<std::pair<Formula, bool>> stack{{root, false}};
  while (!stack.empty()) {
    auto [f, expanded] = stack.back();
    stack.pop_back();
    if (seen_.count(f.node())) continue;
    if (!expanded) {
      stack.emplace_back(f, true);
      for (std::size_t i = f.child_count(); i-- > 0;) {
        if (!seen_.count(f.child(i).node())) stack.emplace_back(f.child(i), false);
      }
      continue;
    }
    TaskNode key{f.kind(), f.atom_name(), {}};
    for (std::size_t i = 0; i < f.child_count(); ++i) key.children.push_back(seen_.at(f.child(i).node()));
    auto [it, inserted] = index_.try_emplace(key, static_cast<NodeId>(nodes_.size()));
    if (inserted) nodes_.push_back(std::move(key));
    seen_.emplace(f.node(), it->second);
    pinned_.push_back(f);
  }
  return seen_.at(root.node());
}

NodeId TaskGraph::add_root(std::string label, const Formula& f) {
  NodeId id = add(f);
  roots_.emplace_back(std::move(label), id);
  return id;
}

Formula TaskGraph::formula(NodeId id) const {
  std::vector<Formula> built;
  built.reserve(id + 1);
  // Children have smaller ids, so a single forward pass suffices.
  for (NodeId i = 0; i <= id; ++i) {
    const TaskNode& n = nodes_.at(i);
    switch (n.kind) {
      case FormulaKind::Top: built.push_back(Formula::top()); break;
      case FormulaKind::Atom: built.push_back(Formula::atom(n.atom)); break;
      case FormulaKind::Not: built.push_back(!built[n.children[0]]); break;
      case FormulaKind::And: built.push_back(built[n.children[0]] & built[n.children[1]]); break;
      case FormulaKind::Or: built.push_back(built[n.children[0]] | built[n.children[1]]); break;
      case FormulaKind::Box: built.push_back(Formula::box(built[n.children[0]])); break;
      case FormulaKind::Gamma:
        built.push_back(Formula::gamma(built[n.children[0]], built[n.children[1]]));
        break;
    }
  }
  return built[id];
}

std::vector<std::vector<NodeId>> TaskGraph::dependents() const {
  std::vector<std::vector<NodeId>> out(nodes_.size());
  for (NodeId i = 0; i < nodes_.size(); ++i) {
    for (NodeId c : nodes_[i].children) {
      if (out[c].empty() || out[c].back() != i) out[c].push_back(i);
    }
  }
  return out;
}

TaskGraph build_task_graph(const ElaboratedSpec& spec) {
  TaskGraph g;
  for (const auto& [label, f] : spec.saves) g.add_root(label, f);
  return g;
}

}  // namespace polymc
