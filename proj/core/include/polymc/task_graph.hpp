#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "polymc/formula.hpp"
#include "polymc/spec_language.hpp"

namespace polymc {

using NodeId = std::uint32_t;

struct TaskNode {
  FormulaKind kind;
  std::string atom;  // Atom nodes only
  std::vector<NodeId> children;

  friend bool operator==(const TaskNode&, const TaskNode&) = default;
};

/// Hash-consed DAG of subformulas. A node is added only after its children,
/// so ids are a topological order. Identical subformulas share one node.
class TaskGraph {
 public:
  NodeId add(const Formula& f);
  /// Adds `f` and records it under `label`; labels keep insertion order.
  NodeId add_root(std::string label, const Formula& f);

  std::size_t size() const noexcept { return nodes_.size(); }
  const TaskNode& node(NodeId id) const { return nodes_.at(id); }
  const std::vector<TaskNode>& nodes() const noexcept { return nodes_; }
  const std::vector<std::pair<std::string, NodeId>>& roots() const noexcept { return roots_; }

  /// Rebuilds the formula of a node.
  Formula formula(NodeId id) const;
  /// Nodes that use `id` as an immediate subformula.
  std::vector<std::vector<NodeId>> dependents() const;

 private:
  struct KeyHash {
    std::size_t operator()(const TaskNode& n) const noexcept;
  };

  std::vector<TaskNode> nodes_;
  std::unordered_map<TaskNode, NodeId, KeyHash> index_;
  std::unordered_map<const Formula::Node*, NodeId> seen_;
  // Keeps visited formula nodes alive so their addresses stay unique.
  std::vector<Formula> pinned_;
  std::vector<std::pair<std::string, NodeId>> roots_;
};

TaskGraph build_task_graph(const ElaboratedSpec& spec);

}  // namespace polymc
