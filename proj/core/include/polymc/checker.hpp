#pragma once

// Global model checking over a Kripke model: Boolean connectives on bitsets,
// the box set equation, gamma by flooding, a brute-force path oracle for
// testing, and a parallel runner over a task graph.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polymc/formula.hpp"
#include "polymc/kripke.hpp"
#include "polymc/satset.hpp"
#include "polymc/task_graph.hpp"

namespace polymc {

/// Top, Atom, Not, And and Or. `children` holds the values of the node's
/// immediate subformulas in order. Throws UnknownAtom, InvalidArgument for a
/// non-Boolean node.
SatSet eval_boolean(const KripkeModel& m, const TaskNode& node,
                    std::span<const SatSet* const> children);

/// Cells in `phi` none of whose cofaces leave `phi`.
SatSet check_box(const KripkeModel& m, const SatSet& phi);

enum class FloodOrder { Fifo, Lifo, Shuffled };

struct GammaOptions {
  FloodOrder order = FloodOrder::Fifo;
  std::uint64_t seed = 0;  // Shuffled only
};

struct GammaTrace {
  SatSet frontier;
  SatSet flooded;
  SatSet result;
};

SatSet check_gamma(const KripkeModel& m, const SatSet& phi, const SatSet& psi,
                   GammaOptions options = {});
GammaTrace check_gamma_traced(const KripkeModel& m, const SatSet& phi, const SatSet& psi,
                              GammaOptions options = {});

inline constexpr std::size_t kOracleDefaultMaxCells = 14;
inline constexpr std::size_t kOracleHardMaxCells = 24;

/// Exhaustive search for up-then-free-then-down paths with pairwise distinct
/// middle cells in `phi`, deciding the face relation from the vertex lists
/// alone. Throws ModelTooLarge when the model has more than `max_cells` cells
/// (or `max_cells` exceeds the hard limit).
SatSet check_gamma_oracle(const KripkeModel& m, const SatSet& phi, const SatSet& psi,
                          std::size_t max_cells = kOracleDefaultMaxCells);

/// Direct recursive evaluation of a formula, memoized per shared node.
SatSet evaluate(const KripkeModel& m, const Formula& f);

/// Evaluates one task node of any kind from its children's values.
SatSet eval_node(const KripkeModel& m, const TaskNode& node, std::span<const SatSet* const> children);

enum class NodeStatus { Done, Failed, Cancelled };

struct NodeResult {
  NodeStatus status = NodeStatus::Cancelled;
  std::optional<SatSet> value;
  std::string error;  // Failed: message naming the formula; Cancelled: the failed input
  double millis = 0.0;
};

struct SavedResult {
  std::string label;
  NodeId node;
};

struct CheckResults {
  std::vector<NodeResult> nodes;
  std::vector<SavedResult> saves;

  bool ok() const noexcept;
  /// Throws InvalidArgument for an unknown label and rethrows the node's
  /// failure as an Error when it did not complete.
  const SatSet& value(std::string_view label) const;
  std::vector<std::string> errors() const;
};

struct RunOptions {
  unsigned workers = 1;
};

/// Evaluates every node exactly once in dependency order. Independent nodes
/// run on up to `workers` threads. A failing node cancels its dependents;
/// other nodes still finish. Never throws for node failures.
CheckResults run(const KripkeModel& m, const TaskGraph& graph, RunOptions options = {});

}  // namespace polymc
