#include <deque>
#include <random>
#include <unordered_map>

#include "polymc/checker.hpp"
#include "polymc/error.hpp"

namespace polymc {

namespace {

void require_length(const KripkeModel& m, const SatSet& s) {
  if (s.size() != m.size()) {
    throw Error(ErrorKind::LengthMismatch, "set of length " + std::to_string(s.size()) +
                                               " for a model of " + std::to_string(m.size()) +
                                               " cells");
  }
}

void require_children(const TaskNode& node, std::span<const SatSet* const> children) {
  if (children.size() != node.children.size() ||
      children.size() != static_cast<std::size_t>(arity(node.kind))) {
    throw Error(ErrorKind::InvalidArgument, "wrong number of operands for " +
                                                std::string(to_string(node.kind)));
  }
}

}  // namespace

SatSet eval_boolean(const KripkeModel& m, const TaskNode& node,
                    std::span<const SatSet* const> children) {
  require_children(node, children);
  for (const SatSet* c : children) require_length(m, *c);
  switch (node.kind) {
    case FormulaKind::Top: return SatSet::all(m.size());
    case FormulaKind::Atom: return m.atom(node.atom);
    case FormulaKind::Not: return ~*children[0];
    case FormulaKind::And: return *children[0] & *children[1];
    case FormulaKind::Or: return *children[0] | *children[1];
    default:
      throw Error(ErrorKind::InvalidArgument,
                  std::string(to_string(node.kind)) + " is not a Boolean connective");
  }
}

SatSet check_box(const KripkeModel& m, const SatSet& phi) {
  require_length(m, phi);
  SatSet out = phi;
  phi.for_each([&](CellId id) {
    for (CellId t : m.out_adj(id)) {
      if (!phi.test(t)) {
        out.reset(id);
        break;
      }
    }
  });
  return out;
}

GammaTrace check_gamma_traced(const KripkeModel& m, const SatSet& phi, const SatSet& psi,
                              GammaOptions options) {
  require_length(m, phi);
  require_length(m, psi);
  GammaTrace t;
  t.frontier = phi & out_set(m, psi);
  t.flooded = t.frontier;

  std::vector<CellId> work = t.frontier.indices();
  std::size_t head = 0;  // FIFO read position
  std::mt19937_64 rng(options.seed);

  auto visit = [&](CellId tau) {
    if (!t.flooded.test(tau) && phi.test(tau)) {
      t.flooded.set(tau);
      work.push_back(tau);
    }
  };

  while (head < work.size()) {
    CellId sigma;
    switch (options.order) {
      case FloodOrder::Fifo:
        sigma = work[head++];
        break;
      case FloodOrder::Lifo:
        sigma = work.back();
        work.pop_back();
        break;
      case FloodOrder::Shuffled:
      default: {
        std::uniform_int_distribution<std::size_t> pick(0, work.size() - 1);
        std::swap(work[pick(rng)], work.back());
        sigma = work.back();
        work.pop_back();
        break;
      }
    }
    for (CellId tau : m.in_adj(sigma)) visit(tau);
    for (CellId tau : m.out_adj(sigma)) visit(tau);
  }

  t.result = in_set(m, t.flooded);
  return t;
}

SatSet check_gamma(const KripkeModel& m, const SatSet& phi, const SatSet& psi, GammaOptions options) {
  return std::move(check_gamma_traced(m, phi, psi, options).result);
}

SatSet eval_node(const KripkeModel& m, const TaskNode& node, std::span<const SatSet* const> children) {
  switch (node.kind) {
    case FormulaKind::Box:
      require_children(node, children);
      return check_box(m, *children[0]);
    case FormulaKind::Gamma:
      require_children(node, children);
      return check_gamma(m, *children[0], *children[1]);
    default:
      return eval_boolean(m, node, children);
  }
}

namespace {

SatSet evaluate_memo(const KripkeModel& m, const Formula& f,
                     std::unordered_map<const Formula::Node*, SatSet>& memo) {
  if (auto it = memo.find(f.node()); it != memo.end()) return it->second;
  std::vector<SatSet> values;
  for (std::size_t i = 0; i < f.child_count(); ++i) values.push_back(evaluate_memo(m, f.child(i), memo));
  std::vector<const SatSet*> ptrs;
  for (const SatSet& v : values) ptrs.push_back(&v);
  TaskNode node{f.kind(), f.atom_name(), std::vector<NodeId>(f.child_count(), 0)};
  SatSet out = eval_node(m, node, ptrs);
  memo.emplace(f.node(), out);
  return out;
}

}  // namespace

SatSet evaluate(const KripkeModel& m, const Formula& f) {
  std::unordered_map<const Formula::Node*, SatSet> memo;
  return evaluate_memo(m, f, memo);
}

bool CheckResults::ok() const noexcept {
  for (const NodeResult& n : nodes) {
    if (n.status != NodeStatus::Done) return false;
  }
  return true;
}

const SatSet& CheckResults::value(std::string_view label) const {
  for (const SavedResult& s : saves) {
    if (s.label != label) continue;
    const NodeResult& r = nodes.at(s.node);
    if (r.status != NodeStatus::Done) {
      throw Error(ErrorKind::InvalidArgument, "\"" + s.label + "\" was not computed: " + r.error);
    }
    return *r.value;
  }
  throw Error(ErrorKind::InvalidArgument, "no result labelled \"" + std::string(label) + "\"");
}

std::vector<std::string> CheckResults::errors() const {
  std::vector<std::string> out;
  for (const NodeResult& n : nodes) {
    if (n.status == NodeStatus::Failed) out.push_back(n.error);
  }
  return out;
}

}  // namespace polymc
