#pragma once

// Core SLCS formulas: Top, atoms, negation, conjunction, disjunction, box and
// gamma (reachability). Nodes are immutable and shared, so large macro
// expansions stay DAG-shaped in memory.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace polymc {

enum class FormulaKind { Top, Atom, Not, And, Or, Box, Gamma };

std::string_view to_string(FormulaKind kind) noexcept;
/// Number of immediate subformulas for each kind.
int arity(FormulaKind kind) noexcept;

class Formula {
 public:
  struct Node;

  static Formula top();
  static Formula atom(std::string name);
  static Formula negation(Formula f);
  static Formula conjunction(Formula f, Formula g);
  static Formula disjunction(Formula f, Formula g);
  static Formula box(Formula f);
  static Formula gamma(Formula f, Formula g);

  FormulaKind kind() const noexcept;
  /// Empty unless kind() == Atom.
  const std::string& atom_name() const noexcept;
  std::size_t child_count() const noexcept;
  const Formula& child(std::size_t i) const;

  /// Identity of the shared node; equal pointers imply equal formulas.
  const Node* node() const noexcept { return node_.get(); }

  /// Structural hash, cached per node.
  std::size_t hash() const noexcept;
  std::size_t depth() const noexcept;

  /// Prints in specification-language syntax with minimal parentheses, so the
  /// text parses back to the same formula.
  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b) noexcept;

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(FormulaKind kind, std::string atom, std::vector<Formula> children);

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  FormulaKind kind;
  std::string atom;
  std::vector<Formula> children;
  std::size_t hash;
  std::size_t depth;
};

// Shorthands used throughout tests and the desugarer.
inline Formula operator!(Formula f) { return Formula::negation(std::move(f)); }
inline Formula operator&(Formula f, Formula g) { return Formula::conjunction(std::move(f), std::move(g)); }
inline Formula operator|(Formula f, Formula g) { return Formula::disjunction(std::move(f), std::move(g)); }

/// Quotes and escapes a string literal for the specification language.
std::string quote_string(std::string_view s);

}  // namespace polymc
