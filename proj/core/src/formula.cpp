#include "polymc/formula.hpp"

#include <algorithm>
#include <functional>

#include "polymc/error.hpp"

namespace polymc {

std::string_view to_string(FormulaKind kind) noexcept {
  switch (kind) {
    case FormulaKind::Top: return "Top";
    case FormulaKind::Atom: return "Atom";
    case FormulaKind::Not: return "Not";
    case FormulaKind::And: return "And";
    case FormulaKind::Or: return "Or";
    case FormulaKind::Box: return "Box";
    case FormulaKind::Gamma: return "Gamma";
  }
  return "?";
}

int arity(FormulaKind kind) noexcept {
  switch (kind) {
    case FormulaKind::Top:
    case FormulaKind::Atom: return 0;
    case FormulaKind::Not:
    case FormulaKind::Box: return 1;
    default: return 2;
  }
}

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

Formula Formula::make(FormulaKind kind, std::string atom, std::vector<Formula> children) {
  std::size_t h = mix(0, static_cast<std::size_t>(kind));
  std::size_t depth = 0;
  if (kind == FormulaKind::Atom) h = mix(h, std::hash<std::string>{}(atom));
  for (const Formula& c : children) {
    h = mix(h, c.hash());
    depth = std::max(depth, c.depth());
  }
  if (!children.empty()) ++depth;
  return Formula(std::make_shared<const Node>(
      Node{kind, std::move(atom), std::move(children), h, depth}));
}

Formula Formula::top() {
  static const Formula t = make(FormulaKind::Top, {}, {});
  return t;
}
Formula Formula::atom(std::string name) { return make(FormulaKind::Atom, std::move(name), {}); }
Formula Formula::negation(Formula f) { return make(FormulaKind::Not, {}, {std::move(f)}); }
Formula Formula::conjunction(Formula f, Formula g) {
  return make(FormulaKind::And, {}, {std::move(f), std::move(g)});
}
Formula Formula::disjunction(Formula f, Formula g) {
  return make(FormulaKind::Or, {}, {std::move(f), std::move(g)});
}
Formula Formula::box(Formula f) { return make(FormulaKind::Box, {}, {std::move(f)}); }
Formula Formula::gamma(Formula f, Formula g) {
  return make(FormulaKind::Gamma, {}, {std::move(f), std::move(g)});
}

FormulaKind Formula::kind() const noexcept { return node_->kind; }
const std::string& Formula::atom_name() const noexcept { return node_->atom; }
std::size_t Formula::child_count() const noexcept { return node_->children.size(); }
const Formula& Formula::child(std::size_t i) const {
  if (i >= node_->children.size()) throw Error(ErrorKind::IndexError, "formula child index");
  return node_->children[i];
}
std::size_t Formula::hash() const noexcept { return node_->hash; }
std::size_t Formula::depth() const noexcept { return node_->depth; }

bool operator==(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind || x.atom != y.atom) return false;
  return x.children == y.children;
}

std::string quote_string(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

namespace {

// 3: atoms, calls, negation; 2: &; 1: |
int precedence(FormulaKind k) {
  switch (k) {
    case FormulaKind::Or: return 1;
    case FormulaKind::And: return 2;
    default: return 3;
  }
}

void print(const Formula& f, std::string& out, int min_prec) {
  const bool parens = precedence(f.kind()) < min_prec;
  if (parens) out += '(';
  switch (f.kind()) {
    case FormulaKind::Top: out += "tt"; break;
    case FormulaKind::Atom: out += "ap(" + quote_string(f.atom_name()) + ")"; break;
    case FormulaKind::Not:
      out += '!';
      print(f.child(0), out, 3);
      break;
    case FormulaKind::And:
    case FormulaKind::Or: {
      const int p = precedence(f.kind());
      print(f.child(0), out, p);
      out += f.kind() == FormulaKind::And ? " & " : " | ";
      // Left associative: a right operand of equal precedence needs brackets.
      print(f.child(1), out, p + 1);
      break;
    }
    case FormulaKind::Box:
      out += "box(";
      print(f.child(0), out, 0);
      out += ')';
      break;
    case FormulaKind::Gamma:
      out += "through(";
      print(f.child(0), out, 0);
      out += ", ";
      print(f.child(1), out, 0);
      out += ')';
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string Formula::to_string() const {
  std::string out;
  print(*this, out, 0);
  return out;
}

}  // namespace polymc
