#pragma once

// The specification language: `load`, `import`, `let` and `save` commands over
// expressions built from identifiers, applications, string literals and the
// infix operators `!`, `&`, `|`.

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "polymc/formula.hpp"

namespace polymc {

struct SourcePos {
  int line = 0;
  int column = 0;
};

struct Expr {
  enum class Kind { Ident, Call, String, Not, And, Or };

  Kind kind = Kind::Ident;
  std::string text;  // identifier, callee or string contents
  std::vector<Expr> args;
  SourcePos pos;

  static Expr ident(std::string name, SourcePos pos = {});
  static Expr string(std::string value, SourcePos pos = {});
  static Expr call(std::string callee, std::vector<Expr> args, SourcePos pos = {});
  static Expr negation(Expr e, SourcePos pos = {});
  static Expr binary(Kind kind, Expr lhs, Expr rhs, SourcePos pos = {});

  /// Structural equality; source positions are ignored.
  friend bool operator==(const Expr& a, const Expr& b);
};

struct LoadCommand {
  std::string name;  // may be empty
  std::string path;
  friend bool operator==(const LoadCommand&, const LoadCommand&) = default;
};

struct ImportCommand {
  std::string path;
  friend bool operator==(const ImportCommand&, const ImportCommand&) = default;
};

struct LetCommand {
  std::string name;
  std::vector<std::string> params;
  Expr body;
  friend bool operator==(const LetCommand&, const LetCommand&) = default;
};

struct SaveCommand {
  std::string label;
  Expr body;
  friend bool operator==(const SaveCommand&, const SaveCommand&) = default;
};

using Command = std::variant<LoadCommand, ImportCommand, LetCommand, SaveCommand>;

struct Statement {
  Command command;
  SourcePos pos;
  friend bool operator==(const Statement& a, const Statement& b) { return a.command == b.command; }
};

struct Program {
  std::vector<Statement> statements;
  friend bool operator==(const Program&, const Program&) = default;
};

/// Parses a whole specification. Expressions may continue over several lines;
/// a command ends where the next token cannot extend its expression.
/// Throws SyntaxError, UnknownCommand or RedefinedName (a user definition
/// given twice, or a repeated save label). `source` names the text in messages.
Program parse_spec(std::string_view text, const std::string& source = "<spec>");

/// Canonical text: one command per line, minimal parentheses.
std::string print_expr(const Expr& e);
std::string print_program(const Program& program);

/// A user definition visible during expansion.
struct Definition {
  std::string name;
  std::vector<std::string> params;
  Expr body;
  /// Number of definitions visible where this one was declared.
  std::size_t scope = 0;
};

/// Ordered user definitions; later entries may refer to earlier ones only.
class Definitions {
 public:
  /// Throws RedefinedName if `def.name` is already defined. Checks the body
  /// eagerly (unknown identifiers, arities, self reference).
  void add(Definition def);

  const Definition* find(std::string_view name) const;
  const Definition* find(std::string_view name, std::size_t scope) const;
  std::size_t size() const noexcept { return defs_.size(); }

 private:
  std::vector<Definition> defs_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// True for the names of the built-in operators (`through`, `ap`, `box`,
/// `diamond`, `rho`, `reach`, `sur`, `grow`, `not`, `tt`, `true`, `ff`, `false`).
bool is_builtin(std::string_view name);

/// Expands user definitions and built-ins into a core formula. Arguments are
/// substituted by name; parameters shadow every outer name.
/// Throws UnknownIdentifier, ArityMismatch, RecursionDetected or
/// InvalidArgument (string literal used as a formula, `ap` without a literal).
Formula desugar(const Expr& expr, const Definitions& defs);

struct ElaboratedSpec {
  std::optional<std::filesystem::path> model_path;  // resolved against the spec
  std::vector<std::pair<std::string, Formula>> saves;
};

using SourceReader = std::function<std::string(const std::filesystem::path&)>;

/// Resolves imports (relative to the importing file; cycles raise ImportCycle,
/// a file imported twice is read once), checks every definition and expands
/// every save. Imported files may contain only `let` and `import`.
ElaboratedSpec elaborate(const Program& program, const std::filesystem::path& spec_path,
                         const SourceReader& reader = {});

/// Reads, parses and elaborates the file at `path`.
ElaboratedSpec load_spec(const std::filesystem::path& path);

}  // namespace polymc
