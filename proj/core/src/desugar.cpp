#include <fstream>
#include <set>
#include <sstream>

#include "polymc/error.hpp"
#include "polymc/spec_language.hpp"

namespace polymc {

namespace {

struct Builtin {
  std::string_view name;
  std::size_t arity;
};

constexpr Builtin kBuiltins[] = {
    {"through", 2}, {"ap", 1},    {"box", 1},  {"diamond", 1}, {"rho", 2},
    {"reach", 2},   {"sur", 2},   {"grow", 2}, {"not", 1},     {"tt", 0},
    {"true", 0},    {"ff", 0},    {"false", 0},
};

const Builtin* find_builtin(std::string_view name) {
  for (const Builtin& b : kBuiltins) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

std::string at(const Expr& e) {
  if (e.pos.line == 0) return {};
  return "line " + std::to_string(e.pos.line) + ":" + std::to_string(e.pos.column) + ": ";
}

struct Env {
  const std::map<std::string, Formula, std::less<>>* params = nullptr;
  std::size_t scope = 0;
  const std::string* defining = nullptr;  // name whose body is being checked
};

class Expander {
 public:
  explicit Expander(const Definitions& defs) : defs_(defs) {}

  Formula expand(const Expr& e, const Env& env) {
    switch (e.kind) {
      case Expr::Kind::String:
        throw Error(ErrorKind::InvalidArgument,
                    at(e) + "string literal " + quote_string(e.text) + " used as a formula");
      case Expr::Kind::Not: return !expand(e.args[0], env);
      case Expr::Kind::And: return expand(e.args[0], env) & expand(e.args[1], env);
      case Expr::Kind::Or: return expand(e.args[0], env) | expand(e.args[1], env);
      case Expr::Kind::Ident:
      case Expr::Kind::Call: return apply(e, env);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown expression");
  }

 private:
  Formula apply(const Expr& e, const Env& env) {
    const std::string& name = e.text;
    const bool is_call = e.kind == Expr::Kind::Call;

    if (env.params) {
      auto it = env.params->find(name);
      if (it != env.params->end()) {
        if (is_call) {
          throw Error(ErrorKind::ArityMismatch, at(e) + "parameter '" + name + "' takes no arguments");
        }
        return it->second;
      }
    }
    if (env.defining && *env.defining == name) {
      throw Error(ErrorKind::RecursionDetected, at(e) + "'" + name + "' refers to itself");
    }
    if (const Definition* def = defs_.find(name, env.scope)) {
      if (e.args.size() != def->params.size()) {
        throw Error(ErrorKind::ArityMismatch, at(e) + "'" + name + "' expects " +
                                                  std::to_string(def->params.size()) +
                                                  " argument(s), got " + std::to_string(e.args.size()));
      }
      std::map<std::string, Formula, std::less<>> bound;
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        bound.emplace(def->params[i], expand(e.args[i], env));
      }
      Env inner{&bound, def->scope, nullptr};
      return expand(def->body, inner);
    }
    const Builtin* b = find_builtin(name);
    if (!b) throw Error(ErrorKind::UnknownIdentifier, at(e) + "unknown identifier '" + name + "'");
    if (e.args.size() != b->arity) {
      throw Error(ErrorKind::ArityMismatch, at(e) + "'" + name + "' expects " +
                                                std::to_string(b->arity) + " argument(s), got " +
                                                std::to_string(e.args.size()));
    }
    if (name == "ap") {
      if (e.args[0].kind != Expr::Kind::String) {
        throw Error(ErrorKind::InvalidArgument, at(e) + "ap expects a string literal");
      }
      return Formula::atom(e.args[0].text);
    }
    if (name == "tt" || name == "true") return Formula::top();
    if (name == "ff" || name == "false") return !Formula::top();

    std::vector<Formula> a;
    for (const Expr& arg : e.args) a.push_back(expand(arg, env));
    if (name == "through") return Formula::gamma(a[0], a[1]);
    if (name == "box") return Formula::box(a[0]);
    if (name == "diamond") return !Formula::box(!a[0]);
    if (name == "not") return !a[0];
    if (name == "rho") return a[0] | Formula::gamma(a[1], a[0]);
    if (name == "reach") return a[0] | Formula::gamma(a[1], a[0]);
    if (name == "sur") {
      const Formula& x = a[0];
      const Formula& y = a[1];
      Formula outside = !(x | y);
      return x & !(outside | Formula::gamma(!y, outside));
    }
    // grow
    return a[0] | (a[1] & (a[0] | Formula::gamma(a[1], a[0])));
  }

  const Definitions& defs_;
};

}  // namespace

bool is_builtin(std::string_view name) { return find_builtin(name) != nullptr; }

const Definition* Definitions::find(std::string_view name) const {
  return find(name, defs_.size());
}

const Definition* Definitions::find(std::string_view name, std::size_t scope) const {
  auto it = index_.find(name);
  if (it == index_.end() || it->second >= scope) return nullptr;
  return &defs_[it->second];
}

void Definitions::add(Definition def) {
  if (index_.count(def.name)) {
    throw Error(ErrorKind::RedefinedName, "'" + def.name + "' is already defined");
  }
  def.scope = defs_.size();
  // Check the body now, with each parameter standing for an opaque formula.
  std::map<std::string, Formula, std::less<>> placeholders;
  for (const std::string& p : def.params) placeholders.emplace(p, Formula::atom(p));
  Env env{&placeholders, def.scope, &def.name};
  Expander(*this).expand(def.body, env);

  index_.emplace(def.name, defs_.size());
  defs_.push_back(std::move(def));
}

Formula desugar(const Expr& expr, const Definitions& defs) {
  return Expander(defs).expand(expr, Env{nullptr, defs.size(), nullptr});
}

namespace {

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Elaborator {
 public:
  explicit Elaborator(const SourceReader& reader) : reader_(reader) {}

  void process(const Program& program, const std::filesystem::path& file, bool imported) {
    const std::filesystem::path dir = file.parent_path();
    for (const Statement& st : program.statements) {
      try {
        if (const auto* load = std::get_if<LoadCommand>(&st.command)) {
          if (imported) throw Error(ErrorKind::InvalidArgument, "imported files may not load a model");
          if (result.model_path) throw Error(ErrorKind::RedefinedName, "a model is already loaded");
          result.model_path = (dir / load->path).lexically_normal();
        } else if (const auto* imp = std::get_if<ImportCommand>(&st.command)) {
          import_file((dir / imp->path).lexically_normal());
        } else if (const auto* let = std::get_if<LetCommand>(&st.command)) {
          defs_.add(Definition{let->name, let->params, let->body, 0});
        } else if (const auto* save = std::get_if<SaveCommand>(&st.command)) {
          if (imported) throw Error(ErrorKind::InvalidArgument, "imported files may not save results");
          result.saves.emplace_back(save->label, desugar(save->body, defs_));
        }
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::ImportCycle) throw;
        throw Error(e.kind(), file.string() + ":" + std::to_string(st.pos.line) + ": " + e.detail());
      }
    }
  }

  void run(const Program& program, const std::filesystem::path& file) {
    stack_.push_back(std::filesystem::weakly_canonical(file).string());
    process(program, file, false);
  }

  ElaboratedSpec result;

 private:
  void import_file(const std::filesystem::path& path) {
    const std::string key = std::filesystem::weakly_canonical(path).string();
    for (const std::string& open : stack_) {
      if (open == key) throw Error(ErrorKind::ImportCycle, "import cycle through '" + path.string() + "'");
    }
    if (done_.count(key)) return;
    std::string text = reader_ ? reader_(path) : read_text_file(path);
    Program program = parse_spec(text, path.string());
    stack_.push_back(key);
    process(program, path, true);
    stack_.pop_back();
    done_.insert(key);
  }

  const SourceReader& reader_;
  Definitions defs_;
  std::vector<std::string> stack_;
  std::set<std::string> done_;
};

}  // namespace

ElaboratedSpec elaborate(const Program& program, const std::filesystem::path& spec_path,
                         const SourceReader& reader) {
  Elaborator el(reader);
  el.run(program, spec_path);
  return std::move(el.result);
}

ElaboratedSpec load_spec(const std::filesystem::path& path) {
  std::string text = read_text_file(path);
  Program program = parse_spec(text, path.string());
  return elaborate(program, path);
}

}  // namespace polymc
