#include "polymc/spec_language.hpp"

namespace polymc {

namespace {

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Or: return 1;
    case Expr::Kind::And: return 2;
    default: return 3;
  }
}

void print(const Expr& e, std::string& out, int min_prec) {
  const bool parens = precedence(e.kind) < min_prec;
  if (parens) out += '(';
  switch (e.kind) {
    case Expr::Kind::Ident: out += e.text; break;
    case Expr::Kind::String: out += quote_string(e.text); break;
    case Expr::Kind::Call:
      out += e.text;
      out += '(';
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += ", ";
        print(e.args[i], out, 0);
      }
      out += ')';
      break;
    case Expr::Kind::Not:
      out += '!';
      print(e.args[0], out, 3);
      break;
    case Expr::Kind::And:
    case Expr::Kind::Or: {
      const int p = precedence(e.kind);
      print(e.args[0], out, p);
      out += e.kind == Expr::Kind::And ? " & " : " | ";
      print(e.args[1], out, p + 1);
      break;
    }
  }
  if (parens) out += ')';
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string print_expr(const Expr& e) {
  std::string out;
  print(e, out, 0);
  return out;
}

std::string print_program(const Program& program) {
  std::string out;
  for (const Statement& st : program.statements) {
    std::visit(overloaded{
                   [&](const LoadCommand& c) {
                     out += "load ";
                     if (!c.name.empty()) out += c.name + " = ";
                     out += quote_string(c.path);
                   },
                   [&](const ImportCommand& c) { out += "import " + quote_string(c.path); },
                   [&](const LetCommand& c) {
                     out += "let " + c.name;
                     if (!c.params.empty()) {
                       out += '(';
                       for (std::size_t i = 0; i < c.params.size(); ++i) {
                         if (i) out += ", ";
                         out += c.params[i];
                       }
                       out += ')';
                     }
                     out += " = " + print_expr(c.body);
                   },
                   [&](const SaveCommand& c) {
                     out += "save " + quote_string(c.label) + " " + print_expr(c.body);
                   },
               },
               st.command);
    out += '\n';
  }
  return out;
}

}  // namespace polymc
