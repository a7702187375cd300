#include <set>

#include "polymc/error.hpp"
#include "polymc/spec_language.hpp"

namespace polymc {

Expr Expr::ident(std::string name, SourcePos pos) {
  return Expr{Kind::Ident, std::move(name), {}, pos};
}
Expr Expr::string(std::string value, SourcePos pos) {
  return Expr{Kind::String, std::move(value), {}, pos};
}
Expr Expr::call(std::string callee, std::vector<Expr> args, SourcePos pos) {
  return Expr{Kind::Call, std::move(callee), std::move(args), pos};
}
Expr Expr::negation(Expr e, SourcePos pos) {
  std::vector<Expr> args;
  args.push_back(std::move(e));
  return Expr{Kind::Not, {}, std::move(args), pos};
}
Expr Expr::binary(Kind kind, Expr lhs, Expr rhs, SourcePos pos) {
  std::vector<Expr> args;
  args.push_back(std::move(lhs));
  args.push_back(std::move(rhs));
  return Expr{kind, {}, std::move(args), pos};
}

bool operator==(const Expr& a, const Expr& b) {
  return a.kind == b.kind && a.text == b.text && a.args == b.args;
}

namespace {

enum class Tok { Ident, String, LParen, RParen, Comma, Equals, Bang, Amp, Pipe, End };

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::String: return "string literal";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Equals: return "'='";
    case Tok::Bang: return "'!'";
    case Tok::Amp: return "'&'";
    case Tok::Pipe: return "'|'";
    case Tok::End: return "end of input";
  }
  return "token";
}

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
  bool line_start;  // first token on its line
};

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

bool is_keyword(std::string_view s) {
  return s == "load" || s == "import" || s == "let" || s == "save";
}

class Lexer {
 public:
  Lexer(std::string_view text, const std::string& source) : text_(text), source_(source) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    bool line_start = true;
    while (true) {
      // whitespace and comments
      while (i_ < text_.size()) {
        char c = text_[i_];
        if (c == '\n') {
          line_start = true;
          advance();
        } else if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
          advance();
        } else if (c == '/' && i_ + 1 < text_.size() && text_[i_ + 1] == '/') {
          while (i_ < text_.size() && text_[i_] != '\n') advance();
        } else {
          break;
        }
      }
      SourcePos pos{line_, col_};
      if (i_ >= text_.size()) {
        out.push_back({Tok::End, {}, pos, true});
        return out;
      }
      char c = text_[i_];
      Token tok{Tok::End, {}, pos, line_start};
      line_start = false;
      if (is_ident_start(c)) {
        std::size_t start = i_;
        while (i_ < text_.size() && is_ident_char(text_[i_])) advance();
        tok.kind = Tok::Ident;
        tok.text = std::string(text_.substr(start, i_ - start));
      } else if (c == '"') {
        tok.kind = Tok::String;
        tok.text = read_string(pos);
      } else {
        switch (c) {
          case '(': tok.kind = Tok::LParen; break;
          case ')': tok.kind = Tok::RParen; break;
          case ',': tok.kind = Tok::Comma; break;
          case '=': tok.kind = Tok::Equals; break;
          case '!': tok.kind = Tok::Bang; break;
          case '&': tok.kind = Tok::Amp; break;
          case '|': tok.kind = Tok::Pipe; break;
          default:
            throw Error(ErrorKind::SyntaxError, where(pos) + "unexpected character '" +
                                                    std::string(1, c) + "'");
        }
        advance();
      }
      out.push_back(std::move(tok));
    }
  }

  std::string where(SourcePos p) const {
    return source_ + ":" + std::to_string(p.line) + ":" + std::to_string(p.column) + ": ";
  }

 private:
  void advance() {
    if (text_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  std::string read_string(SourcePos pos) {
    advance();  // opening quote
    std::string out;
    while (true) {
      if (i_ >= text_.size() || text_[i_] == '\n') {
        throw Error(ErrorKind::SyntaxError, where(pos) + "unterminated string literal");
      }
      char c = text_[i_];
      advance();
      if (c == '"') return out;
      if (c == '\\') {
        if (i_ >= text_.size()) break;
        char e = text_[i_];
        advance();
        switch (e) {
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          default:
            throw Error(ErrorKind::SyntaxError, where(pos) + "unknown escape '\\" +
                                                    std::string(1, e) + "'");
        }
      } else {
        out += c;
      }
    }
    throw Error(ErrorKind::SyntaxError, where(pos) + "unterminated string literal");
  }

  std::string_view text_;
  const std::string& source_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Lexer& lexer)
      : toks_(std::move(tokens)), lexer_(lexer) {}

  Program run() {
    Program program;
    std::set<std::string, std::less<>> lets;
    std::set<std::string, std::less<>> labels;
    while (peek().kind != Tok::End) {
      const Token& head = peek();
      if (head.kind != Tok::Ident) fail(head, std::string("expected a command, found ") + describe(head.kind));
      if (!head.line_start && !program.statements.empty()) {
        fail(head, "unexpected " + quoted(head) + " after the end of the previous command");
      }
      Statement st;
      st.pos = head.pos;
      if (head.text == "load") {
        next();
        LoadCommand cmd;
        if (peek().kind == Tok::Ident) {
          cmd.name = expect_name("model name").text;
          expect(Tok::Equals);
        }
        cmd.path = expect(Tok::String).text;
        st.command = std::move(cmd);
      } else if (head.text == "import") {
        next();
        st.command = ImportCommand{expect(Tok::String).text};
      } else if (head.text == "let") {
        next();
        const Token& name = expect_name("definition name");
        LetCommand cmd;
        cmd.name = name.text;
        if (!lets.insert(cmd.name).second) {
          throw Error(ErrorKind::RedefinedName, lexer_.where(name.pos) + "'" + cmd.name + "' is already defined");
        }
        if (peek().kind == Tok::LParen) {
          next();
          std::set<std::string, std::less<>> seen;
          if (peek().kind != Tok::RParen) {
            while (true) {
              const Token& p = expect_name("parameter name");
              if (!seen.insert(p.text).second) {
                throw Error(ErrorKind::RedefinedName,
                            lexer_.where(p.pos) + "parameter '" + p.text + "' repeated");
              }
              cmd.params.push_back(p.text);
              if (peek().kind != Tok::Comma) break;
              next();
            }
          }
          expect(Tok::RParen);
        }
        expect(Tok::Equals);
        cmd.body = expression();
        st.command = std::move(cmd);
      } else if (head.text == "save") {
        next();
        const Token& label = expect(Tok::String);
        SaveCommand cmd;
        cmd.label = label.text;
        if (!labels.insert(cmd.label).second) {
          throw Error(ErrorKind::RedefinedName,
                      lexer_.where(label.pos) + "save label \"" + cmd.label + "\" used twice");
        }
        cmd.body = expression();
        st.command = std::move(cmd);
      } else {
        throw Error(ErrorKind::UnknownCommand,
                    lexer_.where(head.pos) + "unknown command '" + head.text + "'");
      }
      program.statements.push_back(std::move(st));
      if (peek().kind != Tok::End && !peek().line_start) {
        fail(peek(), "unexpected " + quoted(peek()) + " after the end of the command");
      }
    }
    return program;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw Error(ErrorKind::SyntaxError, lexer_.where(t.pos) + msg);
  }

  static std::string quoted(const Token& t) {
    if (t.kind == Tok::Ident) return "'" + t.text + "'";
    if (t.kind == Tok::String) return "string literal";
    return describe(t.kind);
  }

  const Token& expect(Tok kind) {
    if (peek().kind != kind) {
      fail(peek(), std::string("expected ") + describe(kind) + ", found " + quoted(peek()));
    }
    return next();
  }

  const Token& expect_name(const char* what) {
    const Token& t = peek();
    if (t.kind != Tok::Ident) fail(t, std::string("expected ") + what + ", found " + quoted(t));
    if (is_keyword(t.text)) fail(t, "'" + t.text + "' is a reserved word");
    return next();
  }

  Expr expression() {
    Expr lhs = conjunction();
    while (peek().kind == Tok::Pipe) {
      SourcePos p = next().pos;
      lhs = Expr::binary(Expr::Kind::Or, std::move(lhs), conjunction(), p);
    }
    return lhs;
  }

  Expr conjunction() {
    Expr lhs = unary();
    while (peek().kind == Tok::Amp) {
      SourcePos p = next().pos;
      lhs = Expr::binary(Expr::Kind::And, std::move(lhs), unary(), p);
    }
    return lhs;
  }

  Expr unary() {
    if (peek().kind == Tok::Bang) {
      SourcePos p = next().pos;
      return Expr::negation(unary(), p);
    }
    return primary();
  }

  Expr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::String: {
        next();
        return Expr::string(t.text, t.pos);
      }
      case Tok::LParen: {
        next();
        Expr e = expression();
        expect(Tok::RParen);
        return e;
      }
      case Tok::Ident: {
        if (is_keyword(t.text)) fail(t, "expected an expression, found '" + t.text + "'");
        next();
        if (peek().kind != Tok::LParen) return Expr::ident(t.text, t.pos);
        next();
        std::vector<Expr> args;
        if (peek().kind != Tok::RParen) {
          while (true) {
            args.push_back(expression());
            if (peek().kind != Tok::Comma) break;
            next();
          }
        }
        expect(Tok::RParen);
        return Expr::call(t.text, std::move(args), t.pos);
      }
      default:
        fail(t, std::string("expected an expression, found ") + quoted(t));
    }
  }

  std::vector<Token> toks_;
  const Lexer& lexer_;
  std::size_t pos_ = 0;
};

}  // namespace

Program parse_spec(std::string_view text, const std::string& source) {
  Lexer lexer(text, source);
  Parser parser(lexer.run(), lexer);
  return parser.run();
}

}  // namespace polymc
