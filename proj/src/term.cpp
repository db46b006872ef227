#include "heaplam/term.hpp"

#include <cctype>
#include <vector>

namespace heaplam {

TermPtr make_var(std::string name) {
  return std::make_shared<const Term>(
      Term{Term::Tag::Var, std::move(name), nullptr, nullptr});
}

TermPtr make_lam(std::string name, TermPtr body) {
  return std::make_shared<const Term>(
      Term{Term::Tag::Lam, std::move(name), std::move(body), nullptr});
}

TermPtr make_app(TermPtr fun, TermPtr arg) {
  return std::make_shared<const Term>(
      Term{Term::Tag::App, "", std::move(fun), std::move(arg)});
}

bool term_eq(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->tag != b->tag) return false;
  switch (a->tag) {
    case Term::Tag::Var: return a->name == b->name;
    case Term::Tag::Lam: return a->name == b->name && term_eq(a->fun, b->fun);
    case Term::Tag::App:
      return term_eq(a->fun, b->fun) && term_eq(a->arg, b->arg);
  }
  return false;
}

std::size_t term_size(const TermPtr& t) {
  switch (t->tag) {
    case Term::Tag::Var: return 1;
    case Term::Tag::Lam: return 1 + term_size(t->fun);
    case Term::Tag::App: return 1 + term_size(t->fun) + term_size(t->arg);
  }
  return 0;
}

ParseError::ParseError(std::size_t line_no, std::size_t col, const std::string& what)
    : std::runtime_error(what + " at line " + std::to_string(line_no) +
                         ", column " + std::to_string(col)),
      line(line_no),
      column(col) {}

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

struct Token {
  enum class Kind { Lambda, Dot, LParen, RParen, Ident, End };
  Kind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\n') {
        ++pos_;
        ++line_;
        col_ = 1;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++pos_;
        ++col_;
      } else {
        break;
      }
    }
    const std::size_t line = line_, col = col_;
    if (pos_ >= src_.size()) return {Token::Kind::End, "", line, col};
    const char c = src_[pos_];
    if (c == '\\') {
      advance(1);
      return {Token::Kind::Lambda, "\\", line, col};
    }
    // UTF-8 lambda
    if (static_cast<unsigned char>(c) == 0xCE && pos_ + 1 < src_.size() &&
        static_cast<unsigned char>(src_[pos_ + 1]) == 0xBB) {
      pos_ += 2;
      ++col_;
      return {Token::Kind::Lambda, "\xce\xbb", line, col};
    }
    if (c == '.') {
      advance(1);
      return {Token::Kind::Dot, ".", line, col};
    }
    if (c == '(') {
      advance(1);
      return {Token::Kind::LParen, "(", line, col};
    }
    if (c == ')') {
      advance(1);
      return {Token::Kind::RParen, ")", line, col};
    }
    if (ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && ident_char(src_[pos_])) advance(1);
      return {Token::Kind::Ident, std::string(src_.substr(start, pos_ - start)),
              line, col};
    }
    throw ParseError(line, col, std::string("unexpected character '") + c + "'");
  }

 private:
  void advance(std::size_t k) {
    pos_ += k;
    col_ += k;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src), tok_(lex_.next()) {}

  TermPtr parse() {
    TermPtr t = term();
    if (tok_.kind != Token::Kind::End)
      throw ParseError(tok_.line, tok_.column,
                       "unexpected '" + tok_.text + "'");
    return t;
  }

 private:
  void bump() { tok_ = lex_.next(); }

  TermPtr term() {
    if (tok_.kind == Token::Kind::Lambda) {
      bump();
      if (tok_.kind != Token::Kind::Ident)
        throw ParseError(tok_.line, tok_.column,
                         "expected identifier after lambda");
      std::string name = tok_.text;
      bump();
      if (tok_.kind != Token::Kind::Dot)
        throw ParseError(tok_.line, tok_.column, "expected '.' after binder");
      bump();
      return make_lam(std::move(name), term());
    }
    return app();
  }

  TermPtr app() {
    TermPtr t = atom();
    while (tok_.kind == Token::Kind::Ident || tok_.kind == Token::Kind::LParen)
      t = make_app(std::move(t), atom());
    return t;
  }

  TermPtr atom() {
    if (tok_.kind == Token::Kind::Ident) {
      TermPtr v = make_var(tok_.text);
      bump();
      return v;
    }
    if (tok_.kind == Token::Kind::LParen) {
      bump();
      TermPtr t = term();
      if (tok_.kind != Token::Kind::RParen)
        throw ParseError(tok_.line, tok_.column, "expected ')'");
      bump();
      return t;
    }
    throw ParseError(tok_.line, tok_.column, "expected a term");
  }

  Lexer lex_;
  Token tok_;
};

void print_rec(const TermPtr& t, std::string& out);

// Operands need parentheses unless they are plain variables.
void print_operand(const TermPtr& t, std::string& out) {
  if (t->tag == Term::Tag::Var) {
    out += t->name;
  } else {
    out += '(';
    print_rec(t, out);
    out += ')';
  }
}

// Operators only need parentheses around abstractions (application chains
// associate left).
void print_operator(const TermPtr& t, std::string& out) {
  if (t->tag == Term::Tag::Lam) {
    out += '(';
    print_rec(t, out);
    out += ')';
  } else {
    print_rec(t, out);
  }
}

void print_rec(const TermPtr& t, std::string& out) {
  switch (t->tag) {
    case Term::Tag::Var:
      out += t->name;
      break;
    case Term::Tag::Lam:
      out += '\\';
      out += t->name;
      out += '.';
      print_rec(t->fun, out);
      break;
    case Term::Tag::App:
      print_operator(t->fun, out);
      out += ' ';
      print_operand(t->arg, out);
      break;
  }
}

}  // namespace

TermPtr parse_term(std::string_view text) { return Parser(text).parse(); }

std::string print_term(const TermPtr& t) {
  std::string out;
  print_rec(t, out);
  return out;
}

IndexTermPtr make_ivar(std::uint64_t index) {
  return std::make_shared<const IndexTerm>(
      IndexTerm{Term::Tag::Var, index, nullptr, nullptr});
}

IndexTermPtr make_ilam(IndexTermPtr body) {
  return std::make_shared<const IndexTerm>(
      IndexTerm{Term::Tag::Lam, 0, std::move(body), nullptr});
}

IndexTermPtr make_iapp(IndexTermPtr fun, IndexTermPtr arg) {
  return std::make_shared<const IndexTerm>(
      IndexTerm{Term::Tag::App, 0, std::move(fun), std::move(arg)});
}

FreeVariableError::FreeVariableError(std::string var)
    : std::runtime_error("free variable " + var), name(std::move(var)) {}

namespace {

IndexTermPtr index_rec(const TermPtr& t, std::vector<const std::string*>& env) {
  switch (t->tag) {
    case Term::Tag::Var: {
      for (std::size_t i = env.size(); i-- > 0;)
        if (*env[i] == t->name)
          return make_ivar(static_cast<std::uint64_t>(env.size() - i));
      throw FreeVariableError(t->name);
    }
    case Term::Tag::Lam: {
      env.push_back(&t->name);
      IndexTermPtr body = index_rec(t->fun, env);
      env.pop_back();
      return make_ilam(std::move(body));
    }
    case Term::Tag::App:
      return make_iapp(index_rec(t->fun, env), index_rec(t->arg, env));
  }
  return nullptr;
}

}  // namespace

IndexTermPtr to_index(const TermPtr& t) {
  std::vector<const std::string*> env;
  return index_rec(t, env);
}

bool index_eq(const IndexTermPtr& a, const IndexTermPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->tag != b->tag) return false;
  switch (a->tag) {
    case Term::Tag::Var: return a->index == b->index;
    case Term::Tag::Lam: return index_eq(a->fun, b->fun);
    case Term::Tag::App:
      return index_eq(a->fun, b->fun) && index_eq(a->arg, b->arg);
  }
  return false;
}

std::size_t index_size(const IndexTermPtr& t) {
  switch (t->tag) {
    case Term::Tag::Var: return 1;
    case Term::Tag::Lam: return 1 + index_size(t->fun);
    case Term::Tag::App: return 1 + index_size(t->fun) + index_size(t->arg);
  }
  return 0;
}

bool alpha_eq(const TermPtr& a, const TermPtr& b) {
  return index_eq(to_index(a), to_index(b));
}

}  // namespace heaplam
