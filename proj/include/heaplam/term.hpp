#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace heaplam {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Frontend syntax tree.  The children mirror the machine cells: fun holds
// an abstraction body or an application operator, arg an operand.
struct Term {
  enum class Tag { Var, Lam, App };
  Tag tag;
  std::string name;  // Var: the variable; Lam: the binder
  TermPtr fun;
  TermPtr arg;
};

TermPtr make_var(std::string name);
TermPtr make_lam(std::string name, TermPtr body);
TermPtr make_app(TermPtr fun, TermPtr arg);

// Structural equality, names included.
bool term_eq(const TermPtr& a, const TermPtr& b);

std::size_t term_size(const TermPtr& t);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line;
  std::size_t column;
};

// Grammar:
//   term := abs | app
//   abs  := ('\' | 'λ') IDENT '.' term
//   app  := atom {atom}
//   atom := IDENT | '(' term ')'
// Application associates left; an abstraction body extends as far right as
// possible.  Identifiers are a letter or underscore followed by letters,
// digits, underscores or primes.  Whitespace is insignificant.
TermPtr parse_term(std::string_view text);

// Minimal parentheses, '\' for lambda.  parse_term(print_term(t)) == t.
std::string print_term(const TermPtr& t);

// Nameless form for alpha comparisons: a variable carries the distance to
// its binder, innermost = 1.
struct IndexTerm;
using IndexTermPtr = std::shared_ptr<const IndexTerm>;

struct IndexTerm {
  Term::Tag tag;
  std::uint64_t index = 0;  // Var only
  IndexTermPtr fun;         // Lam: body; App: operator
  IndexTermPtr arg;         // App: operand
};

IndexTermPtr make_ivar(std::uint64_t index);
IndexTermPtr make_ilam(IndexTermPtr body);
IndexTermPtr make_iapp(IndexTermPtr fun, IndexTermPtr arg);

class FreeVariableError : public std::runtime_error {
 public:
  explicit FreeVariableError(std::string name);
  std::string name;
};

// Standard nameless conversion; throws FreeVariableError on open terms.
IndexTermPtr to_index(const TermPtr& t);

bool index_eq(const IndexTermPtr& a, const IndexTermPtr& b);

std::size_t index_size(const IndexTermPtr& t);

// True iff a and b are equal up to renaming of bound variables; both must
// be closed.
bool alpha_eq(const TermPtr& a, const TermPtr& b);

}  // namespace heaplam
