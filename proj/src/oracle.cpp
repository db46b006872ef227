#include "heaplam/oracle.hpp"

namespace heaplam {

namespace {

// Add d to every variable with index >= cutoff.  Unchanged subterms are
// shared, not rebuilt.
IndexTermPtr shift(std::int64_t d, std::uint64_t cutoff, const IndexTermPtr& t) {
  switch (t->tag) {
    case Term::Tag::Var:
      if (t->index < cutoff) return t;
      return make_ivar(
          static_cast<std::uint64_t>(static_cast<std::int64_t>(t->index) + d));
    case Term::Tag::Lam: {
      IndexTermPtr body = shift(d, cutoff + 1, t->fun);
      return body == t->fun ? t : make_ilam(std::move(body));
    }
    case Term::Tag::App: {
      IndexTermPtr f = shift(d, cutoff, t->fun);
      IndexTermPtr a = shift(d, cutoff, t->arg);
      return f == t->fun && a == t->arg
                 ? t
                 : make_iapp(std::move(f), std::move(a));
    }
  }
  return t;
}

// Replace variable j by s (s is re-shifted under each binder); all other
// indices stay as they are.
IndexTermPtr subst(const IndexTermPtr& t, std::uint64_t j,
                   const IndexTermPtr& s) {
  switch (t->tag) {
    case Term::Tag::Var:
      return t->index == j ? s : t;
    case Term::Tag::Lam: {
      IndexTermPtr body = subst(t->fun, j + 1, shift(1, 1, s));
      return body == t->fun ? t : make_ilam(std::move(body));
    }
    case Term::Tag::App: {
      IndexTermPtr f = subst(t->fun, j, s);
      IndexTermPtr a = subst(t->arg, j, s);
      return f == t->fun && a == t->arg
                 ? t
                 : make_iapp(std::move(f), std::move(a));
    }
  }
  return t;
}

// (lam body) applied to argument, the textbook way: substitute the
// up-shifted argument for index 1, then shift the result back down.
IndexTermPtr contract(const IndexTermPtr& lam, const IndexTermPtr& argument) {
  return shift(-1, 1, subst(lam->fun, 1, shift(1, 1, argument)));
}

}  // namespace

std::optional<IndexTermPtr> reduce_once(const IndexTermPtr& t) {
  switch (t->tag) {
    case Term::Tag::Var:
      return std::nullopt;
    case Term::Tag::Lam: {
      if (auto body = reduce_once(t->fun)) return make_ilam(std::move(*body));
      return std::nullopt;
    }
    case Term::Tag::App: {
      if (t->fun->tag == Term::Tag::Lam) return contract(t->fun, t->arg);
      if (auto f = reduce_once(t->fun)) return make_iapp(std::move(*f), t->arg);
      if (auto a = reduce_once(t->arg)) return make_iapp(t->fun, std::move(*a));
      return std::nullopt;
    }
  }
  return std::nullopt;
}

RefOutcome reference_normalize(IndexTermPtr t, std::uint64_t fuel) {
  std::uint64_t steps = 0;
  for (;;) {
    auto next = reduce_once(t);
    if (!next) return {true, std::move(t), steps};
    if (steps == fuel) return {false, std::move(t), steps};
    t = std::move(*next);
    ++steps;
  }
}

}  // namespace heaplam
