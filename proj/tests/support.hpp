// Shared test fixtures: hand-built machine states for the reference memory
// layouts, lambda-term fixtures, and a deterministic random-term generator.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "heaplam/machine.hpp"
#include "heaplam/term.hpp"

namespace heaplam::testing {

// Memory image of the apply combinator \x.\y.(x y) at blocks 1..5:
//   1 0 0 2 0
//   2 1 0 3 0
//   3 2 0 4 5
//   4 3 0 0 1
//   5 3 0 0 2
// Blocks above 5 (if any) stay on the free list.
inline Machine apply_machine(Addr n = 5) {
  Machine m(n);
  m.reset();
  m.node(1) = Node{0, 0, 2, 0};
  m.node(2) = Node{1, 0, 3, 0};
  m.node(3) = Node{2, 0, 4, 5};
  m.node(4) = Node{3, 0, 0, 1};
  m.node(5) = Node{3, 0, 0, 2};
  m.freehead = n > 5 ? 6 : 0;
  m.expr = 1;
  return m;
}

// Memory image of (\s.s s) (\s.s s) at blocks 1..9 in preorder:
// 1 = root application, 2 = left abstraction, 3 = its body (s s) with
// variables 4 and 5, and 6..9 the same for the right operand.
inline Machine omega_machine(Addr n = 9) {
  Machine m(n);
  m.reset();
  m.node(1) = Node{0, 0, 2, 6};
  m.node(2) = Node{1, 0, 3, 0};
  m.node(3) = Node{2, 0, 4, 5};
  m.node(4) = Node{3, 0, 0, 2};
  m.node(5) = Node{3, 0, 0, 2};
  m.node(6) = Node{1, 0, 7, 0};
  m.node(7) = Node{6, 0, 8, 9};
  m.node(8) = Node{7, 0, 0, 6};
  m.node(9) = Node{7, 0, 0, 6};
  m.freehead = n > 9 ? 10 : 0;
  m.expr = 1;
  return m;
}

inline constexpr const char* kApply = "\\x.\\y.x y";
inline constexpr const char* kOmega = "(\\s.s s) (\\s.s s)";
inline constexpr const char* kIdentity = "\\x.x";
inline constexpr const char* kConst = "\\x.\\y.x";
inline constexpr const char* kS = "\\a.\\b.\\c.a c (b c)";
inline constexpr const char* kPlus = "\\m.\\n.\\f.\\x.m f (n f x)";
inline constexpr const char* kTimes = "\\m.\\n.\\f.m (n f)";
inline constexpr const char* kPred =
    "\\n.\\f.\\x.n (\\g.\\h.h (g f)) (\\u.x) (\\v.v)";
inline constexpr const char* kTrue = "\\t.\\f.t";
inline constexpr const char* kFalse = "\\t.\\f.f";

// \f.\x.f (f (... (f x)))
inline std::string church(unsigned n) {
  std::string body = "x";
  for (unsigned i = 0; i < n; ++i) body = i == 0 ? "f " + body : "f (" + body + ")";
  return "\\f.\\x." + body;
}

inline std::string paren(const std::string& s) { return "(" + s + ")"; }

// Deterministic generator of random closed terms.
class TermGen {
 public:
  explicit TermGen(std::uint64_t seed) : rng_(seed) {}

  TermPtr closed(std::size_t max_size) {
    std::uniform_int_distribution<std::size_t> d(3, max_size);
    fresh_ = 0;
    std::vector<std::string> env;
    return gen(d(rng_), env);
  }

  // Random application tree over a small combinator pool; these reduce a
  // lot more than uniformly random trees and sometimes diverge.
  TermPtr pooled(std::size_t max_size) {
    static const std::vector<std::string> pool = {
        kIdentity,
        kConst,
        kS,
        "\\x.x x",
        "\\f.\\x.x",
        "\\f.\\x.f x",
        "\\f.\\x.f (f x)",
        "\\n.\\f.\\x.f (n f x)",  // successor
        kPlus,
        kTimes,
    };
    for (int attempt = 0; attempt < 16; ++attempt) {
      const std::size_t parts = 2 + rng_() % 3;
      TermPtr t = parse_term(pool[rng_() % pool.size()]);
      for (std::size_t i = 1; i < parts; ++i)
        t = make_app(t, parse_term(pool[rng_() % pool.size()]));
      if (term_size(t) <= max_size) return t;
    }
    return parse_term("\\x.x x");
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  TermPtr gen(std::size_t budget, std::vector<std::string>& env) {
    if (budget >= 3) {
      const std::uint64_t r = rng_() % 100;
      if (!env.empty() && r < 30) return make_var(env[rng_() % env.size()]);
      if (r < 60) return lam(budget, env);
      const std::size_t left = 1 + rng_() % (budget - 2);
      TermPtr f = gen(left, env);
      TermPtr a = gen(budget - 1 - left, env);
      return make_app(std::move(f), std::move(a));
    }
    if (budget == 2 && (env.empty() || rng_() % 2 == 0)) return lam(budget, env);
    if (!env.empty()) return make_var(env[rng_() % env.size()]);
    return lam(2, env);
  }

  TermPtr lam(std::size_t budget, std::vector<std::string>& env) {
    env.push_back("x" + std::to_string(++fresh_));
    TermPtr body = gen(budget > 1 ? budget - 1 : 1, env);
    TermPtr t = make_lam(env.back(), std::move(body));
    env.pop_back();
    return t;
  }

  std::mt19937_64 rng_;
  std::uint64_t fresh_ = 0;
};

}  // namespace heaplam::testing
