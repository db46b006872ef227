#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "heaplam/codec.hpp"
#include "heaplam/copy.hpp"
#include "heaplam/validate.hpp"
#include "heaplam/walk.hpp"
#include "support.hpp"

using namespace heaplam;
using namespace heaplam::testing;

namespace {

// Collect the free list into a set for in-use scans.
std::vector<char> free_set(const Machine& m) {
  std::vector<char> is_free(m.size() + 1, 0);
  for (Addr a = m.freehead; a != 0; a = m.node(a).copy) is_free[a] = 1;
  return is_free;
}

}  // namespace

TEST_CASE("copy of the inner abstraction of the apply tree") {
  // \y.(x y) copied with x bound outside the region: the external binder is
  // kept, the internal one is remapped to the fresh abstraction
  Machine m = apply_machine(9);
  const Addr r = copy(m, 2, 0);
  CHECK(r == 6);
  CHECK(m.node(6).par == 0);
  CHECK(m.node(6).func == 7);
  CHECK(m.node(6).arg == 0);
  CHECK(m.node(7).par == 6);
  CHECK(m.node(7).func == 8);
  CHECK(m.node(7).arg == 9);
  CHECK(m.node(8).par == 7);
  CHECK(m.node(8).func == 0);
  CHECK(m.node(8).arg == 1);  // x still bound by the original outer lambda
  CHECK(m.node(9).par == 7);
  CHECK(m.node(9).func == 0);
  CHECK(m.node(9).arg == 6);  // y remapped to the fresh abstraction
  // mapping cells restored
  CHECK(m.node(2).copy == 0);
  CHECK(m.node(3).copy == 0);
  // source untouched otherwise
  CHECK(m.node(2).func == 3);
  CHECK(m.node(4).arg == 1);
  CHECK(m.node(5).arg == 2);
  CHECK(m.free_count() == 0);
}

TEST_CASE("copy of a single externally bound variable") {
  Machine m = apply_machine(9);
  const Addr r = copy(m, 4, 0);
  CHECK(r == 6);
  CHECK(m.kind(6) == NodeKind::Variable);
  CHECK(m.node(6).arg == 1);  // binder kept verbatim
  CHECK(m.free_count() == 3);
}

TEST_CASE("copy of a free leaf stays a free leaf") {
  Machine m(4);
  m.reset();
  m.node(1) = Node{0, 0, 0, 0};
  m.freehead = 2;
  m.expr = 1;
  const Addr r = copy(m, 1, 0);
  CHECK(m.kind(r) == NodeKind::FreeLeaf);
}

TEST_CASE("copy takes exactly n blocks and puts none") {
  TermGen gen(11);
  for (int i = 0; i < 60; ++i) {
    Machine m(256);
    m.reset();
    const Addr root = encode(m, gen.closed(40));
    const Addr n = subtree_size(m, root);
    const Addr before = m.free_count();
    const Addr c = copy(m, root, 0);
    CHECK(m.free_count() == before - n);
    CHECK(subtree_size(m, c) == n);
  }
}

TEST_CASE("copy of a closed tree is alpha-equivalent to the source") {
  TermGen gen(12);
  for (int i = 0; i < 60; ++i) {
    Machine m(256);
    m.reset();
    const TermPtr t = gen.closed(40);
    const Addr root = encode(m, t);
    const Addr c = copy(m, root, 0);
    CHECK(!validate(m, c).has_value());
    CHECK(!validate(m, root).has_value());
    CHECK(alpha_eq(decode(m, c), decode(m, root)));
    CHECK(alpha_eq(decode(m, c), t));
  }
}

TEST_CASE("copy leaves no nonzero copy cell behind") {
  TermGen gen(13);
  for (int i = 0; i < 40; ++i) {
    Machine m(256);
    m.reset();
    const Addr root = encode(m, gen.closed(30));
    (void)copy(m, root, 0);
    const auto is_free = free_set(m);
    for (Addr a = 1; a <= m.size(); ++a)
      if (!is_free[a]) CHECK(m.node(a).copy == 0);
  }
}

TEST_CASE("copies are structurally isomorphic with correct binder targets") {
  TermGen gen(14);
  for (int i = 0; i < 40; ++i) {
    Machine m(512);
    m.reset();
    const Addr root = encode(m, gen.closed(40));
    // copy a random subtree, not just the closed root
    std::vector<Addr> nodes;
    {
      nodes.push_back(root);
      WalkState s = walk_init(root, 0);
      for (;;) {
        const StepKind k = walk(m, s);
        if (k == StepKind::Finish) break;
        if (k == StepKind::FunctionPart || k == StepKind::ArgumentPart)
          nodes.push_back(s.cur);
      }
    }
    const Addr src = nodes[gen.rng()() % nodes.size()];
    const Addr c = copy(m, src, 0);

    // parallel walks: same step kinds, kinds of nodes match, and binders
    // map old->new inside the region / stay equal outside
    std::vector<std::pair<Addr, Addr>> pairs;  // (source node, copy node)
    pairs.emplace_back(src, c);
    WalkState ws = walk_init(src, m.node(src).par);
    WalkState wc = walk_init(c, 0);
    std::vector<std::pair<Addr, Addr>> mapping{{src, c}};
    for (;;) {
      const StepKind ks = walk(m, ws);
      const StepKind kc = walk(m, wc);
      REQUIRE(ks == kc);
      if (ks == StepKind::Finish) break;
      CHECK(m.kind(ws.cur) == m.kind(wc.cur));
      mapping.emplace_back(ws.cur, wc.cur);
      if (ks == StepKind::Variable && m.node(ws.cur).arg != 0) {
        const Addr src_binder = m.node(ws.cur).arg;
        Addr mapped = 0;
        for (const auto& [old_addr, new_addr] : mapping)
          if (old_addr == src_binder) mapped = new_addr;
        if (mapped != 0)
          CHECK(m.node(wc.cur).arg == mapped);
        else
          CHECK(m.node(wc.cur).arg == src_binder);
      }
    }
  }
}

TEST_CASE("second copy after a completed one sees no stale mapping") {
  // copy the whole apply tree, then copy its inner abstraction again: the
  // variable bound by the outer abstraction must keep pointing at the
  // ORIGINAL outer abstraction, not at last copy's counterpart
  Machine m = apply_machine(16);
  (void)copy(m, 1, 0);  // uses 6..10
  const Addr r = copy(m, 2, 0);
  WalkState s = walk_init(r, 0);
  for (;;) {
    const StepKind k = walk(m, s);
    if (k == StepKind::Finish) break;
    if (k == StepKind::Variable && m.node(s.cur).arg != 0) {
      const Addr binder = m.node(s.cur).arg;
      const bool internal = binder == r;
      const bool original_outer = binder == 1;
      CHECK((internal || original_outer));
    }
  }
}

TEST_CASE("copy propagates OutOfMemory") {
  Machine m = apply_machine(6);  // one free block, tree needs five
  CHECK_THROWS_AS(copy(m, 1, 0), OutOfMemory);
}
