#pragma once

#include "heaplam/machine.hpp"

namespace heaplam {

enum class Direction { Forth, Back };

// What a single walk step did.
enum class StepKind { Variable, FunctionPart, ArgumentPart, Back, Finish };

const char* to_string(StepKind k);

// Traversal state.  stop holds the parent of the traversal root and is fixed
// for the whole walk; the walk is over once the current node's par cell
// equals it.  Comparing against the stored address keeps the walk working
// even when the root has been detached from its old parent.
struct WalkState {
  Addr cur;
  Addr stop;
  Direction dir;
};

// Start a walk over the subtree rooted at sub.  parent_of_sub must equal
// sub's par cell (0 when sub is the whole expression).
WalkState walk_init(Addr sub, Addr parent_of_sub);

// Advance one step in normal order (function part before argument part).
// Exactly one transition fires:
//
//   Forth at a leaf            -> Variable      (turn around, cur stays)
//   Forth at an app/abstraction-> FunctionPart  (cur := cur.func)
//   Back with cur.par == stop  -> Finish        (state unchanged)
//   Back off a function part
//     whose parent has an arg  -> ArgumentPart  (cur := parent.arg, forth)
//   Back otherwise             -> Back          (cur := cur.par)
//
// The walker is read-only on the machine and allocates nothing.  On a
// well-formed n-node subtree, Finish comes on call 2n and never before, and
// it never reads through a variable's arg cell.
StepKind walk(const Machine& m, WalkState& s);

// Node count of the subtree under root, by walking it.
Addr subtree_size(const Machine& m, Addr root);

}  // namespace heaplam
