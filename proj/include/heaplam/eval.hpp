#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "heaplam/machine.hpp"

namespace heaplam {

struct EvalLimits {
  // Upper bound on beta reductions (the machine's steps_taken counter);
  // empty means no limit.
  std::optional<std::uint64_t> max_steps;
};

enum class EvalStatus { NormalForm, StepLimit, OutOfMemory };

struct EvalOutcome {
  EvalStatus status;
  Addr root;  // result root on NormalForm, 0 otherwise
  std::uint64_t steps;
};

// Called after each reduction with (step number, redex, contractum).
using TraceFn = std::function<void(std::uint64_t, Addr, Addr)>;

// One step of beta reduction at redex a = (L X) with L an abstraction:
// rewrite L's body via replace, splice the result into a's position (the
// expr register when a was the root), then zero L's func cell and clear
// from a, freeing the application, the abstraction and the whole operand.
// Returns the contractum root and bumps steps_taken.  OutOfMemory
// propagates; the machine is then diagnostic-only.
Addr beta_step(Machine& m, Addr a);

// Reduce the expression in the expr register to normal form, leftmost
// outermost.  While going forth the current node is reduced as long as it
// is reducible; after each reduction a contractum sitting in operator
// position hands the current node to its parent, which may have just become
// the leftmost outermost redex.  On NormalForm the expr register names the
// result and nothing reachable from it is reducible.
EvalOutcome normal(Machine& m, const EvalLimits& limits = {},
                   const TraceFn& trace = {});

}  // namespace heaplam
