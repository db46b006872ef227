#include "heaplam/eval.hpp"

#include "heaplam/clear.hpp"
#include "heaplam/replace.hpp"
#include "heaplam/walk.hpp"

namespace heaplam {

Addr beta_step(Machine& m, Addr a) {
  if (!isreducible(m, a)) throw MachineError("beta_step: not a redex");
  const Addr abstraction = m.node(a).func;
  const Addr operand = m.node(a).arg;
  const Addr body = m.node(abstraction).func;

  const Addr contractum = replace(m, body, abstraction, operand);

  // Splice the contractum into the redex's position.
  const Addr parent = m.node(a).par;
  m.node(contractum).par = parent;
  if (parent == 0) {
    m.expr = contractum;
  } else {
    Node& p = m.node(parent);
    if (p.func == a)
      p.func = contractum;
    else
      p.arg = contractum;
  }

  // The application, the abstraction and the whole operand are dead.
  // Zeroing the abstraction's func cell detaches the already-spliced body
  // and turns the abstraction into a leaf, so one clear from the
  // application frees all of it.
  m.node(abstraction).func = 0;
  clear(m, a);

  ++m.steps_taken;
  return contractum;
}

EvalOutcome normal(Machine& m, const EvalLimits& limits, const TraceFn& trace) {
  Addr cur = m.expr;
  if (cur == 0) throw AddressError(0);
  Direction dir = Direction::Forth;
  try {
    for (;;) {
      if (dir == Direction::Forth) {
        while (isreducible(m, cur)) {
          if (limits.max_steps && m.steps_taken >= *limits.max_steps)
            return {EvalStatus::StepLimit, 0, m.steps_taken};
          const Addr redex = cur;
          cur = beta_step(m, redex);
          if (trace) trace(m.steps_taken, redex, cur);
          // A contractum in operator position may have turned its parent
          // into the leftmost outermost redex.
          const Addr parent = m.node(cur).par;
          if (parent != 0 && m.node(parent).func == cur) cur = parent;
        }
        const NodeKind k = m.kind(cur);
        if (k == NodeKind::Variable || k == NodeKind::FreeLeaf)
          dir = Direction::Back;
        else
          cur = m.node(cur).func;
      } else {
        const Addr parent = m.node(cur).par;
        if (parent == 0) return {EvalStatus::NormalForm, cur, m.steps_taken};
        const Node& p = m.node(parent);
        if (p.func == cur && p.arg != 0) {
          cur = p.arg;
          dir = Direction::Forth;
        } else {
          cur = parent;
        }
      }
    }
  } catch (const OutOfMemory&) {
    return {EvalStatus::OutOfMemory, 0, m.steps_taken};
  }
}

}  // namespace heaplam
