#include "heaplam/clear.hpp"

#include "heaplam/walk.hpp"

namespace heaplam {

void clear(Machine& m, Addr root) {
  WalkState s = walk_init(root, m.node(root).par);
  for (;;) {
    switch (walk(m, s)) {
      case StepKind::Back: {
        // Just stepped up into s.cur: both its children are fully walked,
        // so they can go back on the free list.  A variable's arg is a
        // binder reference, never a child, hence only app arg cells count.
        const Addr func_child = m.node(s.cur).func;
        const Addr arg_child = m.node(s.cur).arg;
        m.put(func_child);
        if (arg_child != 0) m.put(arg_child);
        break;
      }
      case StepKind::Finish:
        m.put(root);
        return;
      default:
        break;
    }
  }
}

}  // namespace heaplam
