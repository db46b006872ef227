#include "heaplam/replace.hpp"

#include "heaplam/copy.hpp"
#include "heaplam/walk.hpp"

namespace heaplam {

bool isreducible(const Machine& m, Addr a) {
  return m.kind(a) == NodeKind::Application &&
         m.kind(m.node(a).func) == NodeKind::Abstraction;
}

Addr replace(Machine& m, Addr body, Addr binder, Addr argument) {
  Addr root = body;
  WalkState s = walk_init(body, m.node(body).par);
  for (;;) {
    switch (walk(m, s)) {
      case StepKind::Finish:
        return root;
      case StepKind::Variable: {
        const Addr v = s.cur;
        if (m.node(v).arg != binder) break;
        const Addr site = m.node(v).par;
        const Addr fresh = copy(m, argument, site);
        if (v == root) {
          root = fresh;
        } else {
          Node& p = m.node(site);
          if (p.func == v)
            p.func = fresh;
          else
            p.arg = fresh;
        }
        m.put(v);
        // Resume as if the walk had just finished the spliced copy.  Its
        // inside holds no variable bound by binder (the argument lies
        // outside binder's scope), so it need not be entered at all.
        s.cur = fresh;
        break;
      }
      default:
        break;
    }
  }
}

}  // namespace heaplam
