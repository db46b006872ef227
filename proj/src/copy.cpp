#include "heaplam/copy.hpp"

#include "heaplam/walk.hpp"

namespace heaplam {

namespace {

// Locate the binder a variable points at by ascending the parent chain
// through the whole expression, and return that binder's copy-cell mapping:
// nonzero exactly when the binder lies inside the region being copied.
Addr mapped_binder(const Machine& m, Addr var) {
  const Addr binder = m.node(var).arg;
  for (Addr p = m.node(var).par; p != 0; p = m.node(p).par)
    if (p == binder) return m.node(p).copy;
  return 0;
}

}  // namespace

Addr copy(Machine& m, Addr src, Addr new_parent) {
  const Addr root = m.get();
  m.node(root).par = new_parent;
  // ncur mirrors the walk's current node in the copy under construction.
  Addr ncur = root;
  WalkState s = walk_init(src, m.node(src).par);
  for (bool done = false; !done;) {
    switch (walk(m, s)) {
      case StepKind::FunctionPart: {
        // The node just left (now s.cur's parent) gets its old->new mapping
        // recorded, and the copy grows a func child to descend into.
        m.node(m.node(s.cur).par).copy = ncur;
        const Addr child = m.get();
        m.node(ncur).func = child;
        m.node(child).par = ncur;
        ncur = child;
        break;
      }
      case StepKind::ArgumentPart: {
        ncur = m.node(ncur).par;
        const Addr child = m.get();
        m.node(ncur).arg = child;
        m.node(child).par = ncur;
        ncur = child;
        break;
      }
      case StepKind::Variable: {
        // ncur is the fresh counterpart of this leaf.  Free leaves stay
        // all-zero; variables point at the copied binder when there is one
        // and keep the external binder otherwise.
        if (m.node(s.cur).arg != 0) {
          const Addr mapped = mapped_binder(m, s.cur);
          m.node(ncur).arg = mapped != 0 ? mapped : m.node(s.cur).arg;
        }
        break;
      }
      case StepKind::Back:
        ncur = m.node(ncur).par;
        break;
      case StepKind::Finish:
        done = true;
        break;
    }
  }
  // Second walk: wipe the mapping, otherwise a later copy of a region bound
  // by one of these abstractions would read a stale copy cell.
  m.node(src).copy = 0;
  for (WalkState c = walk_init(src, m.node(src).par);;) {
    if (walk(m, c) == StepKind::Finish) break;
    m.node(c.cur).copy = 0;
  }
  return root;
}

}  // namespace heaplam
