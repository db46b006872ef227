#include "heaplam/walk.hpp"

namespace heaplam {

const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::Variable: return "Variable";
    case StepKind::FunctionPart: return "FunctionPart";
    case StepKind::ArgumentPart: return "ArgumentPart";
    case StepKind::Back: return "Back";
    case StepKind::Finish: return "Finish";
  }
  return "?";
}

WalkState walk_init(Addr sub, Addr parent_of_sub) {
  if (sub == 0) throw AddressError(0);
  return WalkState{sub, parent_of_sub, Direction::Forth};
}

StepKind walk(const Machine& m, WalkState& s) {
  if (s.dir == Direction::Forth) {
    switch (m.kind(s.cur)) {
      case NodeKind::Variable:
      case NodeKind::FreeLeaf:
        s.dir = Direction::Back;
        return StepKind::Variable;
      case NodeKind::Abstraction:
      case NodeKind::Application:
        s.cur = m.node(s.cur).func;
        return StepKind::FunctionPart;
    }
  }
  const Addr parent = m.node(s.cur).par;
  if (parent == s.stop) return StepKind::Finish;
  const Node& p = m.node(parent);
  if (p.func == s.cur && p.arg != 0) {
    s.cur = p.arg;
    s.dir = Direction::Forth;
    return StepKind::ArgumentPart;
  }
  s.cur = parent;
  return StepKind::Back;
}

Addr subtree_size(const Machine& m, Addr root) {
  WalkState s = walk_init(root, m.node(root).par);
  Addr nodes = 1;
  Addr guard = 2 * m.size() + 2;
  for (;;) {
    if (guard-- == 0) throw MachineError("walk did not finish");
    switch (walk(m, s)) {
      case StepKind::FunctionPart:
      case StepKind::ArgumentPart:
        ++nodes;
        break;
      case StepKind::Finish:
        return nodes;
      default:
        break;
    }
  }
}

}  // namespace heaplam
