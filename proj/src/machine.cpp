#include "heaplam/machine.hpp"

namespace heaplam {

const char* to_string(NodeKind k) {
  switch (k) {
    case NodeKind::Application: return "Application";
    case NodeKind::Abstraction: return "Abstraction";
    case NodeKind::Variable: return "Variable";
    case NodeKind::FreeLeaf: return "FreeLeaf";
  }
  return "?";
}

AddressError::AddressError(Addr a)
    : MachineError("bad block address " + std::to_string(a)) {}

Machine::Machine(Addr block_count) {
  if (block_count == 0)
    throw ConfigError("machine memory needs at least one block");
  mem_.resize(block_count + 1);
}

Node& Machine::node(Addr a) {
  if (a == 0 || a >= mem_.size()) throw AddressError(a);
  return mem_[a];
}

const Node& Machine::node(Addr a) const {
  if (a == 0 || a >= mem_.size()) throw AddressError(a);
  return mem_[a];
}

NodeKind Machine::kind(Addr a) const {
  const Node& n = node(a);
  if (n.func != 0)
    return n.arg != 0 ? NodeKind::Application : NodeKind::Abstraction;
  return n.arg != 0 ? NodeKind::Variable : NodeKind::FreeLeaf;
}

void Machine::reset() {
  const Addr n = size();
  for (Addr i = 1; i <= n; ++i) mem_[i] = Node{0, i < n ? i + 1 : 0, 0, 0};
  freehead = 1;
  expr = 0;
  steps_taken = 0;
}

Addr Machine::get() {
  if (freehead == 0) throw OutOfMemory();
  const Addr a = freehead;
  freehead = mem_[a].copy;
  mem_[a] = Node{};
  return a;
}

void Machine::put(Addr a) {
  Node& n = node(a);
  n.copy = freehead;
  n.par = 0;
  n.func = 0;
  n.arg = 0;
  freehead = a;
}

Addr Machine::free_count() const {
  Addr count = 0;
  for (Addr a = freehead; a != 0; a = mem_[a].copy) {
    if (a >= mem_.size()) throw MachineError("free list escapes memory");
    if (++count > size()) throw MachineError("free list longer than memory");
  }
  return count;
}

}  // namespace heaplam
