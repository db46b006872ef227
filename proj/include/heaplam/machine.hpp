#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace heaplam {

// 1-based block index into machine memory; 0 is the null address and never
// names a real block.
using Addr = std::uint64_t;

// One block of machine memory: a record of four address cells.
//
//   par  - the parent node
//   copy - old->new mapping while a subexpression is being duplicated;
//          next-block link while the block sits on the free list;
//          0 for every in-use block outside an active copy
//   func - operator (application) or body (abstraction)
//   arg  - operand (application) or the binding abstraction (variable)
//
// Block addresses double as variable names: a variable's arg cell points at
// the abstraction that binds it, so distinct variables can never clash.
struct Node {
  Addr par = 0;
  Addr copy = 0;
  Addr func = 0;
  Addr arg = 0;
};

// Classification of a block, a total function of (func, arg):
//
//   func!=0  arg!=0   Application
//   func!=0  arg==0   Abstraction
//   func==0  arg!=0   Variable
//   func==0  arg==0   FreeLeaf - a free-variable leaf or an unused block;
//                     traversals treat it exactly like a variable leaf
enum class NodeKind { Application, Abstraction, Variable, FreeLeaf };

const char* to_string(NodeKind k);

class MachineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// get() on an empty free list.  Aborts the whole run; partially built
// structures are not recovered.
class OutOfMemory : public MachineError {
 public:
  OutOfMemory() : MachineError("out of free blocks") {}
};

class AddressError : public MachineError {
 public:
  explicit AddressError(Addr a);
};

class ConfigError : public MachineError {
 public:
  using MachineError::MachineError;
};

// The machine: N identical blocks plus the freehead and expr registers and a
// reduction counter.  A Machine is a single-owner mutable value; nothing here
// is safe to call concurrently on the same instance.
class Machine {
 public:
  // Blocks come up all-zero; call reset() before using the allocator.
  explicit Machine(Addr block_count);

  Addr size() const noexcept { return static_cast<Addr>(mem_.size()) - 1; }

  Node& node(Addr a);
  const Node& node(Addr a) const;
  NodeKind kind(Addr a) const;

  // Link block i to i+1 through the copy cells (block N ends the chain),
  // point freehead at block 1, zero everything else.
  void reset();

  // Unlink the head free block, zero its cells and return its address.
  Addr get();

  // Push block a onto the free list.  par/func/arg are zeroed as well so the
  // block immediately has free-leaf shape.
  void put(Addr a);

  // Length of the freehead chain.  Throws MachineError when the chain is
  // longer than memory, which can only mean corruption.
  Addr free_count() const;

  Addr freehead = 0;
  Addr expr = 0;
  std::uint64_t steps_taken = 0;

 private:
  std::vector<Node> mem_;  // mem_[0] unused; blocks live at 1..N
};

}  // namespace heaplam
