#pragma once

#include "heaplam/machine.hpp"
#include "heaplam/term.hpp"

namespace heaplam {

// encode() rejects open terms: the memory gives every free variable the
// same all-zero encoding, which would collapse distinct names.
class EncodeError : public std::runtime_error {
 public:
  explicit EncodeError(const std::string& what);
};

// decode() on memory that fails validation.
class MalformedMemory : public MachineError {
 public:
  using MachineError::MachineError;
};

// Allocate the closed term t into machine memory - each node before its
// operator/body, operator/body before operand - and point the expr register
// at the root.  On a freshly reset machine the blocks therefore come out in
// preorder starting at address 1.
Addr encode(Machine& m, const TermPtr& t);

// Rebuild a term from memory (validates first).  Binders get fresh names
// v1, v2, ... in preorder; free leaves and variables whose binder lies
// outside the subtree decode as "_".
TermPtr decode(const Machine& m, Addr root);

}  // namespace heaplam
