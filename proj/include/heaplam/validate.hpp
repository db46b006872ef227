#pragma once

#include <optional>
#include <string>

#include "heaplam/machine.hpp"

namespace heaplam {

struct Diagnostic {
  Addr addr;
  std::string message;  // e.g. "par mismatch at 4"
};

// Structural well-formedness of the subtree under root, visited operator
// first: every child's par cell names its parent, no block is reached twice,
// copy cells are clear, and every variable's binder is an abstraction lying
// on the variable's own parent chain.  Returns the first offense found.
std::optional<Diagnostic> validate(const Machine& m, Addr root);

}  // namespace heaplam
