#pragma once

#include "heaplam/machine.hpp"

namespace heaplam {

// Duplicate the subtree under src into freshly allocated blocks and return
// the new root, whose par cell is set to new_parent.
//
// Variables bound inside the region are remapped to the new abstraction
// blocks; variables bound outside keep their original binder address.  The
// old->new mapping lives in the source abstractions' copy cells while the
// command runs and is wiped before it returns, so no in-use block is left
// with a nonzero copy cell.  The source is otherwise untouched.
//
// Costs exactly one get per source node and no puts.  An OutOfMemory from
// get propagates; the half-built copy is not unwound.
Addr copy(Machine& m, Addr src, Addr new_parent);

}  // namespace heaplam
