#pragma once

#include "heaplam/machine.hpp"

namespace heaplam {

// Free every block of the subtree under root.  Children are put exactly when
// the walk has just stepped up into their parent; the root itself goes last,
// at Finish.  The subtree must be well formed and already detached from any
// live expression; no block is read after it has been freed.
void clear(Machine& m, Addr root);

}  // namespace heaplam
