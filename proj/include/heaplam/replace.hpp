#pragma once

#include "heaplam/machine.hpp"

namespace heaplam {

// True iff a is an application whose operator is an abstraction.
bool isreducible(const Machine& m, Addr a);

// Substitute a copy of argument for every variable in the subtree under body
// that is bound by binder, freeing each replaced variable block.  Returns
// the root of the rewritten body: body itself unless body was such a
// variable, in which case the fresh copy takes its place (with body's old
// par).  Non-replaced blocks keep their addresses.
//
// body must be the func child of binder; argument must be a disjoint
// subtree containing no variable bound by binder (it lies outside binder's
// scope), which is why spliced copies need not be walked into.
Addr replace(Machine& m, Addr body, Addr binder, Addr argument);

}  // namespace heaplam
