#pragma once

#include <cstdint>
#include <optional>

#include "heaplam/term.hpp"

namespace heaplam {

// Contract the leftmost outermost redex; empty when t is in normal form.
std::optional<IndexTermPtr> reduce_once(const IndexTermPtr& t);

struct RefOutcome {
  bool normal_form;   // false: fuel ran out with a redex remaining
  IndexTermPtr term;  // the normal form when normal_form is true
  std::uint64_t steps;
};

// Reference normalizer for differential checks: plain structural recursion
// with shift/substitute over nameless closed terms, sharing nothing with the
// machine's representation or algorithms.  Contracts leftmost outermost
// redexes one at a time, at most fuel of them.
RefOutcome reference_normalize(IndexTermPtr t, std::uint64_t fuel);

}  // namespace heaplam
