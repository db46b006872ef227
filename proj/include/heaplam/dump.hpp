#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "heaplam/machine.hpp"

namespace heaplam {

class DumpError : public std::runtime_error {
 public:
  DumpError(std::size_t line, const std::string& what);
  std::size_t line;  // 1-based; 0 when the problem is not tied to one line
};

// One parsed dump row.
struct DumpEntry {
  std::size_t line;
  Addr addr;
  Node node;
};

// Rows "addr par copy func arg" for blocks 1..count, one per line, plain
// decimal with single spaces.
std::string format_dump(const Machine& m, Addr count);

// Inverse of format_dump.  Blank lines are skipped; every other line must
// hold exactly five unsigned decimal fields.  Duplicate addresses and
// address 0 are rejected.  first_line offsets the reported line numbers.
std::vector<DumpEntry> parse_dump(std::string_view text,
                                  std::size_t first_line = 1);

// Write exactly the listed blocks into m.  Block addresses and cell values
// must fit the machine.
void apply_overlay(Machine& m, const std::vector<DumpEntry>& entries);

// Whole-machine snapshot: an "expr=A" header line followed by all N rows.
std::string write_dump(const Machine& m);

// Load a snapshot produced by write_dump (or written by hand).  Restores the
// expr register from the header and rebuilds the free list from block
// contents: every block with par, func and arg all zero, other than the expr
// root, is free.  When those blocks already form one complete copy-linked
// chain it is kept as-is (so load_dump(write_dump(m)) reproduces m exactly);
// otherwise they are relinked in ascending address order.  A free block
// linking to an in-use block is corruption and is rejected.
void load_dump(Machine& m, std::string_view text);

}  // namespace heaplam
