#include "heaplam/dump.hpp"

#include <charconv>
#include <unordered_set>

namespace heaplam {

DumpError::DumpError(std::size_t line_no, const std::string& what)
    : std::runtime_error(line_no == 0
                             ? what
                             : what + " (line " + std::to_string(line_no) + ")"),
      line(line_no) {}

std::string format_dump(const Machine& m, Addr count) {
  if (count == 0 || count > m.size()) throw AddressError(count);
  std::string out;
  for (Addr a = 1; a <= count; ++a) {
    const Node& n = m.node(a);
    out += std::to_string(a);
    out += ' ';
    out += std::to_string(n.par);
    out += ' ';
    out += std::to_string(n.copy);
    out += ' ';
    out += std::to_string(n.func);
    out += ' ';
    out += std::to_string(n.arg);
    out += '\n';
  }
  return out;
}

namespace {

bool parse_uint(std::string_view tok, Addr& out) {
  if (tok.empty()) return false;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

// Splits a line into whitespace-separated tokens.
std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

}  // namespace

std::vector<DumpEntry> parse_dump(std::string_view text,
                                  std::size_t first_line) {
  std::vector<DumpEntry> out;
  std::unordered_set<Addr> seen;
  std::size_t lineno = first_line;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto fields = split_fields(line);
    if (!fields.empty()) {
      if (fields.size() != 5)
        throw DumpError(lineno, "expected five fields, got " +
                                    std::to_string(fields.size()));
      Addr v[5];
      for (int i = 0; i < 5; ++i)
        if (!parse_uint(fields[i], v[i]))
          throw DumpError(lineno, "bad number '" + std::string(fields[i]) + "'");
      if (v[0] == 0) throw DumpError(lineno, "block address 0");
      if (!seen.insert(v[0]).second)
        throw DumpError(lineno,
                        "duplicate block address " + std::to_string(v[0]));
      out.push_back(DumpEntry{lineno, v[0], Node{v[1], v[2], v[3], v[4]}});
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
    ++lineno;
  }
  return out;
}

void apply_overlay(Machine& m, const std::vector<DumpEntry>& entries) {
  const Addr n = m.size();
  for (const auto& e : entries) {
    if (e.addr > n)
      throw DumpError(e.line,
                      "block address " + std::to_string(e.addr) + " exceeds " +
                          std::to_string(n));
    for (Addr cell : {e.node.par, e.node.copy, e.node.func, e.node.arg})
      if (cell > n)
        throw DumpError(e.line, "cell value " + std::to_string(cell) +
                                    " exceeds " + std::to_string(n));
    m.node(e.addr) = e.node;
  }
}

std::string write_dump(const Machine& m) {
  return "expr=" + std::to_string(m.expr) + "\n" + format_dump(m, m.size());
}

namespace {

// Free blocks are recognizable by content: par, func and arg all zero and
// not the expr root.  The copy cells give the chain; freehead itself is not
// in the dump, so it is recovered as the unique chain head.
void rebuild_free_list(Machine& m) {
  const Addr n = m.size();
  std::vector<char> is_free(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Addr> free_blocks;
  for (Addr a = 1; a <= n; ++a) {
    const Node& nd = m.node(a);
    if (a != m.expr && nd.par == 0 && nd.func == 0 && nd.arg == 0) {
      is_free[a] = 1;
      free_blocks.push_back(a);
    }
  }
  if (free_blocks.empty()) {
    m.freehead = 0;
    return;
  }
  std::vector<char> linked(static_cast<std::size_t>(n) + 1, 0);
  bool fragmented = false;
  for (Addr a : free_blocks) {
    const Addr next = m.node(a).copy;
    if (next == 0) continue;
    if (!is_free[next])
      throw DumpError(0, "free block " + std::to_string(a) +
                             " links to in-use block " + std::to_string(next));
    if (linked[next]) fragmented = true;  // two blocks share a successor
    linked[next] = 1;
  }
  Addr head = 0;
  std::size_t heads = 0;
  for (Addr a : free_blocks)
    if (!linked[a]) {
      head = a;
      ++heads;
    }
  bool chain_ok = !fragmented && heads == 1;
  if (chain_ok) {
    std::size_t covered = 0;
    Addr a = head;
    while (a != 0 && covered <= free_blocks.size()) {
      ++covered;
      a = m.node(a).copy;
    }
    chain_ok = a == 0 && covered == free_blocks.size();
  }
  if (chain_ok) {
    m.freehead = head;
    return;
  }
  // Partial dump: no single chain over the free blocks, so relink them in
  // ascending order.
  for (std::size_t i = 0; i < free_blocks.size(); ++i)
    m.node(free_blocks[i]).copy =
        i + 1 < free_blocks.size() ? free_blocks[i + 1] : 0;
  m.freehead = free_blocks.front();
}

}  // namespace

void load_dump(Machine& m, std::string_view text) {
  const std::size_t eol = text.find('\n');
  std::string_view header =
      eol == std::string_view::npos ? text : text.substr(0, eol);
  if (!header.empty() && header.back() == '\r') header.remove_suffix(1);
  constexpr std::string_view prefix = "expr=";
  if (header.substr(0, prefix.size()) != prefix)
    throw DumpError(1, "missing expr= header");
  Addr expr = 0;
  if (!parse_uint(header.substr(prefix.size()), expr))
    throw DumpError(1, "bad expr address");
  if (expr > m.size())
    throw DumpError(1, "expr address " + std::to_string(expr) + " exceeds " +
                           std::to_string(m.size()));
  const auto entries = parse_dump(
      eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1),
      2);
  for (Addr a = 1; a <= m.size(); ++a) m.node(a) = Node{};
  m.expr = expr;
  m.freehead = 0;
  m.steps_taken = 0;
  apply_overlay(m, entries);
  rebuild_free_list(m);
}

}  // namespace heaplam
