#include "heaplam/validate.hpp"

#include <vector>

namespace heaplam {

namespace {

Diagnostic diag(Addr a, const char* rule) {
  return Diagnostic{a, std::string(rule) + " at " + std::to_string(a)};
}

}  // namespace

std::optional<Diagnostic> validate(const Machine& m, Addr root) {
  const Addr n = m.size();
  if (root == 0 || root > n) return diag(root, "root address out of range");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Addr> stack{root};
  while (!stack.empty()) {
    const Addr a = stack.back();
    stack.pop_back();
    if (seen[a]) return diag(a, "node visited twice");
    seen[a] = 1;
    const Node& nd = m.node(a);
    if (nd.copy != 0) return diag(a, "copy cell not zero");
    const NodeKind k = m.kind(a);
    if (k == NodeKind::Application || k == NodeKind::Abstraction) {
      const Addr children[2] = {nd.func, nd.arg};  // arg is 0 for abstractions
      for (Addr child : children) {
        if (child == 0) continue;
        if (child > n) return diag(a, "child address out of range");
        if (m.node(child).par != a) return diag(child, "par mismatch");
      }
      // operator first: push it last
      if (nd.arg != 0) stack.push_back(nd.arg);
      stack.push_back(nd.func);
    } else if (k == NodeKind::Variable) {
      const Addr binder = nd.arg;
      bool found = false;
      Addr hops = 0;
      for (Addr p = nd.par; p != 0 && p <= n; p = m.node(p).par) {
        if (++hops > n) break;  // par cycle
        if (p == binder) {
          found = true;
          break;
        }
      }
      if (!found) return diag(a, "binder not on parent chain");
      if (m.kind(binder) != NodeKind::Abstraction)
        return diag(a, "binder not an abstraction");
    }
    // FreeLeaf: nothing to check
  }
  return std::nullopt;
}

}  // namespace heaplam
