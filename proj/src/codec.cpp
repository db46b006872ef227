#include "heaplam/codec.hpp"

#include <unordered_map>
#include <utility>
#include <vector>

#include "heaplam/validate.hpp"

namespace heaplam {

EncodeError::EncodeError(const std::string& what) : std::runtime_error(what) {}

namespace {

// First free variable of t, or null.  Checked up front so encoding never
// leaves a half-written expression behind on bad input.
const std::string* find_free(const TermPtr& t,
                             std::vector<const std::string*>& env) {
  switch (t->tag) {
    case Term::Tag::Var: {
      for (std::size_t i = env.size(); i-- > 0;)
        if (*env[i] == t->name) return nullptr;
      return &t->name;
    }
    case Term::Tag::Lam: {
      env.push_back(&t->name);
      const std::string* r = find_free(t->fun, env);
      env.pop_back();
      return r;
    }
    case Term::Tag::App: {
      if (const std::string* r = find_free(t->fun, env)) return r;
      return find_free(t->arg, env);
    }
  }
  return nullptr;
}

Addr encode_rec(Machine& m, const TermPtr& t, Addr parent,
                std::vector<std::pair<const std::string*, Addr>>& env) {
  const Addr a = m.get();
  m.node(a).par = parent;
  switch (t->tag) {
    case Term::Tag::Var: {
      for (std::size_t i = env.size(); i-- > 0;) {
        if (*env[i].first == t->name) {
          m.node(a).arg = env[i].second;
          break;
        }
      }
      break;
    }
    case Term::Tag::Lam: {
      env.emplace_back(&t->name, a);
      m.node(a).func = encode_rec(m, t->fun, a, env);
      env.pop_back();
      break;
    }
    case Term::Tag::App: {
      m.node(a).func = encode_rec(m, t->fun, a, env);
      m.node(a).arg = encode_rec(m, t->arg, a, env);
      break;
    }
  }
  return a;
}

TermPtr decode_rec(const Machine& m, Addr a,
                   std::unordered_map<Addr, std::string>& names,
                   std::uint64_t& counter) {
  switch (m.kind(a)) {
    case NodeKind::Abstraction: {
      std::string name = "v" + std::to_string(++counter);
      names.emplace(a, name);
      return make_lam(std::move(name),
                      decode_rec(m, m.node(a).func, names, counter));
    }
    case NodeKind::Application:
      return make_app(decode_rec(m, m.node(a).func, names, counter),
                      decode_rec(m, m.node(a).arg, names, counter));
    case NodeKind::Variable: {
      const auto it = names.find(m.node(a).arg);
      return make_var(it != names.end() ? it->second : "_");
    }
    case NodeKind::FreeLeaf:
      return make_var("_");
  }
  return nullptr;
}

}  // namespace

Addr encode(Machine& m, const TermPtr& t) {
  {
    std::vector<const std::string*> env;
    if (const std::string* free_name = find_free(t, env))
      throw EncodeError("free variable " + *free_name);
  }
  std::vector<std::pair<const std::string*, Addr>> env;
  const Addr root = encode_rec(m, t, 0, env);
  m.expr = root;
  return root;
}

TermPtr decode(const Machine& m, Addr root) {
  if (const auto d = validate(m, root)) throw MalformedMemory(d->message);
  std::unordered_map<Addr, std::string> names;
  std::uint64_t counter = 0;
  return decode_rec(m, root, names, counter);
}

}  // namespace heaplam
