// Command-line driver: evaluate a lambda expression to normal form in a
// fixed-size block machine, or import/export raw memory dumps.
//
// Exit codes: 0 normal form, 2 parse/encoding error, 3 out of memory,
// 4 step limit, 5 malformed dump or memory.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "heaplam/codec.hpp"
#include "heaplam/dump.hpp"
#include "heaplam/eval.hpp"
#include "heaplam/replace.hpp"
#include "heaplam/term.hpp"
#include "heaplam/validate.hpp"
#include "heaplam/walk.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitOutOfMemory = 3;
constexpr int kExitStepLimit = 4;
constexpr int kExitMalformed = 5;

std::string slurp(const std::string& path, bool& ok) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ok = false;
    return {};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  ok = true;
  return buf.str();
}

// True iff any node reachable from root is a redex.
bool any_redex(const heaplam::Machine& m, heaplam::Addr root) {
  if (heaplam::isreducible(m, root)) return true;
  heaplam::WalkState s = heaplam::walk_init(root, m.node(root).par);
  for (;;) {
    switch (heaplam::walk(m, s)) {
      case heaplam::StepKind::FunctionPart:
      case heaplam::StepKind::ArgumentPart:
        if (heaplam::isreducible(m, s.cur)) return true;
        break;
      case heaplam::StepKind::Finish:
        return false;
      default:
        break;
    }
  }
}

void print_walk_trace(const heaplam::Machine& m, heaplam::Addr root) {
  heaplam::WalkState s = heaplam::walk_init(root, m.node(root).par);
  for (std::uint64_t call = 1;; ++call) {
    const heaplam::StepKind k = heaplam::walk(m, s);
    std::cout << "call=" << call << " step=" << heaplam::to_string(k)
              << " cur=" << s.cur << "\n";
    if (k == heaplam::StepKind::Finish) return;
  }
}

int run(int argc, char** argv) {
  CLI::App app{
      "Evaluates lambda-calculus expressions to normal form by graph "
      "reduction over a heap of identical four-cell blocks."};

  std::string expr_text;
  std::string file_path;
  std::string dump_in;
  std::string dump_out;
  std::uint64_t mem_size = 65536;
  std::uint64_t max_steps = 100000;
  bool no_step_limit = false;
  bool trace = false;
  bool trace_walk = false;
  bool check = false;

  auto* opt_expr =
      app.add_option("--expr", expr_text, "Expression to evaluate");
  auto* opt_file =
      app.add_option("--file", file_path, "Read the expression from a file");
  auto* opt_dump_in = app.add_option(
      "--dump-in", dump_in,
      "Load machine memory from a dump file (expr=ADDR header plus rows)");
  opt_expr->excludes(opt_file)->excludes(opt_dump_in);
  opt_file->excludes(opt_dump_in);
  app.add_option("--mem-size", mem_size, "Machine memory size in blocks")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--max-steps", max_steps, "Beta-reduction budget")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_flag("--no-step-limit", no_step_limit, "Run without a step budget");
  app.add_option("--dump-out", dump_out,
                 "Write the post-evaluation memory dump to a file");
  app.add_flag("--trace", trace, "Print one line per beta reduction");
  app.add_flag("--trace-walk", trace_walk,
               "Print the traversal of the loaded tree instead of evaluating");
  app.add_flag("--check", check,
               "Verify memory well-formedness and block conservation after "
               "evaluation");

  CLI11_PARSE(app, argc, argv);

  if (!*opt_expr && !*opt_file && !*opt_dump_in) {
    std::cerr << "error: one of --expr, --file or --dump-in is required\n";
    return 1;
  }

  heaplam::Machine m(mem_size);

  try {
    if (*opt_dump_in) {
      bool ok = false;
      const std::string text = slurp(dump_in, ok);
      if (!ok) {
        std::cerr << "error: cannot read " << dump_in << "\n";
        return kExitMalformed;
      }
      heaplam::load_dump(m, text);
      if (m.expr == 0) {
        std::cerr << "error: dump has no expression (expr=0)\n";
        return kExitMalformed;
      }
      if (m.node(m.expr).par != 0) {
        std::cerr << "error: expr root has a nonzero par cell\n";
        return kExitMalformed;
      }
      if (const auto d = heaplam::validate(m, m.expr)) {
        std::cerr << "error: malformed memory: " << d->message << "\n";
        return kExitMalformed;
      }
    } else {
      std::string text;
      if (*opt_expr) {
        text = expr_text;
      } else {
        bool ok = false;
        text = slurp(file_path, ok);
        if (!ok) {
          std::cerr << "error: cannot read " << file_path << "\n";
          return kExitParse;
        }
      }
      m.reset();
      heaplam::encode(m, heaplam::parse_term(text));
    }
  } catch (const heaplam::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const heaplam::EncodeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const heaplam::OutOfMemory&) {
    std::cerr << "error: out of memory while loading the expression\n";
    return kExitOutOfMemory;
  } catch (const heaplam::DumpError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  }

  const auto maybe_write_dump = [&]() -> bool {
    if (dump_out.empty()) return true;
    std::ofstream out(dump_out, std::ios::binary);
    if (out) out << heaplam::write_dump(m);
    if (!out) {
      std::cerr << "error: cannot write " << dump_out << "\n";
      return false;
    }
    return true;
  };

  if (trace_walk) {
    print_walk_trace(m, m.expr);
    return maybe_write_dump() ? kExitOk : kExitMalformed;
  }

  heaplam::EvalLimits limits;
  if (!no_step_limit) limits.max_steps = max_steps;
  heaplam::TraceFn trace_fn;
  if (trace)
    trace_fn = [](std::uint64_t step, heaplam::Addr redex,
                  heaplam::Addr result) {
      std::cout << "step=" << step << " redex=" << redex
                << " result=" << result << "\n";
    };

  const heaplam::EvalOutcome out = heaplam::normal(m, limits, trace_fn);

  if (!maybe_write_dump()) return kExitMalformed;

  switch (out.status) {
    case heaplam::EvalStatus::NormalForm: {
      if (check) {
        if (const auto d = heaplam::validate(m, m.expr)) {
          std::cerr << "check failed: " << d->message << "\n";
          return kExitMalformed;
        }
        if (any_redex(m, m.expr)) {
          std::cerr << "check failed: result still contains a redex\n";
          return kExitMalformed;
        }
        const heaplam::Addr used = heaplam::subtree_size(m, m.expr);
        if (m.free_count() + used != m.size()) {
          std::cerr << "check failed: block conservation violated\n";
          return kExitMalformed;
        }
      }
      std::cout << heaplam::print_term(heaplam::decode(m, out.root)) << "\n";
      std::cout << "steps=" << out.steps << "\n";
      return kExitOk;
    }
    case heaplam::EvalStatus::StepLimit:
      std::cerr << "error: step limit reached after " << out.steps
                << " steps\n";
      return kExitStepLimit;
    case heaplam::EvalStatus::OutOfMemory:
      std::cerr << "error: out of memory after " << out.steps << " steps\n";
      return kExitOutOfMemory;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
