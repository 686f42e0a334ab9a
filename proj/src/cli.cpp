#include "mist/cli.hpp"

#include <ostream>

#include "mist/errors.hpp"
#include "mist/generate.hpp"
#include "mist/io.hpp"
#include "mist/kernel.hpp"
#include "mist/oracle.hpp"
#include "mist/verify.hpp"

namespace mist::cli {

namespace {

void print_tree(const SpanningTree& t, std::ostream& out) {
  for (const Edge& e : t.edges()) out << "e " << e.u << ' ' << e.v << '\n';
}

// Runs `body`, mapping library exceptions to exit codes.
template <class Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << '\n';
    return kFormatError;
  } catch (const PreconditionError& e) {
    err << "precondition error: " << e.what() << '\n';
    return kPrecondition;
  }
}

}  // namespace

int run_kernelize(const KernelizeArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = read_edge_list_file(args.input);
    const KernelResult result = kernelize(g, args.k);
    if (args.out_trace) write_file(*args.out_trace, serialize_trace(g, args.k, result));
    switch (result.outcome) {
      case Outcome::Solved:
        out << "SOLVED " << result.tree->internal_count() << '\n';
        print_tree(*result.tree, out);
        break;
      case Outcome::Kernel:
        if (args.out_graph) write_file(*args.out_graph, serialize_edge_list(result.graph));
        out << "KERNEL " << result.graph.vertex_count() << ' ' << result.graph.edge_count() << ' ' << result.k_prime
            << '\n';
        break;
      case Outcome::TrivialYes:
        out << "TRIVIAL_YES " << result.reason << '\n';
        print_tree(*result.tree, out);
        break;
      case Outcome::TrivialNo:
        out << "TRIVIAL_NO " << result.reason << '\n';
        break;
    }
    return static_cast<int>(kSuccess);
  });
}

int run_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = read_edge_list_file(args.input);
    const Decision d = decide_pist(g, args.k, args.oracle_max_n);
    if (!d.yes) {
      out << "NO\n";
      return static_cast<int>(kNegative);
    }
    out << "YES\n";
    print_tree(*d.witness, out);
    return static_cast<int>(kSuccess);
  });
}

int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = read_edge_list_file(args.graph);
    const TraceDocument trace = parse_trace(read_file(args.trace));
    std::optional<std::string> kernel_text;
    if (args.kernel) kernel_text = read_file(*args.kernel);
    if (auto broken = trace_violation(g, trace, kernel_text)) {
      out << "FAIL " << *broken << '\n';
      return static_cast<int>(kNegative);
    }
    out << "OK\n";
    return static_cast<int>(kSuccess);
  });
}

int run_gen(const GenArgs& args, std::ostream& out, std::ostream& err) {
  const auto family = parse_family(args.family);
  if (!family) {
    err << "unknown family: " << args.family << '\n';
    return kFormatError;
  }
  try {
    out << serialize_edge_list(generate_graph(*family, args.n, args.m, args.seed));
  } catch (const PreconditionError& e) {
    err << "inadmissible parameters: " << e.what() << '\n';
    return kFormatError;
  }
  return kSuccess;
}

}  // namespace mist::cli
