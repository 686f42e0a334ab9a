#include <iostream>

#include "CLI11.hpp"
#include "mist/cli.hpp"
#include "mist/oracle.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Kernelization for the maximum internal spanning tree problem"};
  app.require_subcommand(1);

  mist::cli::KernelizeArgs kernelize_args;
  auto* kernelize = app.add_subcommand("kernelize", "Reduce (G, k) to a kernel on at most 3k vertices");
  kernelize->add_option("--in", kernelize_args.input, "Input edge list")->required();
  kernelize->add_option("--k", kernelize_args.k, "Parameter k")->required();
  kernelize->add_option("--out-graph", kernelize_args.out_graph, "Where to write the kernel graph");
  kernelize->add_option("--out-trace", kernelize_args.out_trace, "Where to write the reduction trace");

  mist::cli::SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Decide whether G has a spanning tree with k internal vertices");
  solve->add_option("--in", solve_args.input, "Input edge list")->required();
  solve->add_option("--k", solve_args.k, "Parameter k")->required();

  mist::cli::VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Replay a trace and check every certificate");
  verify->add_option("--graph", verify_args.graph, "Original edge list")->required();
  verify->add_option("--trace", verify_args.trace, "Trace written by kernelize")->required();
  verify->add_option("--kernel", verify_args.kernel, "Kernel edge list written by kernelize");

  mist::cli::GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Print a seeded connected graph");
  gen->add_option("--family", gen_args.family, "random-gnm, tree-plus or star-cluster")->required();
  gen->add_option("--n", gen_args.n, "Vertex count")->required();
  gen->add_option("--m", gen_args.m, "Edge count");
  gen->add_option("--seed", gen_args.seed, "Seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return mist::cli::kFormatError;
  }

  if (*kernelize) return mist::cli::run_kernelize(kernelize_args, std::cout, std::cerr);
  if (*solve) {
    solve_args.oracle_max_n = mist::oracle_max_n_from_env();
    return mist::cli::run_solve(solve_args, std::cout, std::cerr);
  }
  if (*verify) return mist::cli::run_verify(verify_args, std::cout, std::cerr);
  return mist::cli::run_gen(gen_args, std::cout, std::cerr);
}
