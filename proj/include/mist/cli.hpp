#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace mist::cli {

enum ExitCode : int {
  kSuccess = 0,      // success, or YES
  kNegative = 1,     // NO, or verification failure
  kFormatError = 2,  // unreadable or malformed input, bad arguments
  kPrecondition = 3  // e.g. disconnected graph, oracle limit exceeded
};

struct KernelizeArgs {
  std::string input;
  int k = 0;
  std::optional<std::string> out_graph;
  std::optional<std::string> out_trace;
};

struct SolveArgs {
  std::string input;
  int k = 0;
  int oracle_max_n = 18;
};

struct VerifyArgs {
  std::string graph;
  std::string trace;
  std::optional<std::string> kernel;
};

struct GenArgs {
  std::string family;
  int n = 0;
  std::optional<long> m;
  std::uint64_t seed = 0;
};

int run_kernelize(const KernelizeArgs& args, std::ostream& out, std::ostream& err);
int run_solve(const SolveArgs& args, std::ostream& out, std::ostream& err);
int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);
int run_gen(const GenArgs& args, std::ostream& out, std::ostream& err);

}  // namespace mist::cli
