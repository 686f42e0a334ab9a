#pragma once

#include <optional>
#include <string>

#include "mist/graph.hpp"
#include "mist/io.hpp"

namespace mist {

/// Replays a stored trace against its input graph and checks every reduction
/// (certificate invariants first, then the recorded surgery) and the final
/// outcome. `kernel_text` is the serialized kernel graph, required when the
/// trace ends in a kernel. Returns the first failure as
/// "reduction <i>: <invariant>" or "<invariant>", or nullopt if all pass.
std::optional<std::string> trace_violation(const Graph& input, const TraceDocument& trace,
                                           const std::optional<std::string>& kernel_text);

}  // namespace mist
