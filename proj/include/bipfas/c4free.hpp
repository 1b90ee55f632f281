#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "bipfas/error.hpp"
#include "bipfas/graph.hpp"

namespace bipfas {

/// x -> y -> x2 -> y2 -> x, stored as (x, y, x2, y2).
struct FourCycle {
  std::array<VertexRef, 4> v;

  std::array<Arc, 4> arcs() const {
    return {{{v[0], v[1]}, {v[1], v[2]}, {v[2], v[3]}, {v[3], v[0]}}};
  }
  auto operator<=>(const FourCycle&) const = default;
};

bool is_four_cycle(const BipartiteDigraph& d, const FourCycle& c);

/// First 4-cycle in lexicographic (x, x2, y, y2) scan order, with x < x2.
std::optional<FourCycle> find_4cycle(const BipartiteDigraph& d);

class FourCycleError : public Error {
 public:
  explicit FourCycleError(const FourCycle& witness);
  const FourCycle& witness() const noexcept { return witness_; }

 private:
  FourCycle witness_;
};

struct TrimResult {
  Subgraph remaining;              ///< maps back to the input graph
  std::vector<VertexRef> removed;  ///< sorted, input labels
};

/// Repeatedly drops vertices with no in-neighbour or no out-neighbour.
TrimResult trim_acyclic_vertices(const BipartiteDigraph& d);

enum class RecursionCase { Direct, Reversed };

/// One decomposition step. `u` is in input labels; counts refer to the node
/// graph after trimming (and after reversal for RecursionCase::Reversed).
struct RecursionRecord {
  std::size_t depth = 0;
  VertexRef u;
  RecursionCase kind = RecursionCase::Direct;
  std::size_t first = 0;
  std::size_t sec = 0;
  std::size_t cut_size = 0;  ///< |E|
  std::size_t node_lambda = 0;
  std::size_t lambda1 = 0;  ///< bound handed to the (x1, y1+y3) branch
  std::size_t lambda2 = 0;  ///< bound handed to the (x2+u, y2) branch
};

struct FasCertificate {
  std::vector<Arc> fas;  ///< sorted, input labels
  std::size_t bound = 0;  ///< Lambda(input)
  std::vector<RecursionRecord> trace;
};

struct FasOptions {
  /// Re-derive every per-node property (cut size by enumeration, the
  /// structural no-arc facts, progress, the Lambda split) and throw
  /// InvariantViolation on the first mismatch. Costly; meant for tests.
  bool check_invariants = false;
};

/// Feedback arc set of size at most Lambda(D) for a 4-cycle-free D.
/// Throws FourCycleError (code HasFourCycle) when D has a 4-cycle.
FasCertificate fas_c4free(const BipartiteDigraph& d, const FasOptions& options = {});

}  // namespace bipfas
