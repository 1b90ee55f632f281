#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "bipfas/c4free.hpp"
#include "bipfas/graph.hpp"
#include "bipfas/packing.hpp"

namespace bipfas {

/// Arcs of `cycle` that point backwards in `order`. Throws VertexNotInOrder.
std::vector<Arc> backward_arcs(const LinearOrder& order, const FourCycle& cycle);

/// k arc-disjoint 4-cycles of the tournament.
struct CycleCertificate {
  std::size_t k = 0;
  std::vector<FourCycle> cycles;
};

/// A feedback arc set assembled from a maximal packing of fewer than k
/// cycles: the c4-free part on the unpacked arcs plus the backward arcs of
/// the packed cycles under a topological order of what remains.
struct FasResult {
  std::size_t k = 0;
  std::vector<Arc> fas;            ///< lemma_part + backward_part, sorted
  std::vector<Arc> lemma_part;     ///< FAS of the packing residual
  std::vector<Arc> backward_part;  ///< backward packed arcs, sorted
  LinearOrder order;               ///< topological order of residual - lemma_part
  std::vector<FourCycle> packing;  ///< the maximal packing used
  FasCertificate lemma;            ///< certificate of lemma_part
  std::int64_t bound = 0;          ///< 7 (k - 1)
};

using SolveOutcome = std::variant<CycleCertificate, FasResult>;

/// For k = 0 the empty packing is returned; the cycle side holds vacuously.
/// Throws NotATournament when T has an absent pair.
SolveOutcome solve(const BipartiteDigraph& t, std::size_t k);

/// Re-checks every field of an outcome against the tournament.
bool is_valid_outcome(const BipartiteDigraph& t, const SolveOutcome& outcome);

}  // namespace bipfas
