#include "bipfas/engine.hpp"

#include <algorithm>

#include "bipfas/error.hpp"

namespace bipfas {

std::vector<Arc> backward_arcs(const LinearOrder& order, const FourCycle& cycle) {
  std::vector<Arc> out;
  for (const Arc& a : cycle.arcs()) {
    const auto t = order.position(a.tail);
    const auto h = order.position(a.head);
    if (!t) throw Error(ErrorCode::VertexNotInOrder, to_string(a.tail));
    if (!h) throw Error(ErrorCode::VertexNotInOrder, to_string(a.head));
    if (*t > *h) out.push_back(a);
  }
  return out;
}

SolveOutcome solve(const BipartiteDigraph& t, std::size_t k) {
  if (!is_tournament(t)) {
    throw Error(ErrorCode::NotATournament,
                std::to_string(absent_pair_count(t)) + " non-adjacent pairs");
  }
  if (k == 0) return CycleCertificate{0, {}};

  Packing packing = greedy_pack(t, k);
  if (packing.cycles.size() >= k) return CycleCertificate{k, std::move(packing.cycles)};

  FasResult r;
  r.k = k;
  r.bound = 7 * (static_cast<std::int64_t>(k) - 1);
  r.packing = std::move(packing.cycles);
  r.lemma = fas_c4free(packing.residual);
  r.lemma_part = r.lemma.fas;

  auto order = topological_order(delete_arcs(packing.residual, r.lemma_part));
  if (!std::holds_alternative<LinearOrder>(order)) {
    throw Error(ErrorCode::InvariantViolation, "residual minus lemma part is cyclic");
  }
  r.order = std::get<LinearOrder>(std::move(order));

  for (const FourCycle& c : r.packing) {
    for (const Arc& a : backward_arcs(r.order, c)) r.backward_part.push_back(a);
  }
  std::sort(r.backward_part.begin(), r.backward_part.end());
  r.fas = r.lemma_part;
  r.fas.insert(r.fas.end(), r.backward_part.begin(), r.backward_part.end());
  std::sort(r.fas.begin(), r.fas.end());

  SolveOutcome out = std::move(r);
  if (!is_valid_outcome(t, out)) {
    throw Error(ErrorCode::InvariantViolation, "assembled feedback arc set failed verification");
  }
  return out;
}

bool is_valid_outcome(const BipartiteDigraph& t, const SolveOutcome& outcome) {
  if (const auto* c = std::get_if<CycleCertificate>(&outcome)) {
    return c->cycles.size() >= c->k && is_valid_packing(t, c->cycles);
  }
  const FasResult& r = std::get<FasResult>(outcome);
  if (r.k == 0) return false;
  const std::size_t slots = r.k - 1;
  if (r.packing.size() > slots || !is_valid_packing(t, r.packing)) return false;
  if (r.lemma_part.size() > 4 * slots || r.backward_part.size() > 3 * slots) return false;
  if (static_cast<std::int64_t>(r.fas.size()) > r.bound) return false;
  for (const Arc& a : r.fas)
    if (!t.has_arc(a)) return false;
  std::vector<Arc> sorted = r.fas;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  std::vector<Arc> parts = r.lemma_part;
  parts.insert(parts.end(), r.backward_part.begin(), r.backward_part.end());
  std::sort(parts.begin(), parts.end());
  if (parts != sorted) return false;
  return is_feedback_arc_set(t, r.fas);
}

}  // namespace bipfas
