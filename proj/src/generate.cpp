#include "bipfas/generate.hpp"

#include <random>

#include "bipfas/error.hpp"
#include "bipfas/packing.hpp"

namespace bipfas::gen {

BipartiteDigraph random_bt(const GenSpec& spec) {
  if (!(spec.bias >= 0.0 && spec.bias <= 1.0)) {
    throw Error(ErrorCode::OutOfRange, "bias " + std::to_string(spec.bias) + " outside [0, 1]");
  }
  std::mt19937_64 engine(spec.seed);
  std::vector<Orientation> states(spec.m * spec.n);
  for (Orientation& s : states) {
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    s = u < spec.bias ? Orientation::ToY : Orientation::ToX;
  }
  return BipartiteDigraph::from_orientations(spec.m, spec.n, std::move(states));
}

BipartiteDigraph random_c4free(const GenSpec& spec) {
  BipartiteDigraph d = greedy_pack(random_bt(spec)).residual;
  if (find_4cycle(d)) throw Error(ErrorCode::InvariantViolation, "stripped instance has a 4-cycle");
  return d;
}

TournamentRange::TournamentRange(std::size_t m, std::size_t n) : m_(m), n_(n) {}

BipartiteDigraph TournamentRange::at(std::uint64_t code) const {
  std::vector<Orientation> states(m_ * n_);
  for (std::size_t p = 0; p < states.size(); ++p) {
    states[p] = ((code >> p) & 1U) != 0 ? Orientation::ToX : Orientation::ToY;
  }
  return BipartiteDigraph::from_orientations(m_, n_, std::move(states));
}

TournamentRange enumerate_bt(std::size_t m, std::size_t n) {
  if (m * n > kMaxEnumeratedPairs) {
    throw Error(ErrorCode::TooLarge, std::to_string(m * n) + " pairs, limit " +
                                         std::to_string(kMaxEnumeratedPairs));
  }
  return {m, n};
}

}  // namespace bipfas::gen
