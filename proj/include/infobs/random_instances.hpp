#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "infobs/automata.hpp"
#include "infobs/masks.hpp"

namespace infobs {

/// Seeded generator; draws are reduced by hand so sequences are identical across
/// standard libraries.
class InstanceRng {
 public:
  explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [low, high].
  std::size_t uniform(std::size_t low, std::size_t high);
  /// True with probability p.
  bool chance(double p);

 private:
  std::mt19937_64 engine_;
};

struct RandomDfaOptions {
  std::size_t max_states = 6;
  std::size_t max_events = 4;
  std::size_t min_events = 1;
  double density = 0.8;
  /// Mark every state and keep the reachable part.
  bool prefix_closed = false;
};

/// Events are "a", "b", ... in order.
Alphabet standard_alphabet(std::size_t size);

Dfa random_dfa(InstanceRng& rng, const RandomDfaOptions& options);

/// Half the time a natural projection, otherwise a general mask onto fresh
/// observation tokens with some events erased.
Mask random_mask(InstanceRng& rng, const Alphabet& sigma);

/// NFA with every state marked, random epsilon and labelled moves.
Nfa random_all_marked_nfa(InstanceRng& rng, std::size_t max_states, const Alphabet& sigma);

}  // namespace infobs
