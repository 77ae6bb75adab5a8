#include "infobs/random_instances.hpp"

#include "infobs/errors.hpp"
#include "infobs/operations.hpp"

namespace infobs {

std::size_t InstanceRng::uniform(std::size_t low, std::size_t high) {
  return low + static_cast<std::size_t>(engine_() % (high - low + 1));
}

bool InstanceRng::chance(double p) {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
}

Alphabet standard_alphabet(std::size_t size) {
  if (size > 26) throw InputError("standard alphabets have at most 26 events");
  std::vector<std::string> events;
  for (std::size_t i = 0; i < size; ++i) events.emplace_back(1, static_cast<char>('a' + i));
  return Alphabet(std::move(events));
}

Dfa random_dfa(InstanceRng& rng, const RandomDfaOptions& options) {
  const Alphabet sigma = standard_alphabet(rng.uniform(options.min_events, options.max_events));
  const std::size_t n = rng.uniform(1, options.max_states);
  Dfa dfa(sigma);
  dfa.add_states(n);
  for (State q = 0; q < n; ++q)
    for (Label a = 0; a < static_cast<Label>(sigma.size()); ++a)
      if (rng.chance(options.density)) dfa.set_transition(q, a, static_cast<State>(rng.uniform(0, n - 1)));
  dfa.set_initial(0);
  if (options.prefix_closed) {
    for (State q = 0; q < n; ++q) dfa.set_marked(q);
    return reachable_part(dfa);
  }
  for (State q = 0; q < n; ++q) dfa.set_marked(q, rng.chance(0.4));
  return dfa;
}

Mask random_mask(InstanceRng& rng, const Alphabet& sigma) {
  if (rng.chance(0.5)) {
    std::vector<std::string> observable;
    for (const auto& e : sigma.events())
      if (rng.chance(0.5)) observable.push_back(e);
    return make_projection(sigma, observable);
  }
  const std::size_t width = rng.uniform(1, std::max<std::size_t>(1, sigma.size()));
  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < width; ++i) tokens.push_back("o" + std::to_string(i));
  const Alphabet delta(tokens);
  std::vector<Label> image(sigma.size());
  for (auto& y : image) y = rng.chance(0.35) ? kEpsilon : static_cast<Label>(rng.uniform(0, width - 1));
  return Mask(sigma, delta, std::move(image));
}

Nfa random_all_marked_nfa(InstanceRng& rng, std::size_t max_states, const Alphabet& sigma) {
  const std::size_t n = rng.uniform(1, max_states);
  Nfa nfa(sigma);
  nfa.add_states(n);
  for (State q = 0; q < n; ++q) {
    nfa.set_marked(q);
    nfa.set_initial(q, rng.chance(0.3));
    for (State t = 0; t < n; ++t) {
      if (rng.chance(0.1)) nfa.add_transition(q, kEpsilon, t);
      for (Label a = 0; a < static_cast<Label>(sigma.size()); ++a)
        if (rng.chance(0.25)) nfa.add_transition(q, a, t);
    }
  }
  if (nfa.initial_states().empty()) nfa.set_initial(0);
  return nfa;
}

}  // namespace infobs
