#include "infobs/witnesses.hpp"

#include "infobs/errors.hpp"
#include "infobs/operations.hpp"

namespace infobs {

namespace {

// Rules may coincide but never contradict.
void add_rule(Dfa& dfa, State from, Label label, State to) {
  const State existing = dfa.next(from, label);
  if (existing != kNoState && existing != to) {
    throw std::logic_error("contradictory transition rules for state " + std::to_string(from));
  }
  dfa.set_transition(from, label, to);
}

}  // namespace

Dfa gen_quotient_tight(std::size_t n) {
  if (n < 2) throw InputError("quotient family needs n >= 2");
  Dfa dfa(Alphabet{"a", "b"});
  dfa.add_states(n);
  const Label a = 0;
  const Label b = 1;
  for (State i = 0; i + 1 < n; ++i) {
    dfa.set_transition(i, a, i + 1);
    dfa.set_transition(i, b, i + 1);
  }
  dfa.set_transition(static_cast<State>(n - 1), a, static_cast<State>(n - 1));
  for (State i = 0; i < n; ++i) dfa.set_marked(i);
  dfa.set_initial(0);
  return dfa;
}

Dfa gen_lower_bound(std::size_t n) {
  if (n < 2) throw InputError("lower-bound family needs n >= 2");
  Dfa dfa(Alphabet{"a", "b", "c"});
  dfa.add_states(n);
  const Label a = 0;
  const Label b = 1;
  const Label c = 2;
  const auto last = static_cast<State>(n - 1);
  for (State i = 0; i < n; ++i) add_rule(dfa, i, a, static_cast<State>((i + 1) % n));
  for (State i = 1; i + 3 <= n; ++i) add_rule(dfa, i, b, i + 1);
  add_rule(dfa, static_cast<State>(n - 2), b, 0);
  add_rule(dfa, 0, b, 0);
  add_rule(dfa, last, b, last);
  add_rule(dfa, last, c, 0);
  dfa.set_marked(0);
  dfa.set_initial(0);
  return dfa;
}

std::uint64_t primorial(std::size_t n) {
  if (n > kMaxPrimeIndex) throw InputError("primorial: only the first " + std::to_string(kMaxPrimeIndex) + " primes are tabulated");
  std::uint64_t product = 1;
  for (std::size_t i = 0; i < n; ++i) product *= kPrimes[i];
  return product;
}

Nfa gen_prime_nfa(std::size_t n) {
  if (n < 1 || n > kMaxPrimeIndex) throw InputError("prime family needs 1 <= n <= 8");
  const Alphabet unary{"a"};
  std::vector<Nfa> parts;

  Nfa epsilon_only(unary);
  const State only = epsilon_only.add_state("0_0");
  epsilon_only.set_initial(only);
  epsilon_only.set_marked(only);
  parts.push_back(std::move(epsilon_only));

  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t p = kPrimes[k - 1];
    Nfa cycle(unary);
    for (std::size_t i = 0; i < p; ++i) {
      const State q = cycle.add_state(std::to_string(i) + "_" + std::to_string(k));
      cycle.set_marked(q, i != 0);
    }
    for (std::size_t i = 0; i < p; ++i) cycle.add_transition(static_cast<State>(i), 0, static_cast<State>((i + 1) % p));
    cycle.set_initial(0);
    parts.push_back(std::move(cycle));
  }
  return nondet_union(parts);
}

Dfa gen_fig3() {
  Dfa dfa(Alphabet{"a", "b", "c"});
  dfa.add_states(2);
  dfa.set_transition(0, "a", 1);
  dfa.set_transition(0, "b", 1);
  dfa.set_transition(1, "a", 1);
  dfa.set_transition(1, "c", 0);
  dfa.set_marked(1);
  dfa.set_initial(0);
  return dfa;
}

Nfa gen_fig4() {
  Nfa nfa(Alphabet{"a", "b"});
  nfa.add_states(3);
  nfa.add_transition(0, "a", 1);
  nfa.add_transition(0, "a", 2);
  nfa.add_transition(1, "b", 2);
  nfa.set_initial(0);
  nfa.set_marked(0);
  nfa.set_marked(2);
  return nfa;
}

bool fooling_set_check(const WordPredicate& member, const FoolingSet& set) {
  if (set.pairs.empty()) throw InputError("a fooling set must be nonempty");
  const auto concat = [](const Word& x, const Word& y) {
    Word w = x;
    w.insert(w.end(), y.begin(), y.end());
    return w;
  };
  for (const auto& [x, y] : set.pairs)
    if (!member(concat(x, y))) return false;
  for (std::size_t i = 0; i < set.pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < set.pairs.size(); ++j) {
      const auto& [xi, yi] = set.pairs[i];
      const auto& [xj, yj] = set.pairs[j];
      if (member(concat(xi, yj)) && member(concat(xj, yi))) return false;
    }
  }
  return true;
}

FoolingSet unary_chain_fooling_set(const std::string& letter, std::size_t m) {
  FoolingSet set;
  for (std::size_t i = 0; i < m; ++i) set.pairs.emplace_back(Word(i, letter), Word(m - 1 - i, letter));
  return set;
}

}  // namespace infobs
