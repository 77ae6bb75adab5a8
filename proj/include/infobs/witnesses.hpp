#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "infobs/automata.hpp"

namespace infobs {

/// n-state chain over {a,b}: i -> i+1 on a and b, an a-loop on n-1, all marked.
/// Its primed quotient union needs n+1 states. Requires n >= 2.
Dfa gen_quotient_tight(std::size_t n);

/// n-state DFA over {a,b,c} whose infimal observable superlanguage under the
/// projection erasing c has at least ⌈3/4·2ⁿ⌉-1 states. Requires n >= 2.
Dfa gen_lower_bound(std::size_t n);

/// First eight primes.
inline constexpr std::size_t kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19};
inline constexpr std::size_t kMaxPrimeIndex = std::size(kPrimes);

/// Product of the first n primes.
std::uint64_t primorial(std::size_t n);

/// Unary NFA: union of a one-state {ε} DFA and cycles of the first n prime
/// lengths marking every non-zero residue. States are named i_k. 1 <= n <= 8.
Nfa gen_prime_nfa(std::size_t n);

/// Two-state DFA over {a,b,c} with quotient sets F_a={0,1}, F_b={0}, F_c=∅.
Dfa gen_fig3();

/// Three-state prefix-closed NFA over {a,b} marking {ε, a, ab} with an unmarked state.
Nfa gen_fig4();

using WordPredicate = std::function<bool(const Word&)>;

struct FoolingSet {
  std::vector<std::pair<Word, Word>> pairs;
};

/// x_i y_i in the language for every i, and for i != j at least one of
/// x_i y_j, x_j y_i outside it.
bool fooling_set_check(const WordPredicate& member, const FoolingSet& set);

/// {(aⁱ, a^{m-1-i}) : 0 <= i < m}
FoolingSet unary_chain_fooling_set(const std::string& letter, std::size_t m);

}  // namespace infobs
