#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <vector>

#include "infobs/automata.hpp"

namespace infobs {

/// Default ceiling on subset-automaton states before a ResourceError.
inline constexpr std::size_t kDefaultSubsetBudget = std::size_t{1} << 20;

/// Smallest superset of `states` closed under epsilon moves.
StateSet epsilon_closure(const Nfa& nfa, StateSet states);

/// Reachable part of the subset automaton, with the NFA states behind each
/// subset state. The empty subset is never materialized (partial DFA).
struct SubsetConstruction {
  Dfa dfa;
  std::vector<StateSet> subsets;
};

/// Subset states are numbered breadth-first under alphabet order and named
/// "{p,q,...}" from the sorted member names. Throws ResourceError past `budget`.
SubsetConstruction subset_construction(const Nfa& nfa, std::size_t budget = kDefaultSubsetBudget);
Dfa determinize(const Nfa& nfa, std::size_t budget = kDefaultSubsetBudget);

/// States reachable from the initial state.
Dfa reachable_part(const Dfa& dfa);
/// States both reachable and co-reachable to a marked state; keeps names.
Dfa trim(const Dfa& dfa);

/// Minimal partial DFA of the marked language, canonically numbered
/// breadth-first from the initial state under alphabet order. Idempotent.
Dfa minimize(const Dfa& dfa);

/// Reachable product; marks L_m(x) ∩ L_m(y).
Dfa product_intersection(const Dfa& x, const Dfa& y);

/// Disjoint union of the parts with the union of their initial and marked sets.
Nfa nondet_union(std::span<const Nfa> parts);

/// NFA for L_m(dfa)·event: one fresh marked state entered by `event` from every
/// previously marked state, which become unmarked.
Nfa append_event(const Dfa& dfa, Label event);

bool is_member(const Nfa& nfa, const Word& word);
bool is_member(const Dfa& dfa, const Word& word);
bool is_member(const Dfa& dfa, std::span<const Label> word);

/// All marked words of length at most `max_length`.
std::set<Word> enumerate_language(const Nfa& nfa, std::size_t max_length);
std::set<Word> enumerate_language(const Dfa& dfa, std::size_t max_length);

/// Language equality via canonical minimal forms.
bool equivalent(const Dfa& x, const Dfa& y);

/// Copy of `dfa` started from `state` instead of its initial state.
Dfa with_initial(const Dfa& dfa, State state);

/// Copy of `nfa` whose only initial state is `state`.
Nfa with_initial(const Nfa& nfa, State state);

/// Every reachable state marked: the generated language L(dfa).
Dfa generated_language(const Dfa& dfa);

/// One-state automata for Σ*, {ε} and the empty DFA.
Dfa universal_dfa(const Alphabet& alphabet);
Dfa epsilon_dfa(const Alphabet& alphabet);
Dfa empty_dfa(const Alphabet& alphabet);

/// Two-state DFA for Σ*·event.
Dfa ends_with_dfa(const Alphabet& alphabet, Label event);

/// Minimal DFA for a single word.
Dfa word_dfa(const Alphabet& alphabet, const Word& word);

bool is_empty_language(const Dfa& dfa);

}  // namespace infobs
