#pragma once

#include "infobs/automata.hpp"
#include "infobs/masks.hpp"
#include "infobs/operations.hpp"

namespace infobs {

/// Trims to co-reachable states, then marks everything left.
Dfa prefix_closure(const Dfa& dfa);

/// Same structure; marks the states whose `event`-successor is marked.
Dfa right_quotient_event(const Dfa& dfa, Label event);

/// DFA for ∪_e (L/e)·e′ together with its only marked state.
struct QuotientUnionDfa {
  Dfa dfa;
  State sink = kNoState;
};

/// Adds one marked state `sink` with no outgoing moves and an e′-move into it
/// from every state whose e-successor is marked. Output alphabet is Σ ∪ Σ′.
QuotientUnionDfa quotient_union_primed(const Dfa& dfa, const PrimedAlphabet& primed);

/// Drops unmarked states and their moves: the largest prefix-closed sublanguage.
Dfa supremal_prefix_closed(const Dfa& dfa);

bool is_prefix_closed(const Dfa& dfa);

/// Decided through determinization; throws ResourceError past `budget` subsets.
bool is_prefix_closed(const Nfa& nfa, std::size_t budget = kDefaultSubsetBudget);

}  // namespace infobs
