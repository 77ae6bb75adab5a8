#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "infobs/automata.hpp"
#include "infobs/closure.hpp"
#include "infobs/masks.hpp"
#include "infobs/operations.hpp"

namespace infobs {

/// State counts at each stage of the infimal observable construction.
struct InfOStats {
  std::size_t input_states = 0;          // n: states of the input DFA
  std::size_t closure_states = 0;        // DFA for the prefix closure
  std::size_t gh_nfa_states = 0;         // NFA after mask image / inverse / renaming
  std::size_t subset_states = 0;         // determinized NFA
  std::size_t marked_subsets = 0;
  std::size_t final_states = 0;          // minimal result
  bool marked_subsets_contain_sink = true;
};

struct InfOResult {
  Dfa dfa;
  InfOStats stats;
};

/// Every intermediate of one run, for inspection by tests and reports.
struct InfOTrace {
  Dfa closure;
  QuotientUnionDfa quotient_union;
  Nfa gh_nfa;
  SubsetConstruction subsets;
  Dfa with_epsilon;
  Dfa supremal;
  InfOResult result;
};

/// NFA for g(h⁻¹h(L_m(q)) ∩ Σ*Σ′). The intersection is structural: no
/// self-loops are added on the sink.
Nfa build_gh_nfa(const QuotientUnionDfa& q, const Mask& mask, const PrimedAlphabet& primed);

/// New marked initial state copying the old initial state's moves.
Dfa add_epsilon_union(const Dfa& dfa);

/// Infimal prefix-closed observable superlanguage of L_m(k) wrt Σ* and `mask`.
InfOResult inf_o(const Dfa& k, const Mask& mask, std::size_t budget = kDefaultSubsetBudget);
InfOTrace inf_o_trace(const Dfa& k, const Mask& mask, std::size_t budget = kDefaultSubsetBudget);

/// Same language through the intersection/projection formula, built only from
/// generic operations. Used as an independent oracle for inf_o.
Dfa inf_o_reference(const Dfa& k, const Mask& mask);

struct UncontrollableSet {
  std::vector<std::string> events;
};

/// Infimal prefix-closed controllable superlanguage wrt Σ*: K̄·Σ_u*.
Dfa inf_c(const Dfa& k, const UncontrollableSet& uncontrollable);

/// K̄·Σ_u* through generic concatenation; the oracle for inf_c.
Dfa inf_c_reference(const Dfa& k, const UncontrollableSet& uncontrollable);

/// Infimal prefix-closed controllable observable superlanguage wrt L(plant).
/// Only the generated language of `plant` is used.
Dfa inf_co(const Dfa& k, const Dfa& plant, const UncontrollableSet& uncontrollable, const Mask& mask);

/// Definition-level bounded fixpoint. Starts from the words of K̄ up to
/// `work_length` and closes under the observability rule (s, s′ in, P(s)=P(s′),
/// se in ⇒ s′e in) and, when `uncontrollable` is nonempty, under uncontrollable
/// extensions, adding words of length at most `work_length`. The witness s may
/// also be any word of K̄, of any length. Returns the words up to
/// `check_length`; always a subset of the true infimal language restricted to
/// `check_length`.
std::set<Word> inf_o_fixpoint_bounded(const Dfa& k, const Mask& mask, std::size_t check_length,
                                      std::size_t work_length, const UncontrollableSet& uncontrollable = {});

/// No triple (s, s′, e) with s, s′, se in L, P(s)=P(s′), s′e outside L and
/// |se|, |s′e| ≤ length. Throws InputError unless `lang` is prefix-closed.
bool is_observable_bounded(const Dfa& lang, const Mask& mask, std::size_t length);

/// w in L and u uncontrollable with wu ∈ L(plant), |wu| ≤ length ⇒ wu in L.
bool is_controllable_bounded(const Dfa& lang, const Dfa& plant, const UncontrollableSet& uncontrollable,
                             std::size_t length);

/// Words of length ≤ length in the marked language.
std::size_t count_words_up_to(const Dfa& dfa, std::size_t length);

}  // namespace infobs
