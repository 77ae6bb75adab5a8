#include "infobs/inf.hpp"

#include <algorithm>

#include "infobs/errors.hpp"

namespace infobs {

namespace {

std::vector<Label> uncontrollable_labels(const Alphabet& alphabet, const UncontrollableSet& u) {
  std::vector<Label> labels;
  for (const auto& e : u.events) {
    if (!alphabet.contains(e)) throw InputError("uncontrollable event '" + e + "' is not in the alphabet");
    labels.push_back(alphabet.index_of(e));
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

}  // namespace

Nfa build_gh_nfa(const QuotientUnionDfa& q, const Mask& mask, const PrimedAlphabet& primed) {
  if (mask.domain() != primed.base()) throw InputError("build_gh_nfa: mask domain differs from base alphabet");
  if (q.dfa.alphabet() != primed.combined()) throw InputError("build_gh_nfa: automaton is not over Σ ∪ Σ′");
  if (q.sink >= q.dfa.num_states()) throw InputError("build_gh_nfa: sink is not a state");
  const Mask h = lift_to_primed(mask, primed);
  const Nfa image = mask_image(to_nfa(q.dfa), h);
  const Nfa inverse = mask_inverse(image, h, StateSet{q.sink});
  return rename_primed(inverse, primed);
}

Dfa add_epsilon_union(const Dfa& dfa) {
  Dfa out = dfa;
  const State fresh = out.add_state(dfa.has_custom_names() ? "I" : std::string{});
  out.set_marked(fresh);
  if (dfa.has_initial()) {
    for (Label a = 0; a < static_cast<Label>(dfa.alphabet().size()); ++a) {
      if (State t = dfa.next(dfa.initial(), a); t != kNoState) out.set_transition(fresh, a, t);
    }
  }
  out.set_initial(fresh);
  return out;
}

InfOTrace inf_o_trace(const Dfa& k, const Mask& mask, std::size_t budget) {
  if (mask.domain() != k.alphabet()) throw InputError("inf_o: mask domain differs from the automaton alphabet");
  InfOTrace trace;
  InfOStats& stats = trace.result.stats;
  stats.input_states = k.num_states();

  trace.closure = prefix_closure(k);
  stats.closure_states = trace.closure.num_states();
  if (trace.closure.num_states() == 0) {
    trace.result.dfa = empty_dfa(k.alphabet());
    return trace;
  }

  const PrimedAlphabet primed(k.alphabet());
  trace.quotient_union = quotient_union_primed(trace.closure, primed);
  trace.gh_nfa = build_gh_nfa(trace.quotient_union, mask, primed);
  stats.gh_nfa_states = trace.gh_nfa.num_states();

  trace.subsets = subset_construction(trace.gh_nfa, budget);
  const Dfa& subset_dfa = trace.subsets.dfa;
  stats.subset_states = subset_dfa.num_states();
  const State sink = trace.quotient_union.sink;
  for (State s = 0; s < subset_dfa.num_states(); ++s) {
    if (!subset_dfa.is_marked(s)) continue;
    ++stats.marked_subsets;
    const auto& members = trace.subsets.subsets[s];
    if (!std::binary_search(members.begin(), members.end(), sink)) stats.marked_subsets_contain_sink = false;
  }

  trace.with_epsilon = add_epsilon_union(subset_dfa);
  trace.supremal = supremal_prefix_closed(trace.with_epsilon);
  trace.result.dfa = minimize(trace.supremal);
  stats.final_states = trace.result.dfa.num_states();
  return trace;
}

InfOResult inf_o(const Dfa& k, const Mask& mask, std::size_t budget) {
  return inf_o_trace(k, mask, budget).result;
}

Dfa inf_c(const Dfa& k, const UncontrollableSet& uncontrollable) {
  const auto labels = uncontrollable_labels(k.alphabet(), uncontrollable);
  Dfa closure = prefix_closure(k);
  if (closure.num_states() == 0 || labels.empty()) return minimize(closure);
  // Leaving K̄ under an uncontrollable event enters a state that only admits
  // further uncontrollable events.
  const std::size_t n = closure.num_states();
  const State tail = closure.add_state();
  closure.set_marked(tail);
  for (Label u : labels) {
    closure.set_transition(tail, u, tail);
    for (State q = 0; q < n; ++q)
      if (closure.next(q, u) == kNoState) closure.set_transition(q, u, tail);
  }
  return minimize(closure);
}

Dfa inf_c_reference(const Dfa& k, const UncontrollableSet& uncontrollable) {
  const auto labels = uncontrollable_labels(k.alphabet(), uncontrollable);
  // K̄ · Σ_u* as an epsilon-concatenation of two automata.
  Nfa concat = to_nfa(prefix_closure(k));
  const StateSet left_marked = concat.marked_states();
  const State star = concat.add_state();
  concat.set_marked(star);
  for (Label u : labels) concat.add_transition(star, u, star);
  for (State q : left_marked) {
    concat.add_transition(q, kEpsilon, star);
    concat.set_marked(q, false);
  }
  return minimize(determinize(concat));
}

Dfa inf_co(const Dfa& k, const Dfa& plant, const UncontrollableSet& uncontrollable, const Mask& mask) {
  if (k.alphabet() != plant.alphabet()) throw InputError("inf_co: specification and plant alphabets differ");
  const Dfa controllable = inf_c(k, uncontrollable);
  const Dfa observable = inf_o(controllable, mask).dfa;
  return minimize(product_intersection(observable, generated_language(plant)));
}

}  // namespace infobs
