#include "infobs/identities.hpp"

#include "infobs/closure.hpp"
#include "infobs/errors.hpp"
#include "infobs/operations.hpp"

namespace infobs {

namespace {

Dfa observe_and_explain(const Dfa& dfa, const Mask& mask) {
  const Dfa observed = determinize(mask_image(to_nfa(dfa), mask));
  return determinize(mask_inverse(to_nfa(observed), mask));
}

// Same automaton over a larger alphabet.
Dfa embed(const Dfa& dfa, const Alphabet& wider) {
  Dfa out(wider);
  out.add_states(dfa.num_states());
  for (State q = 0; q < dfa.num_states(); ++q) {
    out.set_marked(q, dfa.is_marked(q));
    for (Label a = 0; a < static_cast<Label>(dfa.alphabet().size()); ++a)
      if (State t = dfa.next(q, a); t != kNoState) out.set_transition(q, wider.index_of(dfa.alphabet()[a]), t);
  }
  if (dfa.has_initial()) out.set_initial(dfa.initial());
  return out;
}

void require_domain(const Dfa& k, const Mask& mask) {
  if (mask.domain() != k.alphabet()) throw InputError("mask domain differs from the automaton alphabet");
}

}  // namespace

Dfa quotient_side(const Dfa& k, Label event, const Mask& mask) {
  require_domain(k, mask);
  const Dfa explained = observe_and_explain(right_quotient_event(k, event), mask);
  return minimize(determinize(append_event(explained, event)));
}

Dfa intersection_side(const Dfa& k, Label event, const Mask& mask) {
  require_domain(k, mask);
  const Dfa continued = product_intersection(determinize(append_event(k, event)), k);
  const Dfa explained = observe_and_explain(continued, mask);
  return minimize(product_intersection(explained, ends_with_dfa(k.alphabet(), event)));
}

Dfa direct_quotient_union(const Dfa& k, const Mask& mask) {
  require_domain(k, mask);
  std::vector<Nfa> parts;
  for (Label e = 0; e < static_cast<Label>(k.alphabet().size()); ++e)
    parts.push_back(to_nfa(quotient_side(k, e, mask)));
  if (parts.empty()) return empty_dfa(k.alphabet());
  return minimize(determinize(nondet_union(parts)));
}

Dfa primed_quotient_union(const Dfa& k, const Mask& mask) {
  require_domain(k, mask);
  const PrimedAlphabet primed(k.alphabet());
  const Alphabet& both = primed.combined();
  if (k.alphabet().empty()) return empty_dfa(k.alphabet());

  std::vector<Nfa> parts;
  for (Label e = 0; e < static_cast<Label>(k.alphabet().size()); ++e) {
    const Dfa quotient = embed(right_quotient_event(k, e), both);
    parts.push_back(append_event(quotient, primed.primed_in_combined(e)));
  }
  const Dfa primed_union = determinize(nondet_union(parts));

  const Mask h = lift_to_primed(mask, primed);
  const Dfa explained = observe_and_explain(primed_union, h);

  // Σ*Σ′ over the combined alphabet.
  Dfa ends_primed(both);
  const State other = ends_primed.add_state();
  const State last = ends_primed.add_state();
  for (Label a = 0; a < static_cast<Label>(both.size()); ++a) {
    const bool is_primed = primed.primed().contains(both[a]);
    ends_primed.set_transition(other, a, is_primed ? last : other);
    ends_primed.set_transition(last, a, is_primed ? last : other);
  }
  ends_primed.set_initial(other);
  ends_primed.set_marked(last);

  const Dfa restricted = product_intersection(explained, ends_primed);
  return minimize(determinize(rename_primed(to_nfa(restricted), primed)));
}

}  // namespace infobs
