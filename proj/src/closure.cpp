#include "infobs/closure.hpp"

#include <algorithm>

#include "infobs/errors.hpp"

namespace infobs {

namespace {

// Keeps states accepted by `keep`, reachable from the initial state through kept
// states. Names survive any renumbering.
template <typename Keep>
Dfa reachable_through(const Dfa& dfa, Keep keep) {
  Dfa out(dfa.alphabet());
  if (!dfa.has_initial() || !keep(dfa.initial())) return out;
  const auto sigma = static_cast<Label>(dfa.alphabet().size());
  std::vector<State> remap(dfa.num_states(), kNoState);
  std::vector<State> order;
  auto visit = [&](State q) {
    if (remap[q] == kNoState) {
      remap[q] = static_cast<State>(order.size());
      order.push_back(q);
    }
    return remap[q];
  };
  visit(dfa.initial());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Label a = 0; a < sigma; ++a) {
      State t = dfa.next(order[i], a);
      if (t != kNoState && keep(t)) visit(t);
    }
  }
  // Keep the original relative order so untouched automata come back unchanged.
  std::vector<State> kept(order);
  std::sort(kept.begin(), kept.end());
  const bool renumbered = kept.size() != dfa.num_states() || dfa.has_custom_names();
  for (std::size_t i = 0; i < kept.size(); ++i) {
    remap[kept[i]] = out.add_state(renumbered ? dfa.state_name(kept[i]) : std::string{});
    out.set_marked(remap[kept[i]], dfa.is_marked(kept[i]));
  }
  for (State q : kept) {
    for (Label a = 0; a < sigma; ++a) {
      State t = dfa.next(q, a);
      if (t != kNoState && keep(t)) out.set_transition(remap[q], a, remap[t]);
    }
  }
  out.set_initial(remap[dfa.initial()]);
  return out;
}

}  // namespace

Dfa prefix_closure(const Dfa& dfa) {
  Dfa out = trim(dfa);
  for (State q = 0; q < out.num_states(); ++q) out.set_marked(q);
  return out;
}

Dfa right_quotient_event(const Dfa& dfa, Label event) {
  if (event < 0 || static_cast<std::size_t>(event) >= dfa.alphabet().size()) {
    throw InputError("right_quotient_event: event outside the alphabet");
  }
  Dfa out = dfa;
  for (State q = 0; q < dfa.num_states(); ++q) {
    const State t = dfa.next(q, event);
    out.set_marked(q, t != kNoState && dfa.is_marked(t));
  }
  return out;
}

QuotientUnionDfa quotient_union_primed(const Dfa& dfa, const PrimedAlphabet& primed) {
  if (dfa.alphabet() != primed.base()) throw InputError("quotient_union_primed: alphabet differs from the base");
  const Alphabet& base = primed.base();
  const std::size_t n = dfa.num_states();
  QuotientUnionDfa result{Dfa(primed.combined()), static_cast<State>(n)};
  Dfa& out = result.dfa;

  bool index_name_free = true;
  for (State q = 0; q < n; ++q) {
    out.add_state(dfa.has_custom_names() ? dfa.state_name(q) : std::string{});
    if (dfa.state_name(q) == std::to_string(n)) index_name_free = false;
  }
  out.add_state(index_name_free ? std::string{} : std::string("f"));
  out.set_marked(result.sink);

  for (State q = 0; q < n; ++q) {
    for (Label a = 0; a < static_cast<Label>(base.size()); ++a) {
      const State t = dfa.next(q, a);
      if (t == kNoState) continue;
      out.set_transition(q, primed.base_in_combined(a), t);
      if (dfa.is_marked(t)) out.set_transition(q, primed.primed_in_combined(a), result.sink);
    }
  }
  if (dfa.has_initial()) out.set_initial(dfa.initial());
  return result;
}

Dfa supremal_prefix_closed(const Dfa& dfa) {
  return reachable_through(dfa, [&](State q) { return dfa.is_marked(q); });
}

bool is_prefix_closed(const Dfa& dfa) {
  const Dfa t = trim(dfa);
  return t.num_marked() == t.num_states();
}

bool is_prefix_closed(const Nfa& nfa, std::size_t budget) {
  return is_prefix_closed(determinize(nfa, budget));
}

}  // namespace infobs
