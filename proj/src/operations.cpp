#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

#include "infobs/errors.hpp"
#include "infobs/operations.hpp"

namespace infobs {

namespace {

void require_same_alphabet(const Alphabet& x, const Alphabet& y, const char* op) {
  if (x != y) throw InputError(std::string(op) + ": alphabet mismatch");
}

}  // namespace

Dfa product_intersection(const Dfa& x, const Dfa& y) {
  require_same_alphabet(x.alphabet(), y.alphabet(), "product_intersection");
  Dfa out(x.alphabet());
  if (!x.has_initial() || !y.has_initial()) return out;
  const auto sigma = static_cast<Label>(x.alphabet().size());

  std::map<std::pair<State, State>, State> index;
  std::vector<std::pair<State, State>> order;
  auto intern = [&](State p, State q) {
    auto [it, inserted] = index.try_emplace({p, q}, static_cast<State>(order.size()));
    if (inserted) {
      order.emplace_back(p, q);
      State s = out.add_state();
      out.set_marked(s, x.is_marked(p) && y.is_marked(q));
    }
    return it->second;
  };
  intern(x.initial(), y.initial());
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto [p, q] = order[i];
    for (Label a = 0; a < sigma; ++a) {
      State tp = x.next(p, a);
      State tq = y.next(q, a);
      if (tp == kNoState || tq == kNoState) continue;
      State t = intern(tp, tq);
      out.set_transition(static_cast<State>(i), a, t);
    }
  }
  out.set_initial(0);
  return out;
}

Nfa nondet_union(std::span<const Nfa> parts) {
  if (parts.empty()) return Nfa{};
  const Alphabet& alphabet = parts.front().alphabet();
  bool keep_names = true;
  std::unordered_set<std::string> seen;
  for (const Nfa& part : parts) {
    require_same_alphabet(alphabet, part.alphabet(), "nondet_union");
    if (!part.has_custom_names()) keep_names = false;
    for (State q = 0; keep_names && q < part.num_states(); ++q)
      if (!seen.insert(part.state_name(q)).second) keep_names = false;
  }

  Nfa out(alphabet);
  for (const Nfa& part : parts) {
    const auto offset = static_cast<State>(out.num_states());
    for (State q = 0; q < part.num_states(); ++q) {
      State s = out.add_state(keep_names ? part.state_name(q) : std::string{});
      out.set_initial(s, part.is_initial(q));
      out.set_marked(s, part.is_marked(q));
    }
    for (State q = 0; q < part.num_states(); ++q)
      for (const Transition& t : part.transitions(q)) out.add_transition(offset + q, t.label, offset + t.target);
  }
  return out;
}

Nfa append_event(const Dfa& dfa, Label event) {
  if (event < 0 || static_cast<std::size_t>(event) >= dfa.alphabet().size()) {
    throw InputError("append_event: event outside the alphabet");
  }
  Nfa out = to_nfa(dfa);
  const StateSet previously_marked = out.marked_states();
  State fresh = out.add_state(dfa.has_custom_names() ? "+" + dfa.alphabet()[event] : std::string{});
  for (State q : previously_marked) {
    out.add_transition(q, event, fresh);
    out.set_marked(q, false);
  }
  out.set_marked(fresh);
  return out;
}

bool is_member(const Dfa& dfa, std::span<const Label> word) {
  if (!dfa.has_initial()) return false;
  State q = dfa.initial();
  for (Label a : word) {
    q = dfa.next(q, a);
    if (q == kNoState) return false;
  }
  return dfa.is_marked(q);
}

bool is_member(const Dfa& dfa, const Word& word) {
  const auto labels = to_labels(dfa.alphabet(), word);
  return is_member(dfa, std::span<const Label>(labels));
}

bool is_member(const Nfa& nfa, const Word& word) {
  const auto labels = to_labels(nfa.alphabet(), word);
  StateSet current = epsilon_closure(nfa, nfa.initial_states());
  for (Label a : labels) {
    StateSet next;
    for (State q : current)
      for (const Transition& t : nfa.transitions(q))
        if (t.label == a) next.push_back(t.target);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    current = epsilon_closure(nfa, std::move(next));
    if (current.empty()) return false;
  }
  return std::any_of(current.begin(), current.end(), [&](State q) { return nfa.is_marked(q); });
}

std::set<Word> enumerate_language(const Dfa& dfa, std::size_t max_length) {
  std::set<Word> words;
  if (!dfa.has_initial()) return words;
  const auto sigma = static_cast<Label>(dfa.alphabet().size());
  Word prefix;
  // Depth-first over (state, prefix); partial transitions prune dead prefixes.
  auto walk = [&](auto&& self, State q) -> void {
    if (dfa.is_marked(q)) words.insert(prefix);
    if (prefix.size() == max_length) return;
    for (Label a = 0; a < sigma; ++a) {
      State t = dfa.next(q, a);
      if (t == kNoState) continue;
      prefix.push_back(dfa.alphabet()[a]);
      self(self, t);
      prefix.pop_back();
    }
  };
  walk(walk, dfa.initial());
  return words;
}

std::set<Word> enumerate_language(const Nfa& nfa, std::size_t max_length) {
  std::set<Word> words;
  const auto sigma = static_cast<Label>(nfa.alphabet().size());
  Word prefix;
  auto walk = [&](auto&& self, const StateSet& current) -> void {
    if (current.empty()) return;
    if (std::any_of(current.begin(), current.end(), [&](State q) { return nfa.is_marked(q); })) {
      words.insert(prefix);
    }
    if (prefix.size() == max_length) return;
    for (Label a = 0; a < sigma; ++a) {
      StateSet next;
      for (State q : current)
        for (const Transition& t : nfa.transitions(q))
          if (t.label == a) next.push_back(t.target);
      if (next.empty()) continue;
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      prefix.push_back(nfa.alphabet()[a]);
      self(self, epsilon_closure(nfa, std::move(next)));
      prefix.pop_back();
    }
  };
  walk(walk, epsilon_closure(nfa, nfa.initial_states()));
  return words;
}

bool equivalent(const Dfa& x, const Dfa& y) {
  require_same_alphabet(x.alphabet(), y.alphabet(), "equivalent");
  return minimize(x) == minimize(y);
}

Dfa with_initial(const Dfa& dfa, State state) {
  Dfa out = dfa;
  out.set_initial(state);
  return out;
}

Nfa with_initial(const Nfa& nfa, State state) {
  Nfa out = nfa;
  for (State q = 0; q < out.num_states(); ++q) out.set_initial(q, q == state);
  if (state >= out.num_states()) throw InputError("unknown state " + std::to_string(state));
  return out;
}

Dfa generated_language(const Dfa& dfa) {
  Dfa out = reachable_part(dfa);
  for (State q = 0; q < out.num_states(); ++q) out.set_marked(q);
  return out;
}

Dfa universal_dfa(const Alphabet& alphabet) {
  Dfa out(alphabet);
  State q = out.add_state();
  for (Label a = 0; a < static_cast<Label>(alphabet.size()); ++a) out.set_transition(q, a, q);
  out.set_marked(q);
  out.set_initial(q);
  return out;
}

Dfa epsilon_dfa(const Alphabet& alphabet) {
  Dfa out(alphabet);
  State q = out.add_state();
  out.set_marked(q);
  out.set_initial(q);
  return out;
}

Dfa empty_dfa(const Alphabet& alphabet) { return Dfa(alphabet); }

Dfa ends_with_dfa(const Alphabet& alphabet, Label event) {
  Dfa out(alphabet);
  State other = out.add_state();
  State last = out.add_state();
  for (Label a = 0; a < static_cast<Label>(alphabet.size()); ++a) {
    out.set_transition(other, a, a == event ? last : other);
    out.set_transition(last, a, a == event ? last : other);
  }
  out.set_marked(last);
  out.set_initial(other);
  return out;
}

Dfa word_dfa(const Alphabet& alphabet, const Word& word) {
  const auto labels = to_labels(alphabet, word);
  Dfa out(alphabet);
  State q = out.add_state();
  out.set_initial(q);
  for (Label a : labels) {
    State t = out.add_state();
    out.set_transition(q, a, t);
    q = t;
  }
  out.set_marked(q);
  return out;
}

bool is_empty_language(const Dfa& dfa) { return trim(dfa).num_states() == 0; }

}  // namespace infobs
