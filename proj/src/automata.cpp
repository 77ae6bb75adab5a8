#include "infobs/automata.hpp"

#include <algorithm>

#include "infobs/errors.hpp"

namespace infobs {

std::string to_string(const Word& word) {
  if (word.empty()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += word[i];
  }
  return out;
}

namespace {

// Names are stored only once some state departs from its decimal index.
State push_named(std::vector<std::string>& names, std::size_t index, std::string name) {
  if (!names.empty()) {
    names.push_back(name.empty() ? std::to_string(index) : std::move(name));
  } else if (!name.empty() && name != std::to_string(index)) {
    names.reserve(index + 1);
    for (std::size_t i = 0; i < index; ++i) names.push_back(std::to_string(i));
    names.push_back(std::move(name));
  }
  return static_cast<State>(index);
}

}  // namespace

// ---------------------------------------------------------------- Nfa

State Nfa::add_state(std::string name) {
  const std::size_t index = out_.size();
  out_.emplace_back();
  initial_.push_back(false);
  marked_.push_back(false);
  return push_named(names_, index, std::move(name));
}

void Nfa::add_states(std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) add_state();
}

void Nfa::check_state(State state) const {
  if (state >= out_.size()) throw InputError("unknown state " + std::to_string(state));
}

void Nfa::add_transition(State from, Label label, State to) {
  check_state(from);
  check_state(to);
  if (label != kEpsilon && (label < 0 || static_cast<std::size_t>(label) >= alphabet_.size())) {
    throw InputError("label " + std::to_string(label) + " outside the alphabet");
  }
  auto& list = out_[from];
  Transition t{label, to};
  auto it = std::lower_bound(list.begin(), list.end(), t);
  if (it == list.end() || *it != t) list.insert(it, t);
}

void Nfa::add_transition(State from, std::string_view event, State to) {
  add_transition(from, event == kEpsilonToken ? kEpsilon : alphabet_.index_of(event), to);
}

void Nfa::set_initial(State state, bool initial) {
  check_state(state);
  initial_[state] = initial;
}

void Nfa::set_marked(State state, bool marked) {
  check_state(state);
  marked_[state] = marked;
}

std::size_t Nfa::num_transitions() const noexcept {
  std::size_t total = 0;
  for (const auto& list : out_) total += list.size();
  return total;
}

bool Nfa::has_epsilon_transitions() const {
  return std::any_of(out_.begin(), out_.end(), [](const auto& list) {
    return !list.empty() && list.front().label == kEpsilon;
  });
}

StateSet Nfa::initial_states() const {
  StateSet result;
  for (State q = 0; q < out_.size(); ++q)
    if (initial_[q]) result.push_back(q);
  return result;
}

StateSet Nfa::marked_states() const {
  StateSet result;
  for (State q = 0; q < out_.size(); ++q)
    if (marked_[q]) result.push_back(q);
  return result;
}

std::string Nfa::state_name(State state) const {
  check_state(state);
  return names_.empty() ? std::to_string(state) : names_[state];
}

bool Nfa::operator==(const Nfa& other) const {
  if (alphabet_ != other.alphabet_ || out_ != other.out_ || initial_ != other.initial_ ||
      marked_ != other.marked_) {
    return false;
  }
  for (State q = 0; q < out_.size(); ++q)
    if (state_name(q) != other.state_name(q)) return false;
  return true;
}

// ---------------------------------------------------------------- Dfa

State Dfa::add_state(std::string name) {
  const std::size_t index = marked_.size();
  marked_.push_back(false);
  delta_.resize(delta_.size() + alphabet_.size(), kNoState);
  return push_named(names_, index, std::move(name));
}

void Dfa::add_states(std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) add_state();
}

void Dfa::check_state(State state) const {
  if (state >= marked_.size()) throw InputError("unknown state " + std::to_string(state));
}

void Dfa::check_label(Label label) const {
  if (label < 0 || static_cast<std::size_t>(label) >= alphabet_.size()) {
    throw InputError("label " + std::to_string(label) + " outside the alphabet");
  }
}

void Dfa::set_transition(State from, Label label, State to) {
  check_state(from);
  check_state(to);
  check_label(label);
  delta_[static_cast<std::size_t>(from) * alphabet_.size() + static_cast<std::size_t>(label)] = to;
}

void Dfa::set_transition(State from, std::string_view event, State to) {
  set_transition(from, alphabet_.index_of(event), to);
}

void Dfa::clear_transition(State from, Label label) {
  check_state(from);
  check_label(label);
  delta_[static_cast<std::size_t>(from) * alphabet_.size() + static_cast<std::size_t>(label)] = kNoState;
}

void Dfa::set_initial(State state) {
  check_state(state);
  initial_ = state;
}

void Dfa::set_marked(State state, bool marked) {
  check_state(state);
  marked_[state] = marked;
}

std::size_t Dfa::num_marked() const { return static_cast<std::size_t>(std::count(marked_.begin(), marked_.end(), true)); }

std::size_t Dfa::num_transitions() const {
  return static_cast<std::size_t>(std::count_if(delta_.begin(), delta_.end(), [](State s) { return s != kNoState; }));
}

std::string Dfa::state_name(State state) const {
  check_state(state);
  return names_.empty() ? std::to_string(state) : names_[state];
}

bool Dfa::operator==(const Dfa& other) const {
  if (alphabet_ != other.alphabet_ || delta_ != other.delta_ || initial_ != other.initial_ ||
      marked_ != other.marked_) {
    return false;
  }
  for (State q = 0; q < marked_.size(); ++q)
    if (state_name(q) != other.state_name(q)) return false;
  return true;
}

// ---------------------------------------------------------------- helpers

Nfa to_nfa(const Dfa& dfa) {
  Nfa nfa(dfa.alphabet());
  for (State q = 0; q < dfa.num_states(); ++q) {
    nfa.add_state(dfa.has_custom_names() ? dfa.state_name(q) : std::string{});
    nfa.set_marked(q, dfa.is_marked(q));
  }
  for (State q = 0; q < dfa.num_states(); ++q) {
    for (Label a = 0; a < static_cast<Label>(dfa.alphabet().size()); ++a) {
      if (State t = dfa.next(q, a); t != kNoState) nfa.add_transition(q, a, t);
    }
  }
  if (dfa.has_initial()) nfa.set_initial(dfa.initial());
  return nfa;
}

std::vector<Label> to_labels(const Alphabet& alphabet, const Word& word) {
  std::vector<Label> labels;
  labels.reserve(word.size());
  for (const auto& token : word) labels.push_back(alphabet.index_of(token));
  return labels;
}

Word to_word(const Alphabet& alphabet, std::span<const Label> labels) {
  Word word;
  word.reserve(labels.size());
  for (Label l : labels) word.push_back(alphabet[l]);
  return word;
}

}  // namespace infobs
