#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "infobs/alphabet.hpp"

namespace infobs {

using State = std::uint32_t;
inline constexpr State kNoState = std::numeric_limits<State>::max();

/// Sorted, duplicate-free list of states.
using StateSet = std::vector<State>;

/// A word is a sequence of event tokens; the empty vector is the empty string.
using Word = std::vector<std::string>;

std::string to_string(const Word& word);

struct Transition {
  Label label;
  State target;

  auto operator<=>(const Transition&) const = default;
};

/// Nondeterministic automaton with epsilon moves, a set of initial states and a
/// set of marked states. States are dense integers; an optional display name per
/// state is carried through constructions that keep state identities.
class Nfa {
 public:
  Nfa() = default;
  explicit Nfa(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  State add_state(std::string name = {});
  void add_states(std::size_t count);
  /// Labels are alphabet positions or kEpsilon; parallel duplicates are collapsed.
  void add_transition(State from, Label label, State to);
  void add_transition(State from, std::string_view event, State to);
  void set_initial(State state, bool initial = true);
  void set_marked(State state, bool marked = true);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return out_.size(); }
  std::size_t num_transitions() const noexcept;
  /// Sorted by (label, target).
  std::span<const Transition> transitions(State state) const { return out_.at(state); }
  bool has_epsilon_transitions() const;

  bool is_initial(State state) const { return initial_.at(state); }
  bool is_marked(State state) const { return marked_.at(state); }
  StateSet initial_states() const;
  StateSet marked_states() const;

  /// Display name; defaults to the decimal index.
  std::string state_name(State state) const;
  bool has_custom_names() const noexcept { return !names_.empty(); }

  /// Structural identity, including state names.
  bool operator==(const Nfa& other) const;

 private:
  void check_state(State state) const;

  Alphabet alphabet_;
  std::vector<std::vector<Transition>> out_;
  std::vector<bool> initial_;
  std::vector<bool> marked_;
  std::vector<std::string> names_;
};

/// Partial deterministic automaton: at most one initial state and at most one
/// successor per (state, event). The empty language is the automaton with no
/// states, or one whose initial state reaches no marked state.
class Dfa {
 public:
  Dfa() = default;
  explicit Dfa(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  State add_state(std::string name = {});
  void add_states(std::size_t count);
  /// Overwrites any previous successor.
  void set_transition(State from, Label label, State to);
  void set_transition(State from, std::string_view event, State to);
  void clear_transition(State from, Label label);
  void set_initial(State state);
  void clear_initial() noexcept { initial_ = kNoState; }
  void set_marked(State state, bool marked = true);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return marked_.size(); }
  std::size_t num_marked() const;
  std::size_t num_transitions() const;
  /// kNoState when undefined.
  State next(State state, Label label) const {
    return delta_[static_cast<std::size_t>(state) * alphabet_.size() + static_cast<std::size_t>(label)];
  }
  bool has_initial() const noexcept { return initial_ != kNoState; }
  State initial() const noexcept { return initial_; }
  bool is_marked(State state) const { return marked_.at(state); }

  std::string state_name(State state) const;
  bool has_custom_names() const noexcept { return !names_.empty(); }

  bool operator==(const Dfa& other) const;

 private:
  void check_state(State state) const;
  void check_label(Label label) const;

  Alphabet alphabet_;
  std::vector<State> delta_;
  State initial_ = kNoState;
  std::vector<bool> marked_;
  std::vector<std::string> names_;
};

/// Same states, names and language, viewed as an NFA.
Nfa to_nfa(const Dfa& dfa);

/// Maps tokens to labels, throwing InputError for foreign tokens.
std::vector<Label> to_labels(const Alphabet& alphabet, const Word& word);
Word to_word(const Alphabet& alphabet, std::span<const Label> labels);

}  // namespace infobs
