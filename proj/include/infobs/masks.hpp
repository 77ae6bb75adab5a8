#pragma once

#include <string>
#include <utility>
#include <vector>

#include "infobs/alphabet.hpp"
#include "infobs/automata.hpp"

namespace infobs {

/// Observation mask: a total map from domain events to codomain events or epsilon,
/// extended letterwise to words.
class Mask {
 public:
  Mask() = default;
  /// `image[x]` is a codomain label or kEpsilon for every domain label x.
  Mask(Alphabet domain, Alphabet codomain, std::vector<Label> image);
  /// Pairs (event, target) with target kEpsilonToken for erasure; must be total.
  static Mask from_pairs(const Alphabet& domain, const Alphabet& codomain,
                         const std::vector<std::pair<std::string, std::string>>& pairs);
  static Mask identity(const Alphabet& alphabet);

  const Alphabet& domain() const noexcept { return domain_; }
  const Alphabet& codomain() const noexcept { return codomain_; }
  Label image(Label event) const { return image_.at(static_cast<std::size_t>(event)); }
  const std::vector<Label>& images() const noexcept { return image_; }

  /// Codomain ⊆ domain, observable events fixed, everything else erased.
  bool is_projection() const;
  bool is_identity() const;

  bool operator==(const Mask&) const = default;

 private:
  Alphabet domain_;
  Alphabet codomain_;
  std::vector<Label> image_;
};

/// Natural projection onto `observable`.
Mask make_projection(const Alphabet& sigma, const std::vector<std::string>& observable);

Word mask_word(const Mask& mask, const Word& word);

/// Relabels every transition x to mask(x); erased events become epsilon moves.
/// The result lives over the codomain.
Nfa mask_image(const Nfa& nfa, const Mask& mask);

/// Replaces each y-move by one x-move per preimage x and adds a self-loop for
/// every erased event on every state outside `skip_self_loops_on`.
/// With an empty skip set the result marks mask⁻¹(L_m(nfa)).
Nfa mask_inverse(const Nfa& nfa, const Mask& mask, const StateSet& skip_self_loops_on = {});

/// A base alphabet Σ paired with a disjoint primed copy Σ′ (token + kPrimeMarker).
class PrimedAlphabet {
 public:
  explicit PrimedAlphabet(Alphabet base);

  const Alphabet& base() const noexcept { return base_; }
  const Alphabet& primed() const noexcept { return primed_; }
  /// Σ ∪ Σ′.
  const Alphabet& combined() const noexcept { return combined_; }

  /// Base label -> label of its primed partner in combined().
  Label primed_in_combined(Label base) const { return primed_in_combined_.at(static_cast<std::size_t>(base)); }
  /// Base label -> label of the same event in combined().
  Label base_in_combined(Label base) const { return base_in_combined_.at(static_cast<std::size_t>(base)); }

  static std::string prime(const std::string& event) { return event + kPrimeMarker; }

 private:
  Alphabet base_;
  Alphabet primed_;
  Alphabet combined_;
  std::vector<Label> primed_in_combined_;
  std::vector<Label> base_in_combined_;
};

/// The mask h over Σ ∪ Σ′: `mask` on base events, identity on primed events.
Mask lift_to_primed(const Mask& mask, const PrimedAlphabet& primed);

/// The mask g: primed labels become their base partners. Output alphabet is the base.
Nfa rename_primed(const Nfa& nfa, const PrimedAlphabet& primed);

}  // namespace infobs
