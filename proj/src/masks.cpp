#include "infobs/masks.hpp"

#include <algorithm>
#include <map>

#include "infobs/errors.hpp"

namespace infobs {

Mask::Mask(Alphabet domain, Alphabet codomain, std::vector<Label> image)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), image_(std::move(image)) {
  if (image_.size() != domain_.size()) throw InputError("mask is not total over its domain");
  for (Label y : image_) {
    if (y != kEpsilon && (y < 0 || static_cast<std::size_t>(y) >= codomain_.size())) {
      throw InputError("mask image outside the codomain");
    }
  }
}

Mask Mask::from_pairs(const Alphabet& domain, const Alphabet& codomain,
                      const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<Label> image(domain.size(), kEpsilon);
  std::vector<bool> seen(domain.size(), false);
  for (const auto& [from, to] : pairs) {
    const Label x = domain.index_of(from);
    if (seen[static_cast<std::size_t>(x)]) throw InputError("event '" + from + "' mapped twice");
    seen[static_cast<std::size_t>(x)] = true;
    image[static_cast<std::size_t>(x)] = to == kEpsilonToken ? kEpsilon : codomain.index_of(to);
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw InputError("mask not total");
  return Mask(domain, codomain, std::move(image));
}

Mask Mask::identity(const Alphabet& alphabet) {
  std::vector<Label> image(alphabet.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = static_cast<Label>(i);
  return Mask(alphabet, alphabet, std::move(image));
}

bool Mask::is_projection() const {
  if (!codomain_.is_subset_of(domain_)) return false;
  for (std::size_t x = 0; x < domain_.size(); ++x) {
    const auto& event = domain_[static_cast<Label>(x)];
    const bool observable = codomain_.contains(event);
    if (observable ? image_[x] == kEpsilon || codomain_[image_[x]] != event : image_[x] != kEpsilon) {
      return false;
    }
  }
  return true;
}

bool Mask::is_identity() const { return domain_ == codomain_ && is_projection(); }

Mask make_projection(const Alphabet& sigma, const std::vector<std::string>& observable) {
  for (const auto& e : observable) {
    if (!sigma.contains(e)) throw InputError("observable event '" + e + "' is not in the alphabet");
  }
  Alphabet delta(observable);
  std::vector<Label> image(sigma.size(), kEpsilon);
  for (std::size_t x = 0; x < sigma.size(); ++x) {
    if (auto y = delta.find(sigma[static_cast<Label>(x)])) image[x] = *y;
  }
  return Mask(sigma, std::move(delta), std::move(image));
}

Word mask_word(const Mask& mask, const Word& word) {
  Word out;
  for (const auto& token : word) {
    const Label y = mask.image(mask.domain().index_of(token));
    if (y != kEpsilon) out.push_back(mask.codomain()[y]);
  }
  return out;
}

Nfa mask_image(const Nfa& nfa, const Mask& mask) {
  if (nfa.alphabet() != mask.domain()) throw InputError("mask_image: automaton alphabet differs from mask domain");
  Nfa out(mask.codomain());
  for (State q = 0; q < nfa.num_states(); ++q) {
    out.add_state(nfa.has_custom_names() ? nfa.state_name(q) : std::string{});
    out.set_initial(q, nfa.is_initial(q));
    out.set_marked(q, nfa.is_marked(q));
  }
  for (State q = 0; q < nfa.num_states(); ++q) {
    for (const Transition& t : nfa.transitions(q)) {
      out.add_transition(q, t.label == kEpsilon ? kEpsilon : mask.image(t.label), t.target);
    }
  }
  return out;
}

Nfa mask_inverse(const Nfa& nfa, const Mask& mask, const StateSet& skip_self_loops_on) {
  if (nfa.alphabet() != mask.codomain()) {
    throw InputError("mask_inverse: automaton alphabet differs from mask codomain");
  }
  std::vector<bool> skip(nfa.num_states(), false);
  for (State q : skip_self_loops_on) {
    if (q >= nfa.num_states()) throw InputError("mask_inverse: unknown state " + std::to_string(q));
    skip[q] = true;
  }

  std::vector<std::vector<Label>> preimages(mask.codomain().size());
  std::vector<Label> erased;
  for (std::size_t x = 0; x < mask.domain().size(); ++x) {
    const Label y = mask.image(static_cast<Label>(x));
    if (y == kEpsilon) {
      erased.push_back(static_cast<Label>(x));
    } else {
      preimages[static_cast<std::size_t>(y)].push_back(static_cast<Label>(x));
    }
  }

  Nfa out(mask.domain());
  for (State q = 0; q < nfa.num_states(); ++q) {
    out.add_state(nfa.has_custom_names() ? nfa.state_name(q) : std::string{});
    out.set_initial(q, nfa.is_initial(q));
    out.set_marked(q, nfa.is_marked(q));
  }
  for (State q = 0; q < nfa.num_states(); ++q) {
    for (const Transition& t : nfa.transitions(q)) {
      if (t.label == kEpsilon) {
        out.add_transition(q, kEpsilon, t.target);
      } else {
        for (Label x : preimages[static_cast<std::size_t>(t.label)]) out.add_transition(q, x, t.target);
      }
    }
    if (!skip[q]) {
      for (Label x : erased) out.add_transition(q, x, q);
    }
  }
  return out;
}

PrimedAlphabet::PrimedAlphabet(Alphabet base) : base_(std::move(base)) {
  std::vector<std::string> primed;
  for (const auto& e : base_.events()) {
    if (e.find(kPrimeMarker) != std::string::npos) {
      throw InputError("event '" + e + "' contains the reserved prime marker");
    }
    primed.push_back(prime(e));
  }
  primed_ = Alphabet(std::move(primed));
  combined_ = base_.united(primed_);
  for (const auto& e : base_.events()) {
    base_in_combined_.push_back(combined_.index_of(e));
    primed_in_combined_.push_back(combined_.index_of(prime(e)));
  }
}

Mask lift_to_primed(const Mask& mask, const PrimedAlphabet& primed) {
  if (mask.domain() != primed.base()) throw InputError("lift_to_primed: mask domain differs from base alphabet");
  for (const auto& y : mask.codomain().events()) {
    if (primed.primed().contains(y)) {
      throw InputError("mask codomain event '" + y + "' collides with a primed event");
    }
  }
  const Alphabet codomain = mask.codomain().united(primed.primed());
  const Alphabet& domain = primed.combined();
  std::vector<Label> image(domain.size(), kEpsilon);
  for (std::size_t i = 0; i < primed.base().size(); ++i) {
    const auto x = static_cast<Label>(i);
    const Label y = mask.image(x);
    image[static_cast<std::size_t>(primed.base_in_combined(x))] =
        y == kEpsilon ? kEpsilon : codomain.index_of(mask.codomain()[y]);
    image[static_cast<std::size_t>(primed.primed_in_combined(x))] =
        codomain.index_of(PrimedAlphabet::prime(primed.base()[x]));
  }
  return Mask(domain, codomain, std::move(image));
}

Nfa rename_primed(const Nfa& nfa, const PrimedAlphabet& primed) {
  const Alphabet& from = nfa.alphabet();
  if (!from.is_subset_of(primed.combined())) throw InputError("rename_primed: label outside base and primed events");
  // Labels of `from` -> base labels.
  std::vector<Label> to_base(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    std::string event = from[static_cast<Label>(i)];
    if (primed.primed().contains(event)) event.pop_back();
    to_base[i] = primed.base().index_of(event);
  }
  Nfa out(primed.base());
  for (State q = 0; q < nfa.num_states(); ++q) {
    out.add_state(nfa.has_custom_names() ? nfa.state_name(q) : std::string{});
    out.set_initial(q, nfa.is_initial(q));
    out.set_marked(q, nfa.is_marked(q));
  }
  for (State q = 0; q < nfa.num_states(); ++q) {
    for (const Transition& t : nfa.transitions(q)) {
      out.add_transition(q, t.label == kEpsilon ? kEpsilon : to_base[static_cast<std::size_t>(t.label)], t.target);
    }
  }
  return out;
}

}  // namespace infobs
