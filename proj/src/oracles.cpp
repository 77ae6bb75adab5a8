#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <unordered_map>

#include "infobs/errors.hpp"
#include "infobs/inf.hpp"

namespace infobs {

Dfa inf_o_reference(const Dfa& k, const Mask& mask) {
  if (mask.domain() != k.alphabet()) throw InputError("inf_o_reference: mask domain differs from the automaton alphabet");
  const Alphabet& sigma = k.alphabet();
  const Dfa closure = prefix_closure(k);
  if (closure.num_states() == 0) return empty_dfa(sigma);

  std::vector<Nfa> parts;
  for (Label e = 0; e < static_cast<Label>(sigma.size()); ++e) {
    const Dfa appended = determinize(append_event(closure, e));
    const Dfa continued = product_intersection(appended, closure);
    const Dfa observed = determinize(mask_image(to_nfa(continued), mask));
    const Dfa explained = determinize(mask_inverse(to_nfa(observed), mask));
    parts.push_back(to_nfa(product_intersection(explained, ends_with_dfa(sigma, e))));
  }
  parts.push_back(to_nfa(epsilon_dfa(sigma)));
  const Dfa united = determinize(nondet_union(parts));
  return minimize(supremal_prefix_closed(united));
}

namespace {

// Images of domain labels renumbered densely over the letters actually used.
struct DenseImage {
  std::vector<Label> image;
  std::size_t letters = 0;

  explicit DenseImage(const Mask& mask) : image(mask.domain().size(), kEpsilon) {
    std::vector<Label> dense(mask.codomain().size(), kEpsilon);
    for (std::size_t x = 0; x < image.size(); ++x) {
      const Label y = mask.image(static_cast<Label>(x));
      if (y == kEpsilon) continue;
      if (dense[static_cast<std::size_t>(y)] == kEpsilon) dense[static_cast<std::size_t>(y)] = static_cast<Label>(letters++);
      image[x] = dense[static_cast<std::size_t>(y)];
    }
  }
};

constexpr std::uint32_t kNoNode = std::numeric_limits<std::uint32_t>::max();

// Words as nodes of a trie; node 0 is the empty word.
class Trie {
 public:
  explicit Trie(std::size_t letters) : letters_(letters) { grow(kNoNode, kEpsilon); }

  std::uint32_t child(std::uint32_t node, Label letter) const {
    return children_[node * letters_ + static_cast<std::size_t>(letter)];
  }
  // Second member is true when the node is new.
  std::pair<std::uint32_t, bool> extend(std::uint32_t node, Label letter) {
    const std::uint32_t existing = child(node, letter);
    if (existing != kNoNode) return {existing, false};
    const std::uint32_t fresh = grow(node, letter);
    children_[node * letters_ + static_cast<std::size_t>(letter)] = fresh;
    return {fresh, true};
  }
  std::uint32_t parent(std::uint32_t node) const { return parent_[node]; }
  Label last(std::uint32_t node) const { return last_[node]; }
  std::size_t size() const { return parent_.size(); }

  std::vector<Label> decode(std::uint32_t node) const {
    std::vector<Label> word;
    for (; node != 0; node = parent_[node]) word.push_back(last_[node]);
    std::reverse(word.begin(), word.end());
    return word;
  }

 private:
  std::uint32_t grow(std::uint32_t parent, Label letter) {
    const auto id = static_cast<std::uint32_t>(parent_.size());
    parent_.push_back(parent);
    last_.push_back(letter);
    children_.resize(children_.size() + letters_, kNoNode);
    return id;
  }

  std::size_t letters_;
  std::vector<std::uint32_t> children_;
  std::vector<std::uint32_t> parent_;
  std::vector<Label> last_;
};

constexpr std::size_t kFixpointWordBudget = std::size_t{1} << 22;

// States of K̄ reached by words of K̄ with a given observation, for every
// observation node. These stand in for witnesses s of unbounded length.
class WitnessStates {
 public:
  WitnessStates(const Dfa& closure, const DenseImage& image) : closure_(closure), image_(image) {
    StateSet start;
    if (closure.has_initial()) start.push_back(closure.initial());
    reached_.push_back(erased_closure(std::move(start)));
    enabled_.push_back(enabled(reached_.back()));
  }

  // `node` is the fresh child of `parent` under observed letter y.
  void extend(std::uint32_t parent, Label y, std::uint32_t node) {
    StateSet next;
    for (State q : reached_.at(parent))
      for (Label a = 0; a < static_cast<Label>(image_.image.size()); ++a)
        if (image_.image[static_cast<std::size_t>(a)] == y)
          if (State t = closure_.next(q, a); t != kNoState) next.push_back(t);
    if (reached_.size() <= node) {
      reached_.resize(node + 1);
      enabled_.resize(node + 1, 0);
    }
    reached_[node] = erased_closure(std::move(next));
    enabled_[node] = enabled(reached_[node]);
  }

  std::uint64_t enabled_letters(std::uint32_t node) const { return enabled_.at(node); }

 private:
  StateSet erased_closure(StateSet states) const {
    std::vector<bool> seen(closure_.num_states(), false);
    for (State q : states) seen[q] = true;
    for (std::size_t i = 0; i < states.size(); ++i) {
      for (Label a = 0; a < static_cast<Label>(image_.image.size()); ++a) {
        if (image_.image[static_cast<std::size_t>(a)] != kEpsilon) continue;
        const State t = closure_.next(states[i], a);
        if (t != kNoState && !seen[t]) {
          seen[t] = true;
          states.push_back(t);
        }
      }
    }
    return states;
  }

  std::uint64_t enabled(const StateSet& states) const {
    std::uint64_t bits = 0;
    for (State q : states)
      for (Label a = 0; a < static_cast<Label>(image_.image.size()); ++a)
        if (closure_.next(q, a) != kNoState) bits |= std::uint64_t{1} << static_cast<unsigned>(a);
    return bits;
  }

  const Dfa& closure_;
  const DenseImage& image_;
  std::vector<StateSet> reached_;
  std::vector<std::uint64_t> enabled_;
};

// Least set containing the seeds, closed under the observability rule and,
// optionally, under uncontrollable extensions, adding words up to the work
// length. Witnesses s range over the set and over all of K̄.
class BoundedFixpoint {
 public:
  BoundedFixpoint(const Dfa& closure, const Mask& mask, std::size_t work_length, std::vector<Label> uncontrollable)
      : sigma_(mask.domain().size()),
        work_length_(work_length),
        image_(mask),
        words_(sigma_),
        projections_(image_.letters),
        witnesses_(closure, image_),
        uncontrollable_(std::move(uncontrollable)) {
    if (sigma_ > 64) throw ResourceError("bounded fixpoint supports at most 64 events");
    present_.push_back(false);
    projection_.push_back(0);
    length_.push_back(0);
  }

  // Adds the word `node` extended by `letter`, returning its node.
  std::uint32_t add_child(std::uint32_t node, Label letter) {
    const auto [child, fresh] = words_.extend(node, letter);
    if (fresh) {
      if (words_.size() > kFixpointWordBudget) throw ResourceError("bounded fixpoint exceeded its word budget");
      const Label y = image_.image[static_cast<std::size_t>(letter)];
      std::uint32_t projection = projection_[node];
      if (y != kEpsilon) {
        const auto [observed, new_observation] = projections_.extend(projection, y);
        if (new_observation) witnesses_.extend(projection, y, observed);
        projection = observed;
      }
      present_.push_back(false);
      projection_.push_back(projection);
      length_.push_back(static_cast<std::uint16_t>(length_[node] + 1));
    }
    insert(child);
    return child;
  }

  void add_empty_word() { insert(0); }

  void saturate() {
    while (!queue_.empty()) {
      const std::uint32_t id = queue_.front();
      queue_.pop_front();
      process(id);
    }
  }

  template <typename Visit>
  void for_each_up_to(std::size_t length, Visit visit) const {
    for (std::uint32_t i = 0; i < words_.size(); ++i)
      if (present_[i] && length_[i] <= length) visit(words_.decode(i));
  }

 private:
  void insert(std::uint32_t node) {
    if (present_[node]) return;
    present_[node] = true;
    queue_.push_back(node);
  }

  std::uint32_t class_of(std::uint32_t projection) {
    while (members_.size() <= projection) {
      extensions_.push_back(witnesses_.enabled_letters(static_cast<std::uint32_t>(members_.size())));
      members_.emplace_back();
    }
    return projection;
  }

  void process(std::uint32_t id) {
    if (id != 0) {
      // parent·e is present, so every word observed like the parent may take e.
      const Label e = words_.last(id);
      const std::uint32_t parent_class = class_of(projection_[words_.parent(id)]);
      const std::uint64_t bit = std::uint64_t{1} << static_cast<unsigned>(e);
      if (!(extensions_[parent_class] & bit)) {
        extensions_[parent_class] |= bit;
        for (std::size_t i = 0; i < members_[parent_class].size(); ++i) {
          const std::uint32_t member = members_[parent_class][i];
          if (length_[member] < work_length_) add_child(member, e);
        }
      }
    }
    const std::uint32_t cls = class_of(projection_[id]);
    members_[cls].push_back(id);
    if (length_[id] < work_length_) {
      std::uint64_t ext = extensions_[cls];
      while (ext) {
        add_child(id, static_cast<Label>(std::countr_zero(ext)));
        ext &= ext - 1;
      }
      for (Label u : uncontrollable_) add_child(id, u);
    }
  }

  std::size_t sigma_;
  std::size_t work_length_;
  DenseImage image_;
  Trie words_;
  Trie projections_;
  WitnessStates witnesses_;
  std::vector<Label> uncontrollable_;

  std::vector<bool> present_;
  std::vector<std::uint32_t> projection_;
  std::vector<std::uint16_t> length_;
  std::deque<std::uint32_t> queue_;

  // Indexed by projection node.
  std::vector<std::vector<std::uint32_t>> members_;
  std::vector<std::uint64_t> extensions_;
};

}  // namespace

std::set<Word> inf_o_fixpoint_bounded(const Dfa& k, const Mask& mask, std::size_t check_length,
                                      std::size_t work_length, const UncontrollableSet& uncontrollable) {
  if (mask.domain() != k.alphabet()) throw InputError("inf_o_fixpoint_bounded: mask domain differs from the automaton alphabet");
  if (work_length < check_length) throw InputError("inf_o_fixpoint_bounded: work length below check length");
  if (work_length > 4096) throw InputError("inf_o_fixpoint_bounded: work length too large");
  std::vector<Label> u;
  for (const auto& e : uncontrollable.events) u.push_back(k.alphabet().index_of(e));

  const Dfa closure = trim(prefix_closure(k));
  BoundedFixpoint fixpoint(closure, mask, work_length, u);
  if (closure.has_initial()) {
    // Seed with every word of K̄ up to the work length, then close.
    const auto sigma = static_cast<Label>(k.alphabet().size());
    fixpoint.add_empty_word();
    auto walk = [&](auto&& self, State q, std::uint32_t node, std::size_t depth) -> void {
      if (depth == work_length) return;
      for (Label a = 0; a < sigma; ++a) {
        const State t = closure.next(q, a);
        if (t != kNoState) self(self, t, fixpoint.add_child(node, a), depth + 1);
      }
    };
    walk(walk, closure.initial(), 0, 0);
    fixpoint.saturate();
  }

  std::set<Word> result;
  fixpoint.for_each_up_to(check_length, [&](const std::vector<Label>& labels) {
    result.insert(to_word(k.alphabet(), labels));
  });
  return result;
}

bool is_observable_bounded(const Dfa& lang, const Mask& mask, std::size_t length) {
  if (mask.domain() != lang.alphabet()) throw InputError("is_observable_bounded: mask domain differs from the alphabet");
  if (!is_prefix_closed(lang)) throw InputError("is_observable_bounded: language is not prefix-closed");
  const Dfa dfa = trim(lang);
  if (!dfa.has_initial() || length == 0) return true;
  const auto sigma = static_cast<Label>(dfa.alphabet().size());
  const DenseImage image(mask);
  Trie projections(image.letters);

  // Every word shorter than `length` observed the same way must admit the same
  // one-letter extensions.
  std::unordered_map<std::uint32_t, std::vector<bool>> extensions;
  bool observable = true;
  auto walk = [&](auto&& self, State q, std::uint32_t projection, std::size_t depth) -> void {
    if (!observable || depth == length) return;
    std::vector<bool> ext(static_cast<std::size_t>(sigma));
    for (Label a = 0; a < sigma; ++a) ext[static_cast<std::size_t>(a)] = dfa.next(q, a) != kNoState;
    auto [it, inserted] = extensions.try_emplace(projection, ext);
    if (!inserted && it->second != ext) {
      observable = false;
      return;
    }
    for (Label a = 0; a < sigma; ++a) {
      const State t = dfa.next(q, a);
      if (t == kNoState) continue;
      const Label y = image.image[static_cast<std::size_t>(a)];
      self(self, t, y == kEpsilon ? projection : projections.extend(projection, y).first, depth + 1);
    }
  };
  walk(walk, dfa.initial(), 0, 0);
  return observable;
}

bool is_controllable_bounded(const Dfa& lang, const Dfa& plant, const UncontrollableSet& uncontrollable,
                             std::size_t length) {
  if (lang.alphabet() != plant.alphabet()) throw InputError("is_controllable_bounded: alphabet mismatch");
  std::vector<Label> u;
  for (const auto& e : uncontrollable.events) u.push_back(lang.alphabet().index_of(e));
  if (!lang.has_initial() || !lang.is_marked(lang.initial()) || !plant.has_initial()) return true;
  const auto sigma = static_cast<Label>(lang.alphabet().size());
  bool controllable = true;
  auto walk = [&](auto&& self, State q, State g, std::size_t depth) -> void {
    if (!controllable || depth == length) return;
    for (Label x : u) {
      const State gx = plant.next(g, x);
      const State qx = lang.next(q, x);
      if (gx != kNoState && (qx == kNoState || !lang.is_marked(qx))) {
        controllable = false;
        return;
      }
    }
    for (Label a = 0; a < sigma; ++a) {
      const State t = lang.next(q, a);
      const State ga = plant.next(g, a);
      if (t != kNoState && lang.is_marked(t) && ga != kNoState) self(self, t, ga, depth + 1);
    }
  };
  walk(walk, lang.initial(), plant.initial(), 0);
  return controllable;
}

std::size_t count_words_up_to(const Dfa& dfa, std::size_t length) {
  if (!dfa.has_initial()) return 0;
  // Word counts per state, one layer per length.
  std::vector<std::size_t> layer(dfa.num_states(), 0);
  layer[dfa.initial()] = 1;
  std::size_t total = 0;
  for (std::size_t d = 0;; ++d) {
    for (State q = 0; q < dfa.num_states(); ++q)
      if (dfa.is_marked(q)) total += layer[q];
    if (d == length) break;
    std::vector<std::size_t> next(dfa.num_states(), 0);
    for (State q = 0; q < dfa.num_states(); ++q) {
      if (!layer[q]) continue;
      for (Label a = 0; a < static_cast<Label>(dfa.alphabet().size()); ++a)
        if (State t = dfa.next(q, a); t != kNoState) next[t] += layer[q];
    }
    layer = std::move(next);
  }
  return total;
}

}  // namespace infobs
