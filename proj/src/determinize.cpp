#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <unordered_map>

#include "infobs/errors.hpp"
#include "infobs/operations.hpp"

namespace infobs {

namespace {

using Block = std::uint64_t;

// Fixed-width bitset over NFA states, stored as a run of 64-bit blocks.
struct BitsetHash {
  std::size_t operator()(const std::vector<Block>& bits) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (Block b : bits) {
      h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

class Bitsets {
 public:
  explicit Bitsets(std::size_t universe) : width_((universe + 63) / 64) {}

  std::size_t width() const { return width_; }
  std::vector<Block> empty() const { return std::vector<Block>(width_, 0); }

  static void set(std::vector<Block>& bits, State q) { bits[q / 64] |= Block{1} << (q % 64); }
  static bool test(const std::vector<Block>& bits, State q) { return (bits[q / 64] >> (q % 64)) & 1U; }
  static bool none(const std::vector<Block>& bits) {
    return std::all_of(bits.begin(), bits.end(), [](Block b) { return b == 0; });
  }

  static StateSet members(const std::vector<Block>& bits) {
    StateSet out;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      Block b = bits[i];
      while (b) {
        out.push_back(static_cast<State>(i * 64 + static_cast<std::size_t>(std::countr_zero(b))));
        b &= b - 1;
      }
    }
    return out;
  }

 private:
  std::size_t width_;
};

void close_in_place(const Nfa& nfa, std::vector<Block>& bits) {
  std::vector<State> stack = Bitsets::members(bits);
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (const Transition& t : nfa.transitions(q)) {
      if (t.label != kEpsilon) break;  // epsilon moves sort first
      if (!Bitsets::test(bits, t.target)) {
        Bitsets::set(bits, t.target);
        stack.push_back(t.target);
      }
    }
  }
}

std::string subset_name(const Nfa& nfa, const StateSet& members) {
  std::string name = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) name += ',';
    name += nfa.state_name(members[i]);
  }
  name += '}';
  return name;
}

}  // namespace

StateSet epsilon_closure(const Nfa& nfa, StateSet states) {
  Bitsets sets(nfa.num_states());
  auto bits = sets.empty();
  for (State q : states) {
    if (q >= nfa.num_states()) throw InputError("unknown state " + std::to_string(q));
    Bitsets::set(bits, q);
  }
  close_in_place(nfa, bits);
  return Bitsets::members(bits);
}

SubsetConstruction subset_construction(const Nfa& nfa, std::size_t budget) {
  const std::size_t n = nfa.num_states();
  const std::size_t sigma = nfa.alphabet().size();
  Bitsets sets(n);

  SubsetConstruction result{Dfa(nfa.alphabet()), {}};

  auto start = sets.empty();
  for (State q : nfa.initial_states()) Bitsets::set(start, q);
  close_in_place(nfa, start);
  if (Bitsets::none(start)) return result;

  // Closed successor sets per (state, event); a subset's successor is their union.
  std::vector<std::vector<Block>> step(n * sigma, sets.empty());
  for (State q = 0; q < n; ++q) {
    for (const Transition& t : nfa.transitions(q)) {
      if (t.label == kEpsilon) continue;
      Bitsets::set(step[q * sigma + static_cast<std::size_t>(t.label)], t.target);
    }
    for (std::size_t a = 0; a < sigma; ++a) close_in_place(nfa, step[q * sigma + a]);
  }

  auto marked = sets.empty();
  for (State q : nfa.marked_states()) Bitsets::set(marked, q);
  auto intersects_marked = [&](const std::vector<Block>& bits) {
    for (std::size_t i = 0; i < bits.size(); ++i)
      if (bits[i] & marked[i]) return true;
    return false;
  };

  std::unordered_map<std::vector<Block>, State, BitsetHash> index;
  std::vector<std::vector<Block>> order;
  auto intern = [&](std::vector<Block> bits) -> State {
    auto [it, inserted] = index.try_emplace(bits, static_cast<State>(order.size()));
    if (inserted) {
      if (order.size() >= budget) {
        throw ResourceError("subset construction exceeded " + std::to_string(budget) + " states");
      }
      order.push_back(std::move(bits));
    }
    return it->second;
  };

  intern(start);
  std::vector<std::vector<State>> moves;
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::vector<State> row(sigma, kNoState);
    const StateSet members = Bitsets::members(order[i]);
    for (std::size_t a = 0; a < sigma; ++a) {
      auto next = sets.empty();
      for (State q : members) {
        const auto& s = step[q * sigma + a];
        for (std::size_t w = 0; w < next.size(); ++w) next[w] |= s[w];
      }
      if (!Bitsets::none(next)) row[a] = intern(std::move(next));
    }
    moves.push_back(std::move(row));
  }

  Dfa& dfa = result.dfa;
  result.subsets.reserve(order.size());
  for (const auto& bits : order) {
    StateSet members = Bitsets::members(bits);
    State s = dfa.add_state(subset_name(nfa, members));
    dfa.set_marked(s, intersects_marked(bits));
    result.subsets.push_back(std::move(members));
  }
  for (State s = 0; s < moves.size(); ++s)
    for (std::size_t a = 0; a < sigma; ++a)
      if (moves[s][a] != kNoState) dfa.set_transition(s, static_cast<Label>(a), moves[s][a]);
  dfa.set_initial(0);
  return result;
}

Dfa determinize(const Nfa& nfa, std::size_t budget) {
  return subset_construction(nfa, budget).dfa;
}

}  // namespace infobs
