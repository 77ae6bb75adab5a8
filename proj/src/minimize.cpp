#include <algorithm>
#include <deque>
#include <numeric>

#include "infobs/operations.hpp"

namespace infobs {

namespace {

std::vector<bool> forward_reachable(const Dfa& dfa) {
  std::vector<bool> seen(dfa.num_states(), false);
  if (!dfa.has_initial()) return seen;
  const auto sigma = static_cast<Label>(dfa.alphabet().size());
  std::vector<State> stack{dfa.initial()};
  seen[dfa.initial()] = true;
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (Label a = 0; a < sigma; ++a) {
      State t = dfa.next(q, a);
      if (t != kNoState && !seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
    }
  }
  return seen;
}

std::vector<bool> backward_reachable(const Dfa& dfa) {
  const std::size_t n = dfa.num_states();
  const auto sigma = static_cast<Label>(dfa.alphabet().size());
  std::vector<std::vector<State>> preds(n);
  for (State q = 0; q < n; ++q)
    for (Label a = 0; a < sigma; ++a)
      if (State t = dfa.next(q, a); t != kNoState) preds[t].push_back(q);
  std::vector<bool> seen(n, false);
  std::vector<State> stack;
  for (State q = 0; q < n; ++q) {
    if (dfa.is_marked(q)) {
      seen[q] = true;
      stack.push_back(q);
    }
  }
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (State p : preds[q]) {
      if (!seen[p]) {
        seen[p] = true;
        stack.push_back(p);
      }
    }
  }
  return seen;
}

// Restriction to `keep`, preserving relative order and names.
Dfa restrict_to(const Dfa& dfa, const std::vector<bool>& keep) {
  Dfa out(dfa.alphabet());
  std::vector<State> remap(dfa.num_states(), kNoState);
  const bool names = dfa.has_custom_names() ||
                     std::find(keep.begin(), keep.end(), false) != keep.end();
  for (State q = 0; q < dfa.num_states(); ++q) {
    if (!keep[q]) continue;
    remap[q] = out.add_state(names ? dfa.state_name(q) : std::string{});
    out.set_marked(remap[q], dfa.is_marked(q));
  }
  const auto sigma = static_cast<Label>(dfa.alphabet().size());
  for (State q = 0; q < dfa.num_states(); ++q) {
    if (!keep[q]) continue;
    for (Label a = 0; a < sigma; ++a) {
      State t = dfa.next(q, a);
      if (t != kNoState && keep[t]) out.set_transition(remap[q], a, remap[t]);
    }
  }
  if (dfa.has_initial() && keep[dfa.initial()]) out.set_initial(remap[dfa.initial()]);
  return out;
}

// Refinable partition for Hopcroft's algorithm.
class Partition {
 public:
  explicit Partition(std::size_t n) : elems_(n), pos_(n), block_of_(n, 0) {
    std::iota(elems_.begin(), elems_.end(), 0);
    std::iota(pos_.begin(), pos_.end(), 0);
    if (n) blocks_.push_back({0, n, 0});
  }

  std::size_t num_blocks() const { return blocks_.size(); }
  std::size_t block_of(State q) const { return block_of_[q]; }
  std::size_t size(std::size_t b) const { return blocks_[b].end - blocks_[b].begin; }
  std::span<const State> members(std::size_t b) const {
    return {elems_.data() + blocks_[b].begin, size(b)};
  }

  void mark(State q) {
    Block& b = blocks_[block_of_[q]];
    std::size_t target = b.begin + b.marked;
    std::size_t at = pos_[q];
    if (at >= target) {
      std::swap(elems_[at], elems_[target]);
      pos_[elems_[at]] = at;
      pos_[elems_[target]] = target;
      ++b.marked;
      if (b.marked == 1) touched_.push_back(block_of_[q]);
    }
  }

  // Splits every touched block into its marked prefix and the rest. Returns
  // (old block, new block) pairs; the new block holds the marked part.
  std::vector<std::pair<std::size_t, std::size_t>> split_marked() {
    std::vector<std::pair<std::size_t, std::size_t>> splits;
    for (std::size_t b : touched_) {
      Block& blk = blocks_[b];
      const std::size_t marked = blk.marked;
      blk.marked = 0;
      if (marked == blk.end - blk.begin) continue;
      const std::size_t fresh = blocks_.size();
      Block nb{blk.begin, blk.begin + marked, 0};
      blocks_[b].begin += marked;
      blocks_.push_back(nb);
      for (std::size_t i = nb.begin; i < nb.end; ++i) block_of_[elems_[i]] = fresh;
      splits.emplace_back(b, fresh);
    }
    touched_.clear();
    return splits;
  }

 private:
  struct Block {
    std::size_t begin;
    std::size_t end;
    std::size_t marked;
  };
  std::vector<State> elems_;
  std::vector<std::size_t> pos_;
  std::vector<std::size_t> block_of_;
  std::vector<Block> blocks_;
  std::vector<std::size_t> touched_;
};

}  // namespace

Dfa reachable_part(const Dfa& dfa) { return restrict_to(dfa, forward_reachable(dfa)); }

Dfa trim(const Dfa& dfa) {
  auto keep = forward_reachable(dfa);
  auto co = backward_reachable(dfa);
  for (std::size_t q = 0; q < keep.size(); ++q) keep[q] = keep[q] && co[q];
  return restrict_to(dfa, keep);
}

Dfa minimize(const Dfa& input) {
  const Dfa dfa = trim(input);
  Dfa out(dfa.alphabet());
  if (!dfa.has_initial()) return out;

  // Complete with an explicit sink at index m.
  const std::size_t m = dfa.num_states();
  const std::size_t total = m + 1;
  const std::size_t sigma = dfa.alphabet().size();
  const auto succ = [&](State q, std::size_t a) -> State {
    if (q == m) return static_cast<State>(m);
    State t = dfa.next(q, static_cast<Label>(a));
    return t == kNoState ? static_cast<State>(m) : t;
  };

  // Predecessor lists per event in CSR layout.
  std::vector<std::vector<std::size_t>> pred_start(sigma, std::vector<std::size_t>(total + 1, 0));
  std::vector<std::vector<State>> pred_list(sigma, std::vector<State>(total));
  for (std::size_t a = 0; a < sigma; ++a) {
    auto& start = pred_start[a];
    for (State q = 0; q < total; ++q) ++start[succ(q, a) + 1];
    for (std::size_t i = 1; i <= total; ++i) start[i] += start[i - 1];
    std::vector<std::size_t> fill(start.begin(), start.end() - 1);
    for (State q = 0; q < total; ++q) pred_list[a][fill[succ(q, a)]++] = q;
  }

  Partition part(total);
  for (State q = 0; q < m; ++q)
    if (dfa.is_marked(q)) part.mark(q);
  part.split_marked();

  // Worklist of (block, event) splitters.
  std::deque<std::pair<std::size_t, std::size_t>> work;
  std::vector<std::vector<bool>> pending;
  auto enqueue = [&](std::size_t b, std::size_t a) {
    if (pending.size() <= b) pending.resize(b + 1, std::vector<bool>(sigma, false));
    if (!pending[b][a]) {
      pending[b][a] = true;
      work.emplace_back(b, a);
    }
  };
  if (part.num_blocks() == 2) {
    const std::size_t smaller = part.size(0) <= part.size(1) ? 0 : 1;
    for (std::size_t a = 0; a < sigma; ++a) enqueue(smaller, a);
  }

  std::vector<State> splitter;
  while (!work.empty()) {
    auto [b, a] = work.front();
    work.pop_front();
    pending[b][a] = false;
    auto span = part.members(b);
    splitter.assign(span.begin(), span.end());
    for (State t : splitter) {
      for (std::size_t i = pred_start[a][t]; i < pred_start[a][t + 1]; ++i) part.mark(pred_list[a][i]);
    }
    for (auto [old_block, new_block] : part.split_marked()) {
      if (pending.size() < part.num_blocks()) pending.resize(part.num_blocks(), std::vector<bool>(sigma, false));
      for (std::size_t x = 0; x < sigma; ++x) {
        if (pending[old_block][x]) {
          enqueue(new_block, x);
        } else {
          enqueue(part.size(new_block) <= part.size(old_block) ? new_block : old_block, x);
        }
      }
    }
  }

  // Canonical numbering: breadth-first from the initial class, events in order.
  const std::size_t sink_block = part.block_of(static_cast<State>(m));
  std::vector<State> number(part.num_blocks(), kNoState);
  std::vector<State> representative;
  std::deque<std::size_t> queue;
  const auto visit = [&](std::size_t block) {
    if (number[block] == kNoState) {
      number[block] = out.add_state();
      representative.push_back(part.members(block).front());
      queue.push_back(block);
    }
    return number[block];
  };
  visit(part.block_of(dfa.initial()));
  while (!queue.empty()) {
    const std::size_t block = queue.front();
    queue.pop_front();
    const State from = number[block];
    const State rep = representative[from];
    out.set_marked(from, dfa.is_marked(rep));
    for (std::size_t a = 0; a < sigma; ++a) {
      const std::size_t target = part.block_of(succ(rep, a));
      if (target == sink_block) continue;
      out.set_transition(from, static_cast<Label>(a), visit(target));
    }
  }
  out.set_initial(0);
  return out;
}

}  // namespace infobs
