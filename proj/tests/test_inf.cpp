#include <gtest/gtest.h>

#include "infobs/errors.hpp"
#include "infobs/inf.hpp"
#include "infobs/random_instances.hpp"
#include "infobs/verification.hpp"
#include "infobs/witnesses.hpp"
#include "oracles.hpp"

namespace infobs {
namespace {

const Alphabet kAbc{"a", "b", "c"};

Mask erase_c() { return make_projection(kAbc, {"a", "b"}); }

// Hand-built B_n: A_n's a/b moves, ε from n-1 to 0 in place of the c move,
// c-loops on 0..n-1, a and b into n from every state, c into n from n-1.
Nfa expected_b(std::size_t n) {
  Nfa b(kAbc);
  b.add_states(n + 1);
  const auto last = static_cast<State>(n - 1);
  const auto sink = static_cast<State>(n);
  for (State i = 0; i < n; ++i) {
    b.add_transition(i, "a", static_cast<State>((i + 1) % n));
    b.add_transition(i, "c", i);
    b.add_transition(i, "a", sink);
    b.add_transition(i, "b", sink);
  }
  for (State i = 1; i + 3 <= n; ++i) b.add_transition(i, "b", i + 1);
  b.add_transition(static_cast<State>(n - 2), "b", 0);
  b.add_transition(0, "b", 0);
  b.add_transition(last, "b", last);
  b.add_transition(last, kEpsilon, 0);
  b.add_transition(last, "c", sink);
  b.set_initial(0);
  b.set_marked(sink);
  return b;
}

Nfa gh_for(const Dfa& k, const Mask& m) {
  const PrimedAlphabet primed(k.alphabet());
  return build_gh_nfa(quotient_union_primed(prefix_closure(k), primed), m, primed);
}

State follow(const Dfa& d, State q, const Word& w) {
  for (const auto& e : w) {
    q = d.next(q, d.alphabet().index_of(e));
    if (q == kNoState) break;
  }
  return q;
}

TEST(BuildGh, MatchesDrawnNfa) {
  for (std::size_t n = 2; n <= 9; ++n) EXPECT_EQ(gh_for(gen_lower_bound(n), erase_c()), expected_b(n)) << n;
}

TEST(BuildGh, SinkHasNoMoves) {
  const Nfa b = gh_for(gen_lower_bound(5), erase_c());
  EXPECT_EQ(b.num_states(), 6U);
  EXPECT_TRUE(b.transitions(5).empty());
}

TEST(BuildGh, IdentityMaskOnlyRenames) {
  const Dfa k = gen_fig3();
  const Nfa b = gh_for(k, Mask::identity(k.alphabet()));
  EXPECT_FALSE(b.has_epsilon_transitions());
  const Dfa closure = prefix_closure(k);
  const QuotientUnionDfa q = quotient_union_primed(closure, PrimedAlphabet(k.alphabet()));
  EXPECT_EQ(b, rename_primed(to_nfa(q.dfa), PrimedAlphabet(k.alphabet())));
}

TEST(BuildGh, BlindMaskOnEpsilonMarksNothing) {
  const Alphabet a{"a"};
  const Nfa b = gh_for(epsilon_dfa(a), make_projection(a, {}));
  EXPECT_TRUE(enumerate_language(b, 4).empty());
}

TEST(BuildGh, Errors) {
  const PrimedAlphabet primed(kAbc);
  const QuotientUnionDfa q = quotient_union_primed(gen_fig3(), primed);
  EXPECT_THROW(build_gh_nfa(q, Mask::identity(Alphabet{"a"}), primed), InputError);
  EXPECT_THROW(build_gh_nfa(q, erase_c(), PrimedAlphabet(Alphabet{"a", "b"})), InputError);
}

TEST(BuildGh, LanguageIsDirectQuotientUnion) {
  for (const auto& v : {verify_gh_nfa_instance(gen_lower_bound(4), erase_c()),
                        verify_gh_nfa_instance(gen_fig3(), make_projection(kAbc, {"a"}))}) {
    EXPECT_TRUE(v.ok) << (v.failures.empty() ? "" : v.failures.front());
  }
  InstanceRng rng(71);
  for (int i = 0; i < 100; ++i) {
    const Dfa k = random_dfa(rng, {});
    const auto v = verify_gh_nfa_instance(k, random_mask(rng, k.alphabet()));
    EXPECT_TRUE(v.ok) << i << ": " << (v.failures.empty() ? "" : v.failures.front());
  }
}

TEST(AddEpsilonUnion, Examples) {
  const Alphabet a{"a"};
  const Dfa from_empty = add_epsilon_union(empty_dfa(a));
  EXPECT_EQ(enumerate_language(from_empty, 3), (std::set<Word>{{}}));

  const Dfa eps = epsilon_dfa(a);
  const Dfa again = add_epsilon_union(eps);
  EXPECT_EQ(again.num_states(), 2U);
  EXPECT_TRUE(equivalent(again, eps));

  const Dfa one = add_epsilon_union(word_dfa(a, {"a"}));
  EXPECT_EQ(enumerate_language(one, 3), (std::set<Word>{{}, {"a"}}));
  EXPECT_EQ(one.initial(), 2U);
}

TEST(InfO, EmptySpecification) {
  const InfOResult r = inf_o(empty_dfa(kAbc), erase_c());
  EXPECT_TRUE(is_empty_language(r.dfa));
  EXPECT_EQ(r.stats.final_states, 0U);
}

TEST(InfO, IdentityMaskGivesClosure) {
  InstanceRng rng(73);
  for (int i = 0; i < 100; ++i) {
    const Dfa k = random_dfa(rng, {});
    const Mask id = Mask::identity(k.alphabet());
    const Dfa closure = prefix_closure(k);
    EXPECT_TRUE(equivalent(inf_o(k, id).dfa, closure));
    EXPECT_TRUE(equivalent(inf_o_reference(k, id), closure));
    EXPECT_EQ(inf_o_fixpoint_bounded(k, id, 6, 6), enumerate_language(closure, 6));
  }
}

TEST(InfO, EpsilonOnly) {
  const Alphabet ab{"a", "b"};
  for (const Mask& m : {Mask::identity(ab), make_projection(ab, {})}) {
    EXPECT_EQ(enumerate_language(inf_o(epsilon_dfa(ab), m).dfa, 3), (std::set<Word>{{}}));
    EXPECT_EQ(enumerate_language(inf_o_reference(epsilon_dfa(ab), m), 3), (std::set<Word>{{}}));
  }
}

TEST(InfO, LowerBoundFamilySizes) {
  // Pinned from runs checked against the reference pipeline and the fixpoint.
  const std::size_t expected[] = {0, 0, 2, 5, 11, 23, 47, 95, 191, 383, 767};
  for (std::size_t n = 2; n <= 10; ++n) {
    const InfOResult r = inf_o(gen_lower_bound(n), erase_c());
    EXPECT_EQ(r.stats.final_states, expected[n]) << n;
    EXPECT_EQ(r.dfa.num_states(), expected[n]);
  }
  for (std::size_t n = 2; n <= 5; ++n) {
    const Dfa k = gen_lower_bound(n);
    EXPECT_TRUE(equivalent(inf_o(k, erase_c()).dfa, inf_o_reference(k, erase_c())));
    EXPECT_EQ(inf_o_fixpoint_bounded(k, erase_c(), 8, 8), enumerate_language(inf_o(k, erase_c()).dfa, 8));
  }
}

TEST(InfO, Stats) {
  const InfOResult r = inf_o(gen_lower_bound(4), erase_c());
  EXPECT_EQ(r.stats.input_states, 4U);
  EXPECT_EQ(r.stats.closure_states, 4U);
  EXPECT_EQ(r.stats.gh_nfa_states, 5U);
  EXPECT_EQ(r.stats.subset_states, 18U);
  EXPECT_EQ(r.stats.marked_subsets, 11U);
  EXPECT_TRUE(r.stats.marked_subsets_contain_sink);
}

TEST(InfO, AlphabetMismatch) {
  EXPECT_THROW(inf_o(gen_fig3(), Mask::identity(Alphabet{"a"})), InputError);
  EXPECT_THROW(inf_o_reference(gen_fig3(), Mask::identity(Alphabet{"a"})), InputError);
  EXPECT_THROW(inf_o(gen_lower_bound(12), erase_c(), 100), ResourceError);
}

TEST(InfO, RandomInstancesAgreeAndSatisfyInvariants) {
  InstanceRng rng(79);
  for (int i = 0; i < 60; ++i) {
    RandomDfaOptions options;
    options.max_states = 5;
    options.max_events = 3;
    const Dfa k = random_dfa(rng, options);
    const Mask m = random_mask(rng, k.alphabet());
    const auto v = verify_inf_o_instance(k, m, 6, 6);
    EXPECT_TRUE(v.ok) << i << ": " << (v.failures.empty() ? "" : v.failures.front());
  }
}

TEST(InfO, ObservableAgainstBruteForce) {
  InstanceRng rng(83);
  for (int i = 0; i < 40; ++i) {
    RandomDfaOptions options;
    options.max_states = 4;
    options.max_events = 3;
    const Dfa k = random_dfa(rng, options);
    const Mask m = random_mask(rng, k.alphabet());
    const Dfa r = inf_o(k, m).dfa;
    if (is_empty_language(r)) continue;
    EXPECT_TRUE(oracle::observable([&](const Word& w) { return oracle::accepts(r, w); }, m, 5)) << i;
  }
}

TEST(LowerBoundProof, SubsetCheckpoints) {
  for (std::size_t n = 3; n <= 8; ++n) {
    const SubsetConstruction sc = subset_construction(gh_for(gen_lower_bound(n), erase_c()));
    const auto sink = static_cast<State>(n);
    ASSERT_EQ(sc.subsets[0], StateSet{0});
    EXPECT_EQ(sc.subsets[follow(sc.dfa, 0, {"b"})], (StateSet{0, sink}));
    EXPECT_EQ(sc.subsets[follow(sc.dfa, 0, Word(n - 2, "a"))], (StateSet{static_cast<State>(n - 2), sink}));
  }
}

TEST(LowerBoundProof, MarkedSubsetCount) {
  for (std::size_t n = 2; n <= 10; ++n) {
    const InfOResult r = inf_o(gen_lower_bound(n), erase_c());
    EXPECT_EQ(r.stats.marked_subsets, (std::size_t{1} << (n - 1)) + (std::size_t{1} << (n - 2)) - 1) << n;
  }
}

TEST(LowerBoundProof, NewInitialMergesWithZeroSink) {
  for (std::size_t n = 2; n <= 8; ++n) {
    const InfOTrace t = inf_o_trace(gen_lower_bound(n), erase_c());
    const State zero_sink = follow(t.subsets.dfa, 0, {"b"});
    const Dfa& d = t.with_epsilon;
    EXPECT_TRUE(equivalent(with_initial(d, d.initial()), with_initial(d, zero_sink))) << n;
    EXPECT_EQ(t.result.dfa, minimize(t.supremal));
  }
}

TEST(LowerBoundProof, Distinguishability) {
  for (std::size_t n = 2; n <= 7; ++n) {
    const Nfa b = gh_for(gen_lower_bound(n), erase_c());
    for (State q = 0; q <= n; ++q) {
      const Nfa from = with_initial(b, q);
      EXPECT_EQ(is_member(from, Word{}), q == n);
      // a^i c with i < n-1 singles out state n-1-i; the ε move lets n-1 act as 0 otherwise.
      for (std::size_t i = 0; i < n; ++i) {
        Word w(i, "a");
        w.push_back("c");
        const bool expected = i + 1 < n ? q == n - 1 - i : q == 0 || q == n - 1;
        EXPECT_EQ(is_member(from, w), expected) << n << " " << q << " " << i;
      }
    }
  }
}

TEST(InfC, Examples) {
  const Alphabet ab{"a", "b"};
  const Dfa k = word_dfa(ab, {"a", "b"});
  EXPECT_TRUE(equivalent(inf_c(k, {}), prefix_closure(k)));
  EXPECT_TRUE(is_empty_language(inf_c(empty_dfa(ab), {{"b"}})));
  const auto closure = [&](const Word& w) { return oracle::accepts(prefix_closure(k), w); };
  const Dfa r = inf_c(k, {{"b"}});
  const auto expected = oracle::filter(ab, 4, [&](const Word& w) {
    return oracle::in_closure_times_uncontrollable(closure, {"b"}, w);
  });
  EXPECT_EQ(enumerate_language(r, 4), expected);
  EXPECT_TRUE(expected.count({"b", "b"}));
  EXPECT_TRUE(expected.count({"a", "b", "b"}));
  EXPECT_FALSE(expected.count({"b", "a"}));
  EXPECT_THROW(inf_c(k, {{"z"}}), InputError);
}

TEST(InfC, AgainstWordLevelDefinition) {
  InstanceRng rng(89);
  for (int i = 0; i < 100; ++i) {
    const Dfa k = random_dfa(rng, {});
    const UncontrollableSet u = random_uncontrollable(rng, k.alphabet());
    const Dfa closure = prefix_closure(k);
    const Dfa r = inf_c(k, u);
    for (const auto& w : oracle::all_words(k.alphabet(), 5)) {
      ASSERT_EQ(oracle::accepts(r, w), oracle::in_closure_times_uncontrollable(
                                           [&](const Word& x) { return oracle::accepts(closure, x); }, u.events, w));
    }
    const auto v = verify_inf_c_instance(k, u, 6);
    EXPECT_TRUE(v.ok) << i;
  }
}

TEST(InfCo, Examples) {
  InstanceRng rng(97);
  for (int i = 0; i < 30; ++i) {
    const Dfa k = random_dfa(rng, {});
    const Alphabet& s = k.alphabet();
    const Mask id = Mask::identity(s);
    EXPECT_TRUE(equivalent(inf_co(k, universal_dfa(s), {}, id), prefix_closure(k)));
    const UncontrollableSet u = random_uncontrollable(rng, s);
    const Mask m = random_mask(rng, s);
    EXPECT_TRUE(equivalent(inf_co(k, universal_dfa(s), u, m), inf_o(inf_c(k, u), m).dfa));
  }
  EXPECT_THROW(inf_co(gen_fig3(), universal_dfa(Alphabet{"a"}), {}, Mask::identity(Alphabet{"a"})), InputError);
}

TEST(InfCo, PlantMarkingIsIgnored) {
  const Dfa k = gen_fig3();
  Dfa plant = universal_dfa(k.alphabet());
  plant.set_marked(0, false);
  const Mask m = make_projection(k.alphabet(), {"a"});
  EXPECT_TRUE(equivalent(inf_co(k, plant, {{"c"}}, m), inf_co(k, universal_dfa(k.alphabet()), {{"c"}}, m)));
}

TEST(InfCo, IdentitiesOnRandomInstances) {
  InstanceRng rng(101);
  for (int i = 0; i < 40; ++i) {
    RandomDfaOptions options;
    options.max_states = 4;
    const Dfa k = random_dfa(rng, options);
    RandomDfaOptions plant_options;
    plant_options.min_events = plant_options.max_events = k.alphabet().size();
    const Dfa plant = random_dfa(rng, plant_options);
    const auto v = verify_inf_co_instance(k, plant, random_uncontrollable(rng, k.alphabet()),
                                          random_mask(rng, k.alphabet()), 6);
    EXPECT_TRUE(v.ok) << i << ": " << (v.failures.empty() ? "" : v.failures.front());
  }
}

TEST(Fixpoint, OneRuleApplication) {
  Dfa k(kAbc);
  k.add_states(3);
  k.set_initial(0);
  k.set_transition(0, "a", 1);
  k.set_transition(0, "c", 2);
  for (State q = 0; q < 3; ++q) k.set_marked(q);
  const auto words = inf_o_fixpoint_bounded(k, erase_c(), 2, 2);
  // c extends ε, and c looks like ε, so c must extend c: the result is c* ∪ c*a.
  EXPECT_EQ(words, (std::set<Word>{{}, {"a"}, {"c"}, {"c", "a"}, {"c", "c"}}));
  EXPECT_EQ(words, enumerate_language(inf_o(k, erase_c()).dfa, 2));
  EXPECT_THROW(inf_o_fixpoint_bounded(k, erase_c(), 3, 2), InputError);
}

TEST(Fixpoint, SubsetOfInfimalLanguage) {
  InstanceRng rng(103);
  for (int i = 0; i < 60; ++i) {
    RandomDfaOptions options;
    options.max_states = 5;
    options.max_events = 3;
    const Dfa k = random_dfa(rng, options);
    const Mask m = random_mask(rng, k.alphabet());
    const auto exact = enumerate_language(inf_o(k, m).dfa, 6);
    for (std::size_t work = 6; work <= 8; ++work) {
      for (const auto& w : inf_o_fixpoint_bounded(k, m, 6, work)) EXPECT_TRUE(exact.count(w)) << i;
    }
  }
}

TEST(Observability, Examples) {
  // {ε, a, c} closed, missing ca, c unobservable: ε and c look alike.
  Dfa l(kAbc);
  l.add_states(3);
  l.set_initial(0);
  l.set_transition(0, "a", 1);
  l.set_transition(0, "c", 2);
  for (State q = 0; q < 3; ++q) l.set_marked(q);
  EXPECT_FALSE(is_observable_bounded(l, erase_c(), 2));
  EXPECT_TRUE(is_observable_bounded(l, Mask::identity(kAbc), 6));
  EXPECT_THROW(is_observable_bounded(gen_fig3(), erase_c(), 4), InputError);
}

TEST(Observability, AgainstTripleSearch) {
  InstanceRng rng(107);
  RandomDfaOptions options;
  options.prefix_closed = true;
  options.max_states = 4;
  options.max_events = 3;
  for (int i = 0; i < 150; ++i) {
    const Dfa l = random_dfa(rng, options);
    const Mask m = random_mask(rng, l.alphabet());
    EXPECT_EQ(is_observable_bounded(l, m, 4), oracle::observable([&](const Word& w) { return oracle::accepts(l, w); }, m, 4))
        << i;
  }
}

TEST(Controllability, Examples) {
  const Alphabet ab{"a", "b"};
  const Dfa k = prefix_closure(word_dfa(ab, {"a", "b"}));
  EXPECT_TRUE(is_controllable_bounded(k, universal_dfa(ab), {}, 5));
  EXPECT_FALSE(is_controllable_bounded(k, universal_dfa(ab), {{"b"}}, 5));
  EXPECT_TRUE(is_controllable_bounded(inf_c(k, {{"b"}}), universal_dfa(ab), {{"b"}}, 6));
  // The plant rules out b at the start.
  EXPECT_TRUE(is_controllable_bounded(k, k, {{"b"}}, 5));
}

TEST(CountWords, MatchesEnumeration) {
  InstanceRng rng(109);
  for (int i = 0; i < 50; ++i) {
    const Dfa d = random_dfa(rng, {});
    EXPECT_EQ(count_words_up_to(d, 5), enumerate_language(d, 5).size());
  }
}

}  // namespace
}  // namespace infobs
