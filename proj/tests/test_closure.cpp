#include <gtest/gtest.h>

#include "infobs/closure.hpp"
#include "infobs/errors.hpp"
#include "infobs/identities.hpp"
#include "infobs/random_instances.hpp"
#include "infobs/witnesses.hpp"
#include "oracles.hpp"

namespace infobs {
namespace {

Dfa just_word(const Alphabet& sigma, const Word& w) { return word_dfa(sigma, w); }

TEST(PrefixClosure, Examples) {
  const Alphabet ab{"a", "b"};
  EXPECT_EQ(enumerate_language(prefix_closure(just_word(ab, {"a", "b"})), 3),
            (std::set<Word>{{}, {"a"}, {"a", "b"}}));
  const Dfa closed = generated_language(universal_dfa(ab));
  EXPECT_TRUE(equivalent(prefix_closure(closed), closed));

  Dfa dead(ab);
  dead.add_states(3);
  dead.set_initial(0);
  dead.set_transition(0, "a", 1);
  dead.set_transition(0, "b", 2);
  dead.set_marked(1);
  const Dfa c = prefix_closure(dead);
  EXPECT_EQ(c.num_states(), 2U);
  EXPECT_EQ(enumerate_language(c, 3), (std::set<Word>{{}, {"a"}}));
}

TEST(PrefixClosure, BoundedExtensionProperty) {
  InstanceRng rng(31);
  for (int i = 0; i < 100; ++i) {
    const Dfa d = random_dfa(rng, {});
    const Dfa c = prefix_closure(d);
    const auto member = [&](const Word& w) { return oracle::accepts(d, w); };
    for (const auto& w : oracle::all_words(d.alphabet(), 4))
      EXPECT_EQ(oracle::accepts(c, w), oracle::in_prefix_closure(member, d.alphabet(), w, d.num_states()));
  }
}

TEST(RightQuotient, Fig3MarkedSets) {
  const Dfa fig3 = gen_fig3();
  const auto marked = [](const Dfa& d) {
    StateSet s;
    for (State q = 0; q < d.num_states(); ++q)
      if (d.is_marked(q)) s.push_back(q);
    return s;
  };
  EXPECT_EQ(marked(right_quotient_event(fig3, 0)), (StateSet{0, 1}));
  EXPECT_EQ(marked(right_quotient_event(fig3, 1)), (StateSet{0}));
  EXPECT_EQ(marked(right_quotient_event(fig3, 2)), StateSet{});
  EXPECT_EQ(right_quotient_event(fig3, 0).num_states(), fig3.num_states());
  EXPECT_THROW(right_quotient_event(fig3, 3), InputError);
}

TEST(RightQuotient, Examples) {
  const Alphabet ab{"a", "b"};
  EXPECT_TRUE(is_empty_language(right_quotient_event(empty_dfa(ab), 0)));
  const Dfa closed_ab = prefix_closure(just_word(ab, {"a", "b"}));
  EXPECT_EQ(enumerate_language(right_quotient_event(closed_ab, 1), 3), (std::set<Word>{{"a"}}));
}

TEST(RightQuotient, BoundedMembership) {
  InstanceRng rng(37);
  for (int i = 0; i < 500; ++i) {
    const Dfa d = random_dfa(rng, {});
    const auto e = static_cast<Label>(rng.uniform(0, d.alphabet().size() - 1));
    const Dfa q = right_quotient_event(d, e);
    for (const auto& w : oracle::all_words(d.alphabet(), i < 50 ? 6 : 3))
      ASSERT_EQ(oracle::accepts(q, w), oracle::accepts(d, oracle::concat(w, {d.alphabet()[e]})));
  }
}

TEST(QuotientUnion, Fig3) {
  const Dfa fig3 = gen_fig3();
  const PrimedAlphabet primed(fig3.alphabet());
  const QuotientUnionDfa q = quotient_union_primed(fig3, primed);
  const Dfa& b = q.dfa;
  ASSERT_EQ(b.num_states(), 3U);
  EXPECT_EQ(q.sink, 2U);
  EXPECT_EQ(b.num_marked(), 1U);
  EXPECT_TRUE(b.is_marked(2));
  const Alphabet& both = primed.combined();
  EXPECT_EQ(b.next(0, both.index_of("a'")), 2U);
  EXPECT_EQ(b.next(0, both.index_of("b'")), 2U);
  EXPECT_EQ(b.next(1, both.index_of("a'")), 2U);
  EXPECT_EQ(b.next(1, both.index_of("c'")), kNoState);
  EXPECT_EQ(b.next(0, both.index_of("c'")), kNoState);
  EXPECT_EQ(b.next(0, both.index_of("a")), 1U);
  EXPECT_EQ(b.next(1, both.index_of("c")), 0U);
  // The quotient by c is empty, yet c' stays in the alphabet.
  EXPECT_TRUE(both.contains("c'"));
  EXPECT_EQ(b.state_name(2), "2");
}

TEST(QuotientUnion, Invariants) {
  InstanceRng rng(41);
  for (int i = 0; i < 100; ++i) {
    const Dfa d = random_dfa(rng, {});
    const PrimedAlphabet primed(d.alphabet());
    const QuotientUnionDfa q = quotient_union_primed(d, primed);
    ASSERT_LE(q.dfa.num_states(), d.num_states() + 1);
    EXPECT_EQ(q.dfa.num_marked(), 1U);
    EXPECT_TRUE(q.dfa.is_marked(q.sink));
    for (Label a = 0; a < static_cast<Label>(primed.combined().size()); ++a) {
      EXPECT_EQ(q.dfa.next(q.sink, a), kNoState);
      const bool is_primed = primed.primed().contains(primed.combined()[a]);
      for (State s = 0; s < q.dfa.num_states(); ++s)
        if (q.dfa.next(s, a) == q.sink) {
          EXPECT_TRUE(is_primed);
        }
    }
    // Marked words: an unprimed prefix w and one primed letter e' with we ∈ L.
    for (const auto& w : enumerate_language(q.dfa, 5)) {
      ASSERT_FALSE(w.empty());
      Word base(w.begin(), w.end() - 1);
      std::string last = w.back();
      ASSERT_EQ(last.back(), kPrimeMarker);
      last.pop_back();
      for (const auto& x : base) EXPECT_NE(x.back(), kPrimeMarker);
      EXPECT_TRUE(oracle::accepts(d, oracle::concat(base, {last})));
    }
    for (const auto& w : oracle::all_words(d.alphabet(), 3)) {
      for (const auto& e : d.alphabet().events()) {
        if (oracle::accepts(d, oracle::concat(w, {e}))) {
          EXPECT_TRUE(is_member(q.dfa, oracle::concat(w, {e + "'"})));
        }
      }
    }
  }
}

TEST(QuotientUnion, EpsilonOnlyInputMarksNothing) {
  const Alphabet ab{"a", "b"};
  const PrimedAlphabet primed(ab);
  EXPECT_TRUE(is_empty_language(quotient_union_primed(epsilon_dfa(ab), primed).dfa));
}

TEST(QuotientUnion, SinkNameAvoidsClash) {
  Dfa d(Alphabet{"a"});
  d.add_state("1");
  d.add_state("x");
  d.set_initial(0);
  d.set_transition(0, "a", 1);
  d.set_marked(1);
  const QuotientUnionDfa q = quotient_union_primed(d, PrimedAlphabet(d.alphabet()));
  EXPECT_EQ(q.dfa.state_name(q.sink), "2");
  Dfa e(Alphabet{"a"});
  e.add_state("2");
  e.add_state("0");
  e.set_initial(0);
  const QuotientUnionDfa r = quotient_union_primed(e, PrimedAlphabet(e.alphabet()));
  EXPECT_EQ(r.dfa.state_name(r.sink), "f");
}

TEST(QuotientUnion, TightFamily) {
  for (std::size_t n = 2; n <= 12; ++n) {
    const Dfa k = gen_quotient_tight(n);
    EXPECT_EQ(minimize(k).num_states(), n);
    EXPECT_EQ(minimize(quotient_union_primed(k, PrimedAlphabet(k.alphabet())).dfa).num_states(), n + 1) << n;
  }
}

TEST(SupremalPrefixClosed, Examples) {
  const Alphabet ab{"a", "b"};
  const Dfa all = generated_language(universal_dfa(ab));
  EXPECT_TRUE(equivalent(supremal_prefix_closed(all), all));
  EXPECT_TRUE(is_empty_language(supremal_prefix_closed(just_word(ab, {"a", "b"}))));
  const Dfa a2 = supremal_prefix_closed(determinize(gen_prime_nfa(2)));
  std::set<Word> expected;
  for (std::size_t i = 0; i < 6; ++i) expected.insert(Word(i, "a"));
  EXPECT_EQ(enumerate_language(a2, 12), expected);
}

TEST(SupremalPrefixClosed, SubsetClosedMaximal) {
  InstanceRng rng(43);
  for (int i = 0; i < 150; ++i) {
    const Dfa d = random_dfa(rng, {});
    const Dfa s = supremal_prefix_closed(d);
    EXPECT_TRUE(is_prefix_closed(s));
    EXPECT_TRUE(equivalent(product_intersection(s, d), s));
    for (const auto& w : oracle::all_words(d.alphabet(), i < 30 ? 6 : 4)) {
      bool every_prefix = true;
      for (std::size_t k = 0; k <= w.size(); ++k) every_prefix = every_prefix && oracle::accepts(d, oracle::prefix(w, k));
      ASSERT_EQ(oracle::accepts(s, w), every_prefix);
    }
  }
}

TEST(IsPrefixClosed, DfaExamples) {
  const Alphabet ab{"a", "b"};
  EXPECT_TRUE(is_prefix_closed(generated_language(universal_dfa(ab))));
  EXPECT_FALSE(is_prefix_closed(just_word(ab, {"a", "b"})));
  EXPECT_FALSE(is_prefix_closed(gen_fig3()));
  EXPECT_TRUE(is_prefix_closed(empty_dfa(ab)));
}

TEST(IsPrefixClosed, NfaExamples) {
  EXPECT_TRUE(is_prefix_closed(gen_fig4()));
  EXPECT_FALSE(is_prefix_closed(to_nfa(just_word(Alphabet{"a", "b"}, {"a", "b"}))));
  InstanceRng rng(47);
  for (int i = 0; i < 100; ++i) EXPECT_TRUE(is_prefix_closed(random_all_marked_nfa(rng, 6, standard_alphabet(3))));
  EXPECT_THROW(is_prefix_closed(gen_prime_nfa(3), 4), ResourceError);
}

TEST(IsPrefixClosed, AgreesWithWordDefinition) {
  InstanceRng rng(53);
  for (int i = 0; i < 200; ++i) {
    const Dfa d = random_dfa(rng, {});
    // Up to length 6 suffices for these sizes only as a one-way check.
    bool closed_up_to = true;
    for (const auto& w : enumerate_language(d, 6))
      for (std::size_t k = 0; k < w.size(); ++k) closed_up_to = closed_up_to && oracle::accepts(d, oracle::prefix(w, k));
    if (is_prefix_closed(d)) {
      EXPECT_TRUE(closed_up_to);
    }
    EXPECT_EQ(is_prefix_closed(d), equivalent(d, prefix_closure(d)));
  }
}

TEST(QuotientIdentity, RandomPrefixClosed) {
  InstanceRng rng(59);
  RandomDfaOptions options;
  options.prefix_closed = true;
  for (int i = 0; i < 100; ++i) {
    const Dfa k = random_dfa(rng, options);
    const Mask m = random_mask(rng, k.alphabet());
    for (Label e = 0; e < static_cast<Label>(k.alphabet().size()); ++e)
      EXPECT_TRUE(equivalent(quotient_side(k, e, m), intersection_side(k, e, m))) << i;
  }
}

TEST(QuotientIdentity, FailsWithoutPrefixClosure) {
  const Alphabet a{"a"};
  const Dfa aa = just_word(a, {"a", "a"});
  const Mask id = Mask::identity(a);
  EXPECT_TRUE(is_empty_language(intersection_side(aa, 0, id)));
  EXPECT_EQ(enumerate_language(quotient_side(aa, 0, id), 4), (std::set<Word>{{"a", "a"}}));
}

TEST(GhNfaLanguage, PrimedAgreesWithDirect) {
  InstanceRng rng(61);
  RandomDfaOptions options;
  options.prefix_closed = true;
  for (int i = 0; i < 100; ++i) {
    const Dfa k = random_dfa(rng, options);
    const Mask m = random_mask(rng, k.alphabet());
    EXPECT_TRUE(equivalent(primed_quotient_union(k, m), direct_quotient_union(k, m))) << i;
  }
}

}  // namespace
}  // namespace infobs
