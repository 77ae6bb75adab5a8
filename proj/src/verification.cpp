#include "infobs/verification.hpp"

#include <sstream>

#include "infobs/errors.hpp"
#include "infobs/identities.hpp"

namespace infobs {

void Verdict::expect(bool condition, const std::string& what) {
  if (condition) return;
  ok = false;
  failures.push_back(what);
}

void Verdict::merge(const Verdict& other, const std::string& prefix) {
  if (!other.ok) ok = false;
  for (const auto& f : other.failures) failures.push_back(prefix + f);
}

namespace {

// L_m(x) ⊆ L_m(y), exactly.
bool included(const Dfa& x, const Dfa& y) { return equivalent(product_intersection(x, y), x); }

Dfa nfa_language(const Nfa& nfa) { return minimize(determinize(nfa)); }

}  // namespace

Verdict verify_inf_o_structure(const Dfa& k, const Mask& mask, const InfOTrace& trace, std::size_t check_length) {
  Verdict v;
  const InfOStats& stats = trace.result.stats;
  const Dfa& result = trace.result.dfa;
  const std::size_t n = k.num_states();
  const Dfa closure = prefix_closure(k);
  if (closure.num_states() == 0) {
    v.expect(is_empty_language(result), "empty input gives a nonempty result");
    return v;
  }
  v.expect(stats.marked_subsets_contain_sink, "a marked subset misses the sink");
  if (n < 63) {
    v.expect(stats.marked_subsets <= (std::size_t{1} << n), "more than 2^n marked subsets");
    v.expect(stats.subset_states <= (std::size_t{2} << n) + 1, "more than 2^(n+1)+1 subset states");
    v.expect(stats.final_states <= (std::size_t{1} << n) + 1, "more than 2^n+1 final states");
  }
  v.expect(stats.final_states == result.num_states(), "final state count differs from the result");
  v.expect(is_prefix_closed(result), "result is not prefix-closed");
  v.expect(is_member(result, Word{}), "result misses the empty word");
  v.expect(included(closure, result), "result misses words of the prefix closure");
  v.expect(is_observable_bounded(result, mask, check_length), "result violates observability");
  return v;
}

Verdict verify_inf_o_instance(const Dfa& k, const Mask& mask, std::size_t check_length, std::size_t work_length) {
  Verdict v;
  const InfOTrace trace = inf_o_trace(k, mask);
  v.merge(verify_inf_o_structure(k, mask, trace, check_length));
  v.expect(equivalent(trace.result.dfa, inf_o_reference(k, mask)), "inf_o differs from the reference pipeline");
  const auto expected = enumerate_language(trace.result.dfa, check_length);
  const auto fixpoint = inf_o_fixpoint_bounded(k, mask, check_length, work_length);
  if (fixpoint != expected) {
    std::size_t missing = 0;
    std::size_t extra = 0;
    for (const auto& w : expected) missing += !fixpoint.count(w);
    for (const auto& w : fixpoint) extra += !expected.count(w);
    v.expect(false, "bounded fixpoint disagrees: " + std::to_string(missing) + " words only in inf_o, " +
                        std::to_string(extra) + " only in the fixpoint");
  }
  return v;
}

Verdict verify_quotient_identity_instance(const Dfa& k, const Mask& mask) {
  Verdict v;
  if (!is_prefix_closed(k)) throw InputError("quotient identity instances must be prefix-closed");
  for (Label e = 0; e < static_cast<Label>(k.alphabet().size()); ++e) {
    v.expect(equivalent(quotient_side(k, e, mask), intersection_side(k, e, mask)),
             "sides differ for event " + k.alphabet()[e]);
  }
  return v;
}

Verdict verify_gh_nfa_instance(const Dfa& k, const Mask& mask) {
  Verdict v;
  const Dfa closure = prefix_closure(k);
  const PrimedAlphabet primed(k.alphabet());
  const Nfa gh = build_gh_nfa(quotient_union_primed(closure, primed), mask, primed);
  const Dfa structural = nfa_language(gh);
  v.expect(gh.num_states() <= closure.num_states() + 1, "gh NFA has more than n+1 states");
  v.expect(equivalent(structural, direct_quotient_union(closure, mask)), "gh NFA differs from the quotient union");
  v.expect(equivalent(structural, primed_quotient_union(closure, mask)), "gh NFA differs from the primed union");
  return v;
}

Verdict verify_inf_c_instance(const Dfa& k, const UncontrollableSet& uncontrollable, std::size_t check_length) {
  Verdict v;
  const Dfa structural = inf_c(k, uncontrollable);
  v.expect(equivalent(structural, inf_c_reference(k, uncontrollable)), "inf_c differs from the concatenation");
  if (!is_empty_language(structural)) {
    v.expect(is_controllable_bounded(structural, universal_dfa(k.alphabet()), uncontrollable, check_length),
             "inf_c result is not controllable");
  }
  v.expect(included(prefix_closure(k), structural), "inf_c result misses words of the prefix closure");
  return v;
}

Verdict verify_inf_co_instance(const Dfa& k, const Dfa& plant, const UncontrollableSet& uncontrollable,
                               const Mask& mask, std::size_t check_length) {
  Verdict v;
  const Dfa sigma_star = universal_dfa(k.alphabet());
  const Dfa wrt_sigma_star = inf_co(k, sigma_star, uncontrollable, mask);
  const Dfa composed = minimize(inf_o(inf_c(k, uncontrollable), mask).dfa);
  v.expect(equivalent(wrt_sigma_star, composed), "inf_co wrt Σ* differs from inf_o(inf_c)");
  const Dfa wrt_plant = inf_co(k, plant, uncontrollable, mask);
  v.expect(equivalent(wrt_plant, product_intersection(wrt_sigma_star, generated_language(plant))),
           "inf_co wrt the plant differs from the intersection with L(G)");

  if (!is_empty_language(wrt_sigma_star)) {
    v.expect(is_observable_bounded(wrt_sigma_star, mask, check_length), "inf_co wrt Σ* is not observable");
    v.expect(is_controllable_bounded(wrt_sigma_star, sigma_star, uncontrollable, check_length),
             "inf_co wrt Σ* is not controllable");
  }
  const auto fixpoint =
      inf_o_fixpoint_bounded(k, mask, check_length, check_length, uncontrollable);
  v.expect(fixpoint == enumerate_language(wrt_sigma_star, check_length),
           "inf_co wrt Σ* disagrees with the joint bounded fixpoint");
  return v;
}

UncontrollableSet random_uncontrollable(InstanceRng& rng, const Alphabet& sigma) {
  UncontrollableSet u;
  for (const auto& e : sigma.events())
    if (rng.chance(0.5)) u.events.push_back(e);
  return u;
}

CampaignResult run_campaign(Campaign campaign, const CampaignOptions& options) {
  CampaignResult result;
  RandomDfaOptions dfa_options;
  dfa_options.max_states = options.max_states;
  dfa_options.max_events = options.max_events;
  dfa_options.prefix_closed = campaign == Campaign::kQuotientIdentity;
  for (std::size_t i = 0; i < options.instances; ++i) {
    const std::uint64_t seed = options.seed + i;
    InstanceRng rng(seed);
    const Dfa k = random_dfa(rng, dfa_options);
    const Mask mask = random_mask(rng, k.alphabet());
    Verdict v;
    switch (campaign) {
      case Campaign::kOracle: {
        const std::size_t work = options.work_length ? options.work_length : options.check_length;
        v = verify_inf_o_instance(k, mask, options.check_length, work);
        break;
      }
      case Campaign::kQuotientIdentity:
        v = verify_quotient_identity_instance(k, mask);
        break;
      case Campaign::kGhNfa:
        v = verify_gh_nfa_instance(k, mask);
        break;
    }
    if (v.ok) {
      ++result.passed;
    } else {
      ++result.failed;
      std::ostringstream line;
      line << "instance " << i << " (seed " << seed << "):";
      for (const auto& f : v.failures) line << ' ' << f << ';';
      result.failures.push_back(line.str());
    }
  }
  return result;
}

}  // namespace infobs
