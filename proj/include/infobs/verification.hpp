#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "infobs/inf.hpp"
#include "infobs/random_instances.hpp"

namespace infobs {

/// Accumulated outcome of a batch of checks; failures carry a short reason.
struct Verdict {
  bool ok = true;
  std::vector<std::string> failures;

  void expect(bool condition, const std::string& what);
  void merge(const Verdict& other, const std::string& prefix = {});
};

/// Invariants of one inf_o run that need no second pipeline: sink in every
/// marked subset, subset counts, upper bound, and properties of the result.
Verdict verify_inf_o_structure(const Dfa& k, const Mask& mask, const InfOTrace& trace, std::size_t check_length);

/// inf_o against the reference pipeline and the bounded fixpoint, plus structure.
Verdict verify_inf_o_instance(const Dfa& k, const Mask& mask, std::size_t check_length, std::size_t work_length);

/// (P⁻¹P(K/e))·e against P⁻¹P(Ke ∩ K) ∩ Σ*e for every event; K must be prefix-closed.
Verdict verify_quotient_identity_instance(const Dfa& k, const Mask& mask);

/// The NFA of build_gh_nfa against both generic quotient unions.
Verdict verify_gh_nfa_instance(const Dfa& k, const Mask& mask);

/// Structural inf_c against generic concatenation and bounded controllability.
Verdict verify_inf_c_instance(const Dfa& k, const UncontrollableSet& uncontrollable, std::size_t check_length);

/// Both decomposition identities of inf_co, and bounded agreement with the
/// fixpoint under the uncontrollable rule.
Verdict verify_inf_co_instance(const Dfa& k, const Dfa& plant, const UncontrollableSet& uncontrollable,
                               const Mask& mask, std::size_t check_length);

enum class Campaign { kOracle, kQuotientIdentity, kGhNfa };

struct CampaignOptions {
  std::size_t instances = 200;
  std::size_t max_states = 6;
  std::size_t max_events = 4;
  std::uint64_t seed = 42;
  std::size_t check_length = 8;
  /// Fixpoint work length; 0 selects the check length.
  std::size_t work_length = 0;
};

struct CampaignResult {
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// One line per failing instance, with its replay seed.
  std::vector<std::string> failures;

  bool ok() const { return failed == 0; }
};

/// Instance i is drawn from InstanceRng(seed + i).
CampaignResult run_campaign(Campaign campaign, const CampaignOptions& options);

/// Uncontrollable subset drawn with probability 1/2 per event.
UncontrollableSet random_uncontrollable(InstanceRng& rng, const Alphabet& sigma);

}  // namespace infobs
