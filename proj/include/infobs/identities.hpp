#pragma once

#include "infobs/automata.hpp"
#include "infobs/masks.hpp"

namespace infobs {

// Both sides of the quotient identities, each assembled from generic operations
// so they can be compared with equivalent().

/// (P⁻¹P(K/e))·e
Dfa quotient_side(const Dfa& k, Label event, const Mask& mask);

/// P⁻¹(P(K·e ∩ K)) ∩ Σ*e
Dfa intersection_side(const Dfa& k, Label event, const Mask& mask);

/// ∪_e (P⁻¹P(K/e))·e
Dfa direct_quotient_union(const Dfa& k, const Mask& mask);

/// g(h⁻¹h(∪_e (K/e)e′) ∩ Σ*Σ′) with a product for the intersection.
Dfa primed_quotient_union(const Dfa& k, const Mask& mask);

}  // namespace infobs
