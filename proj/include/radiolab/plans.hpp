#pragma once

#include "radiolab/labeling.hpp"
#include "radiolab/solver.hpp"
#include "radiolab/spire.hpp"

namespace radiolab {

struct OutOfRange : std::domain_error {
    using std::domain_error::domain_error;
};

struct FallbackRequired : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Each construction is an ordering generator plus a gap generator; the
// induced labeling starts at 1 and achieves the radio number of its
// target graph.

/// S_{2k,s}, 2 <= s <= k-2, k >= 7. Three ordering groups of 8, n-14
/// and 6 vertices; span 2k^2 - 4k + 2s + 3. Valid for k >= 8; at k = 7
/// the middle group vanishes and the pair (x_8, x_10) = (v_4, v_2)
/// misses the radio condition by 2, so plan_any solves n = 14 exactly
/// instead. The gap-column group sums hold for every k >= 7.
OrderingPlan plan_even_small_s(int k, int s);

/// S_{2k,k-1}, k >= 3; span 2k^2 - 2k.
OrderingPlan plan_even_s_km1(int k);

/// S_{2k,k}, k >= 2; span 2k^2 - 2k + 1.
OrderingPlan plan_even_s_k(int k);

/// S_{2k+1,s}, 2 <= s <= k, k >= 3; span 2k^2 - 2k + 2s.
OrderingPlan plan_odd(int k, int s);

/// S1_{2k+1,k+1}, k >= 2; span 2k^2 + 1. The same plan is a valid
/// radio labeling of S12_{2k+1,k+1}.
OrderingPlan plan_s1_center(int k);

/// S2_{2k+1,k+1}, k >= 2: the plan above with the first gap lowered to
/// 2k-2 (the first hop has distance 2 there); span 2k^2.
OrderingPlan plan_s2_center_odd(int k);

/// S12_{2k,k+1}, k >= 2: the s=k plain ordering ending on the spire;
/// span 2k^2 - 2k + 2.
OrderingPlan plan_s12_center_even(int k);

/// S2_{2k,k+1}: span 5 for k = 2 (the 4-cycle), otherwise the plan
/// above with span 2k^2 - 2k + 2, which is optimal for k >= 3.
OrderingPlan plan_s2_center_even(int k);

/// For a variant with 2 <= s <= floor(n/2) (S2/S12 need s >= 3): the
/// plain S_{n,s} plan reused verbatim on the variant's vertices; same
/// span. Throws FallbackRequired when the plain plan itself is only
/// available through the exact solver (even n with k <= 7 and
/// s <= k-2, or n = 5).
OrderingPlan plan_variant_induced(const SpireSpec& spec);

/// Dispatcher over all constructions. Specs with no closed-form
/// construction (plain even n in {8,10,12,14} with s <= k-2, n = 5,
/// and the induced-variant fallbacks) are solved exactly with target
/// span equal to the closed-form radio number, and the witness is
/// returned as a plan.
OrderingPlan plan_any(const SpireSpec& spec, const SolveOptions& solve_options = {});

}  // namespace radiolab
