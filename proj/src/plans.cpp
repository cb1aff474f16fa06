#include "radiolab/plans.hpp"

#include <algorithm>
#include <numeric>

#include "radiolab/bounds.hpp"

namespace radiolab {

namespace {

void require(bool condition, const char* what) {
    if (!condition) throw OutOfRange(what);
}

OrderingPlan witness_to_plan(const RadioLabeling& witness) {
    OrderingPlan plan;
    plan.order.resize(witness.order());
    std::iota(plan.order.begin(), plan.order.end(), 1);
    std::sort(plan.order.begin(), plan.order.end(),
              [&](int u, int v) { return witness.label(u) < witness.label(v); });
    plan.base = witness.label(plan.order.front());
    for (size_t i = 0; i + 1 < plan.order.size(); ++i)
        plan.gaps.push_back(witness.label(plan.order[i + 1]) -
                            witness.label(plan.order[i]));
    return plan;
}

OrderingPlan solve_with_target(const SpireSpec& spec, const SolveOptions& options) {
    Graph g = build_spire(spec);
    SolveOptions opt = options;
    opt.target = rn_formula(spec);
    SolveResult result = rn_exact(g, opt);
    bool certified = (result.status == SolveStatus::TargetMet ||
                      result.status == SolveStatus::Optimal) &&
                     result.rn <= *opt.target;
    if (!certified)
        throw std::runtime_error(std::string("exact search for ") +
                                 variant_name(spec.variant) + "(n=" +
                                 std::to_string(spec.n) + ", s=" + std::to_string(spec.s) +
                                 ") exhausted its budget before reaching span " +
                                 std::to_string(*opt.target));
    return witness_to_plan(result.witness);
}

}  // namespace

OrderingPlan plan_even_small_s(int k, int s) {
    require(k >= 7, "plan_even_small_s needs k >= 7");
    require(s >= 2 && s <= k - 2, "plan_even_small_s needs 2 <= s <= k-2");

    OrderingPlan plan;
    auto v = [&](int i) { plan.order.push_back(i); };
    auto gap = [&](int d) { plan.gaps.push_back(d); };

    // Group I: eight fixed vertices
    v(k); v(2 * k); v(k + 4); v(5); v(k + 3); v(3); v(k + 2); v(4);
    gap(k + s - 2); gap(k + s - 6); gap(k); gap(k + 1);
    gap(k - 1); gap(k); gap(k + 1); gap(k - 2);
    // Group II: alternation v_{k+m}, v_{m+1}
    for (int m = 5; m <= k - 3; ++m) {
        v(k + m); v(m + 1);
        gap(k); gap(k - 1);
    }
    // Group III: six fixed vertices
    v(2 * k - 2); v(2); v(k + 1); v(1); v(2 * k - 1); v(k - 1);
    gap(4); gap(k); gap(k - 1); gap(2); gap(k - 1);
    return plan;
}

OrderingPlan plan_even_s_km1(int k) {
    require(k >= 3, "plan_even_s_km1 needs k >= 3");

    OrderingPlan plan;
    plan.order = {k - 1, 2 * k - 1, 2 * k};
    plan.gaps = {k - 1, k - 1, k - 1};
    for (int m = 2; m <= k - 1; ++m) {
        plan.order.push_back(2 * k - m);
        plan.order.push_back(k - m);
        plan.gaps.push_back(k - 1);
        plan.gaps.push_back(k);
    }
    plan.order.push_back(k);
    return plan;
}

OrderingPlan plan_even_s_k(int k) {
    require(k >= 2, "plan_even_s_k needs k >= 2");

    OrderingPlan plan;
    plan.order = {k};
    plan.gaps = {k};
    for (int m = 1; m <= k - 1; ++m) {
        plan.order.push_back(m);
        plan.order.push_back(k + m);
        plan.gaps.push_back(k - 1);
        plan.gaps.push_back(k);
    }
    plan.order.push_back(2 * k);
    plan.gaps.back() = k - 1;  // v_{2k-1} -> spire has distance k, not k-1
    return plan;
}

OrderingPlan plan_odd(int k, int s) {
    require(k >= 3, "plan_odd needs k >= 3 (n = 5 goes through the exact solver)");
    require(s >= 2 && s <= k, "plan_odd needs 2 <= s <= k");

    OrderingPlan plan;
    // Group I: v_{k-1}, v_{2k-1}, v_{k-2}, v_{2k-2}, ..., v_2, v_{k+2}
    for (int j = 1; j <= k - 2; ++j) {
        plan.order.push_back(k - j);
        plan.order.push_back(2 * k - j);
    }
    // Group II
    for (int i : {2 * k + 1, k + 1, 1, 2 * k, k}) plan.order.push_back(i);

    for (int i = 1; i <= 2 * k - 5; ++i) plan.gaps.push_back(i % 2 == 1 ? k : k - 1);
    plan.gaps.push_back(k - 3 + s);
    plan.gaps.push_back(k - 2 + s);
    plan.gaps.push_back(k);
    plan.gaps.push_back(1);
    plan.gaps.push_back(k);
    return plan;
}

OrderingPlan plan_s1_center(int k) {
    require(k >= 2, "plan_s1_center needs k >= 2");

    OrderingPlan plan;
    plan.order = {k, 2 * k + 1};
    plan.gaps = {2 * k - 1, k};
    for (int j = 0; j <= k - 2; ++j) {
        plan.order.push_back(2 * k - j);
        plan.order.push_back(k - 1 - j);
        plan.gaps.push_back(k - 1);
        plan.gaps.push_back(k);
    }
    plan.order.push_back(k + 1);
    return plan;
}

OrderingPlan plan_s2_center_odd(int k) {
    OrderingPlan plan = plan_s1_center(k);
    plan.gaps.front() = 2 * k - 2;  // d(v_k, spire) is 2 on S2
    return plan;
}

OrderingPlan plan_s12_center_even(int k) {
    require(k >= 2, "plan_s12_center_even needs k >= 2");

    // The s=k plain ordering reused with the spire last. The spire sits
    // one hop closer to v_{2k-1} here, so the final gap grows to k and
    // every earlier label keeps its plain-graph clearance to the spire.
    OrderingPlan plan = plan_even_s_k(k);
    plan.gaps.back() = k;
    return plan;
}

OrderingPlan plan_s2_center_even(int k) {
    require(k >= 2, "plan_s2_center_even needs k >= 2");
    if (k == 2) {
        // C_4: one unit tighter than the k>=3 pattern allows
        return {{2, 4, 3, 1}, {1, 2, 1}, 1};
    }
    return plan_s12_center_even(k);
}

OrderingPlan plan_variant_induced(const SpireSpec& spec) {
    validate_spec(spec);
    if (spec.variant == Variant::Plain)
        throw OutOfRange("plan_variant_induced expects a non-plain variant");
    const int n = spec.n;
    const int s = spec.s;
    if (s < 2 || s > n / 2 ||
        ((spec.variant == Variant::S2 || spec.variant == Variant::S12) && s < 3))
        throw OutOfRange("plan_variant_induced needs 2 <= s <= n/2 (3 <= s for s2/s12)");

    if (n % 2 == 0) {
        const int k = n / 2;
        if (s == k) return plan_even_s_k(k);
        if (s == k - 1) return plan_even_s_km1(k);
        if (k >= 8) return plan_even_small_s(k, s);
        throw FallbackRequired("plain plan for S(" + std::to_string(n) + "," +
                               std::to_string(s) + ") is solver-derived");
    }
    const int k = (n - 1) / 2;
    if (k >= 3) return plan_odd(k, s);
    throw FallbackRequired("plain plan for S(5," + std::to_string(s) +
                           ") is solver-derived");
}

OrderingPlan plan_any(const SpireSpec& raw, const SolveOptions& solve_options) {
    SpireSpec spec = normalize(raw);
    const int n = spec.n;
    const int s = spec.s;

    if (spec.variant == Variant::Plain) {
        if (n % 2 == 0) {
            const int k = n / 2;
            if (s == k) return plan_even_s_k(k);
            if (s == k - 1) return plan_even_s_km1(k);
            if (k >= 8) return plan_even_small_s(k, s);
            return solve_with_target(spec, solve_options);  // n in {8, 10, 12, 14}
        }
        const int k = (n - 1) / 2;
        if (k >= 3) return plan_odd(k, s);
        return solve_with_target(spec, solve_options);  // n = 5
    }

    if (s <= n / 2) {
        try {
            return plan_variant_induced(spec);
        } catch (const FallbackRequired&) {
            return solve_with_target(spec, solve_options);
        }
    }

    // center-spire cases
    if (n % 2 == 1) {
        const int k = (n - 1) / 2;  // s == k+1
        if (spec.variant == Variant::S2) return plan_s2_center_odd(k);
        return plan_s1_center(k);  // S1 and S12 share the same plan
    }
    const int k = n / 2;  // s == k+1, variant is S2 or S12
    if (spec.variant == Variant::S2) return plan_s2_center_even(k);
    return plan_s12_center_even(k);
}

}  // namespace radiolab
