#include <doctest.h>

#include <numeric>

#include "radiolab/bounds.hpp"
#include "radiolab/plans.hpp"
#include "radiolab/spire.hpp"

using namespace radiolab;

namespace {

// plan must be a valid radio labeling of g with the stated span, and its
// distance column must match the graph metric (gap rows are generated,
// so any drift would show up here)
void check_plan(const Graph& g, const OrderingPlan& plan, int expected_span) {
    REQUIRE(plan.order.size() == static_cast<size_t>(g.order()));
    REQUIRE(plan.gaps.size() + 1 == plan.order.size());
    RadioLabeling c = plan.labeling();
    CHECK(verify(g, c).empty());
    CHECK(c.span() == expected_span);
    CHECK(plan.span() == expected_span);
    CHECK_NOTHROW(slack(g, plan));
}

}  // namespace

TEST_CASE("even order, small s (three-group construction)") {
    check_plan(build_spire({16, 2, Variant::Plain}), plan_even_small_s(8, 2), 103);
    check_plan(build_spire({16, 3, Variant::Plain}), plan_even_small_s(8, 3), 105);
    check_plan(build_spire({16, 6, Variant::Plain}), plan_even_small_s(8, 6), 111);
    for (int k = 8; k <= 14; ++k)
        for (int s = 2; s <= k - 2; ++s)
            check_plan(build_spire({2 * k, s, Variant::Plain}), plan_even_small_s(k, s),
                       2 * k * k - 4 * k + 2 * s + 3);
    CHECK_THROWS_AS(plan_even_small_s(6, 2), OutOfRange);
    CHECK_THROWS_AS(plan_even_small_s(8, 7), OutOfRange);
    CHECK_THROWS_AS(plan_even_small_s(8, 1), OutOfRange);
}

TEST_CASE("the three-group table degenerates at k=7") {
    // with the middle group empty, v_4 and v_2 end up two label slots
    // apart with distance 2; every s misses the radio condition there
    for (int s = 2; s <= 5; ++s) {
        Graph g = build_spire({14, s, Variant::Plain});
        OrderingPlan plan = plan_even_small_s(7, s);
        CHECK(plan.span() == 2 * 49 - 28 + 2 * s + 3);
        auto violations = verify(g, plan.labeling());
        REQUIRE(violations.size() == 1);
        CHECK(violations[0] == Violation{2, 4, 2});
        // consecutive rows still clear the condition, and the span
        // identity telescopes exactly
        SlackVector sv = slack(g, plan);
        long long dist_sum = 0;
        for (size_t i = 0; i + 1 < plan.order.size(); ++i)
            dist_sum += g.dist(plan.order[i], plan.order[i + 1]);
        CHECK(plan.span() == 13 * (g.diameter() + 1) + plan.base - dist_sum + sv.sum());
    }
}

TEST_CASE("group gap sums of the three-group construction") {
    for (int k = 7; k <= 20; ++k) {
        for (int s = 2; s <= k - 2; ++s) {
            OrderingPlan plan = plan_even_small_s(k, s);
            auto sum = [&](int from, int count) {
                return std::accumulate(plan.gaps.begin() + from,
                                       plan.gaps.begin() + from + count, 0);
            };
            CHECK(sum(0, 8) == 8 * k + 2 * s - 9);
            CHECK(sum(8, 2 * (k - 7)) == (k - 7) * (2 * k - 1));
            CHECK(sum(8 + 2 * (k - 7), 5) == 3 * k + 4);
        }
    }
}

TEST_CASE("even order, s = k-1") {
    check_plan(build_spire({6, 2, Variant::Plain}), plan_even_s_km1(3), 12);
    check_plan(build_spire({8, 3, Variant::Plain}), plan_even_s_km1(4), 24);
    check_plan(build_spire({10, 4, Variant::Plain}), plan_even_s_km1(5), 40);
    for (int k = 3; k <= 15; ++k)
        check_plan(build_spire({2 * k, k - 1, Variant::Plain}), plan_even_s_km1(k),
                   2 * k * k - 2 * k);
    CHECK_THROWS_AS(plan_even_s_km1(2), OutOfRange);
}

TEST_CASE("even order, s = k") {
    check_plan(build_spire({4, 2, Variant::Plain}), plan_even_s_k(2), 5);
    check_plan(build_spire({6, 3, Variant::Plain}), plan_even_s_k(3), 13);
    check_plan(build_spire({8, 4, Variant::Plain}), plan_even_s_k(4), 25);
    for (int k = 2; k <= 15; ++k)
        check_plan(build_spire({2 * k, k, Variant::Plain}), plan_even_s_k(k),
                   2 * k * k - 2 * k + 1);
    CHECK_THROWS_AS(plan_even_s_k(1), OutOfRange);
}

TEST_CASE("consecutive slack stays in {0,1} for the near-center tables") {
    for (int k = 3; k <= 12; ++k) {
        Graph g = build_spire({2 * k, k - 1, Variant::Plain});
        for (int ji : slack(g, plan_even_s_km1(k)).j) CHECK((ji == 0 || ji == 1));
    }
    for (int k = 2; k <= 12; ++k) {
        Graph g = build_spire({2 * k, k, Variant::Plain});
        for (int ji : slack(g, plan_even_s_k(k)).j) CHECK((ji == 0 || ji == 1));
    }
}

TEST_CASE("odd order") {
    check_plan(build_spire({7, 2, Variant::Plain}), plan_odd(3, 2), 16);
    check_plan(build_spire({7, 3, Variant::Plain}), plan_odd(3, 3), 18);
    check_plan(build_spire({11, 4, Variant::Plain}), plan_odd(5, 4), 48);
    for (int k = 3; k <= 14; ++k)
        for (int s = 2; s <= k; ++s)
            check_plan(build_spire({2 * k + 1, s, Variant::Plain}), plan_odd(k, s),
                       2 * k * k - 2 * k + 2 * s);
    CHECK_THROWS_AS(plan_odd(2, 2), OutOfRange);
    CHECK_THROWS_AS(plan_odd(4, 5), OutOfRange);
}

TEST_CASE("center constructions") {
    SUBCASE("s1 odd center, also valid on s12") {
        check_plan(build_spire({5, 3, Variant::S1}), plan_s1_center(2), 9);
        check_plan(build_spire({7, 4, Variant::S1}), plan_s1_center(3), 19);
        check_plan(build_spire({5, 3, Variant::S12}), plan_s1_center(2), 9);
        for (int k = 2; k <= 12; ++k) {
            check_plan(build_spire({2 * k + 1, k + 1, Variant::S1}), plan_s1_center(k),
                       2 * k * k + 1);
            check_plan(build_spire({2 * k + 1, k + 1, Variant::S12}), plan_s1_center(k),
                       2 * k * k + 1);
        }
    }
    SUBCASE("s2 odd center") {
        check_plan(build_spire({5, 3, Variant::S2}), plan_s2_center_odd(2), 8);
        check_plan(build_spire({7, 4, Variant::S2}), plan_s2_center_odd(3), 18);
        for (int k = 2; k <= 12; ++k)
            check_plan(build_spire({2 * k + 1, k + 1, Variant::S2}), plan_s2_center_odd(k),
                       2 * k * k);
    }
    SUBCASE("s12 even center") {
        check_plan(build_spire({4, 3, Variant::S12}), plan_s12_center_even(2), 6);
        check_plan(build_spire({6, 4, Variant::S12}), plan_s12_center_even(3), 14);
        for (int k = 2; k <= 12; ++k)
            check_plan(build_spire({2 * k, k + 1, Variant::S12}), plan_s12_center_even(k),
                       2 * k * k - 2 * k + 2);
    }
    SUBCASE("s2 even center") {
        check_plan(build_spire({4, 3, Variant::S2}), plan_s2_center_even(2), 5);
        check_plan(build_spire({6, 4, Variant::S2}), plan_s2_center_even(3), 14);
        for (int k = 3; k <= 12; ++k)
            check_plan(build_spire({2 * k, k + 1, Variant::S2}), plan_s2_center_even(k),
                       2 * k * k - 2 * k + 2);
    }
}

TEST_CASE("variant plans induced from the plain construction") {
    check_plan(build_spire({16, 2, Variant::S1}), plan_variant_induced({16, 2, Variant::S1}), 103);
    check_plan(build_spire({7, 3, Variant::S12}), plan_variant_induced({7, 3, Variant::S12}), 18);
    check_plan(build_spire({6, 3, Variant::S2}), plan_variant_induced({6, 3, Variant::S2}), 13);

    for (int n = 4; n <= 21; ++n) {
        for (Variant variant : {Variant::S1, Variant::S2, Variant::S12}) {
            int s_min = variant == Variant::S1 ? 2 : 3;
            for (int s = s_min; s <= n / 2; ++s) {
                bool solver_backed =
                    n == 5 || (n % 2 == 0 && n <= 14 && s <= n / 2 - 2);
                if (solver_backed) continue;
                SpireSpec spec{n, s, variant};
                check_plan(build_spire(spec), plan_variant_induced(spec),
                           rn_formula(spec));
            }
        }
    }

    SUBCASE("solver-backed plain plans are flagged") {
        CHECK_THROWS_AS(plan_variant_induced({8, 2, Variant::S1}), FallbackRequired);
        CHECK_THROWS_AS(plan_variant_induced({14, 2, Variant::S1}), FallbackRequired);
        CHECK_THROWS_AS(plan_variant_induced({5, 2, Variant::S1}), FallbackRequired);
        CHECK_THROWS_AS(plan_variant_induced({7, 4, Variant::S1}), OutOfRange);
        CHECK_THROWS_AS(plan_variant_induced({8, 2, Variant::Plain}), OutOfRange);
    }
}

TEST_CASE("plan_any dispatches every normalized spec") {
    SUBCASE("solver fallback cases hit the formula span") {
        check_plan(build_spire({8, 2, Variant::Plain}), plan_any({8, 2, Variant::Plain}), 23);
        check_plan(build_spire({10, 3, Variant::Plain}), plan_any({10, 3, Variant::Plain}), 39);
        check_plan(build_spire({12, 4, Variant::Plain}), plan_any({12, 4, Variant::Plain}), 59);
        check_plan(build_spire({14, 2, Variant::Plain}), plan_any({14, 2, Variant::Plain}), 77);
        check_plan(build_spire({5, 2, Variant::Plain}), plan_any({5, 2, Variant::Plain}), 8);
        check_plan(build_spire({5, 2, Variant::S1}), plan_any({5, 2, Variant::S1}), 8);
    }
    SUBCASE("closed-form cases for a spread of specs") {
        for (SpireSpec spec : std::initializer_list<SpireSpec>{{16, 3, Variant::Plain},
                                                               {13, 4, Variant::Plain},
                                                               {6, 3, Variant::Plain},
                                                               {9, 5, Variant::S1},
                                                               {9, 5, Variant::S2},
                                                               {8, 5, Variant::S12},
                                                               {7, 3, Variant::S2},
                                                               {16, 8, Variant::S1}}) {
            check_plan(build_spire(normalize(spec)), plan_any(spec), rn_formula(spec));
        }
    }
    SUBCASE("non-normalized input is normalized first") {
        OrderingPlan plan = plan_any({16, 14, Variant::Plain});
        check_plan(build_spire({16, 2, Variant::Plain}), plan, 103);
    }
}
