#include "radiolab/bounds.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "radiolab/plans.hpp"

namespace radiolab {

const char* cap_rule_name(CapRule rule) {
    switch (rule) {
        case CapRule::CutSize: return "cut-size";
        case CapRule::PathCount: return "path-count";
        case CapRule::GroupedCut: return "grouped-cut";
    }
    return "?";
}

namespace {

// Number of connected components after deleting `removed` (sorted).
int components_without(const Graph& g, const std::vector<Edge>& removed,
                       int* smaller_side) {
    const int n = g.order();
    std::vector<int> comp(n + 1, 0);
    int ncomp = 0;
    std::vector<int> stack;
    for (int src = 1; src <= n; ++src) {
        if (comp[src] != 0) continue;
        ++ncomp;
        stack.push_back(src);
        comp[src] = ncomp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u)) {
                if (comp[w] != 0) continue;
                if (std::binary_search(removed.begin(), removed.end(), make_edge(u, w)))
                    continue;
                comp[w] = ncomp;
                stack.push_back(w);
            }
        }
    }
    if (smaller_side != nullptr && ncomp == 2) {
        int v1 = static_cast<int>(std::count(comp.begin() + 1, comp.end(), 1));
        *smaller_side = std::min(v1, n - v1);
    }
    return ncomp;
}

// Unordered vertex pairs (a, b) for which some shortest a-b path can
// contain the edge {u, w}. The crossing count n(e) never exceeds this,
// because distinct consecutive positions of an ordering are distinct
// pairs.
int usable_pair_count(const Graph& g, int u, int w) {
    const int n = g.order();
    int count = 0;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (g.dist(a, u) + 1 + g.dist(w, b) == g.dist(a, b) ||
                g.dist(a, w) + 1 + g.dist(u, b) == g.dist(a, b))
                ++count;
    return count;
}

}  // namespace

EdgeUsageBound edge_usage_caps(const Graph& g, const std::vector<CutGroup>& groups) {
    const int n = g.order();
    EdgeUsageBound bound;

    std::set<Edge> grouped;
    for (const auto& group : groups) {
        std::vector<Edge> removed;
        for (const auto& [u, v] : group.edges) {
            Edge e = make_edge(u, v);
            if (!std::binary_search(g.edges().begin(), g.edges().end(), e))
                throw BadCutGroup("group edge not in graph");
            if (!grouped.insert(e).second)
                throw BadCutGroup("edge appears in more than one group");
            removed.push_back(e);
        }
        std::sort(removed.begin(), removed.end());
        int smaller = 0;
        int ncomp = components_without(g, removed, &smaller);
        if (ncomp < 2) throw BadCutGroup("group removal does not disconnect the graph");
        // Two components: at most 2*min(V1,V2) paths cross, plus any
        // granted allowance. More components: only the one-edge-per-path
        // hypothesis counts, giving the n-1 path total.
        int cap = ncomp == 2 ? std::min(2 * smaller + group.extra, n - 1) : n - 1;
        bound.groups.push_back({removed, cap});
        bound.total += cap;
    }

    for (const auto& e : g.edges()) {
        if (grouped.count(e) != 0) continue;
        int cap = n - 1;
        CapRule rule = CapRule::PathCount;
        int smaller = 0;
        if (components_without(g, {e}, &smaller) == 2 && 2 * smaller < cap) {
            cap = 2 * smaller;
            rule = CapRule::CutSize;
        }
        int usable = usable_pair_count(g, e.first, e.second);
        if (usable < cap) {
            cap = usable;
            rule = CapRule::PathCount;
        }
        bound.per_edge.push_back({e, cap, rule});
        bound.total += cap;
    }

    // Parity deductions (incident crossing counts are even except at the
    // first and last labeled vertices). With no groups and all caps even,
    // some edge must fall short of its cap.
    bool all_edges_even = std::all_of(bound.per_edge.begin(), bound.per_edge.end(),
                                      [](const EdgeCap& c) { return c.cap % 2 == 0; });
    if (groups.empty() && n >= 2 && !g.edges().empty() && all_edges_even) {
        bound.total -= 1;
        bound.parity_adjusted = true;
        return bound;
    }

    // A lone ungrouped edge with cap 1 from the single-usable-pair rule
    // can only be crossed by its own endpoints labeled consecutively. If
    // meeting the total would also force those endpoints to be the first
    // and last of the ordering (every other vertex parity-locked even),
    // the total is unreachable.
    if (n >= 3) {
        const EdgeCap* lone = nullptr;
        bool others_even = true;
        for (const auto& cap : bound.per_edge) {
            if (cap.cap % 2 == 0) continue;
            if (cap.cap == 1 && cap.rule == CapRule::PathCount && lone == nullptr &&
                usable_pair_count(g, cap.e.first, cap.e.second) == 1) {
                lone = &cap;
            } else {
                others_even = false;
            }
        }
        if (lone != nullptr && others_even) {
            bool groups_lock_parity = true;
            for (const auto& group : bound.groups) {
                if (group.cap % 2 != 0) {
                    groups_lock_parity = false;
                    break;
                }
                // every vertex outside the lone edge that touches the
                // group must touch all of its edges
                for (int t = 1; t <= n && groups_lock_parity; ++t) {
                    if (t == lone->e.first || t == lone->e.second) continue;
                    bool touches_any = false, touches_all = true;
                    for (const auto& ge : group.edges) {
                        bool inc = ge.first == t || ge.second == t;
                        touches_any |= inc;
                        touches_all &= inc;
                    }
                    if (touches_any && !touches_all) groups_lock_parity = false;
                }
            }
            if (groups_lock_parity) {
                bound.total -= 1;
                bound.parity_adjusted = true;
            }
        }
    }
    return bound;
}

int lower_bound_distance(const Graph& g, const EdgeUsageBound& bound) {
    return static_cast<int>((g.order() - 1) * (g.diameter() + 1) + 1 - bound.total);
}

int rn_formula(SpireSpec spec) {
    spec = normalize(spec);
    const int n = spec.n;
    const int s = spec.s;

    if (spec.variant != Variant::Plain && s > n / 2) {
        // center-spire cases
        if (n % 2 == 1) {
            const int k = (n - 1) / 2;
            return spec.variant == Variant::S2 ? 2 * k * k : 2 * k * k + 1;
        }
        const int k = n / 2;
        // S2_{2k,k+1} matches S12 at 2k^2-2k+2 for k >= 3 (certified
        // exhaustively through k = 5); only the 4-cycle sits one lower.
        if (spec.variant == Variant::S2 && k == 2) return 5;
        return 2 * k * k - 2 * k + 2;
    }

    // variants with s <= floor(n/2) share the plain value
    if (n % 2 == 0) {
        const int k = n / 2;
        if (s <= k - 2) return 2 * k * k - 4 * k + 2 * s + 3;
        if (s == k - 1) return 2 * k * k - 2 * k;
        return 2 * k * k - 2 * k + 1;  // s == k
    }
    const int k = (n - 1) / 2;
    return 2 * k * k - 2 * k + 2 * s;
}

int lower_bound_closed(SpireSpec spec) {
    spec = normalize(spec);
    if (spec.variant == Variant::Plain && spec.n % 2 == 0 && spec.s <= spec.n / 2 - 2) {
        // distance bound plus the slack refinement
        Graph g = build_spire(spec);
        return lower_bound_distance(g, edge_usage_caps(g, {})) + 2;
    }
    return rn_formula(spec);
}

std::vector<CutGroup> family_cut_groups(const SpireSpec& raw) {
    SpireSpec spec = normalize(raw);
    const int n = spec.n;
    if (spec.variant == Variant::Plain || spec.s <= n / 2) return {};

    std::vector<CutGroup> groups;
    if (n % 2 == 1) {
        const int k = (n - 1) / 2;  // spire adjacent to v_{k+1} and below
        if (spec.variant == Variant::S1)
            groups.push_back({{make_edge(k, k + 1), make_edge(k, n), make_edge(k + 1, n)}, 0});
        // S2 and S12 odd centers carry no cut groups; their lower
        // bounds come from edge removal
        return groups;
    }
    const int k = n / 2;  // s == k+1
    if (spec.variant == Variant::S12) {
        groups.push_back({{make_edge(k - 1, k), make_edge(k - 1, n)}, 0});
        groups.push_back({{make_edge(k, k + 1), make_edge(k + 1, n)}, 0});
    } else if (spec.variant == Variant::S2) {
        // exactly one path may use both members of one designated pair
        groups.push_back({{make_edge(k - 1, k), make_edge(k - 1, n)}, 1});
        groups.push_back({{make_edge(k, k + 1), make_edge(k + 1, n)}, 0});
    }
    return groups;
}

bool BoundReport::lb_chain_ok() const {
    return lb_generic <= lb_closed && lb_closed <= formula && formula == ub_constructive;
}

bool BoundReport::exact_ok() const { return !exact.has_value() || *exact == formula; }

BoundReport bound_report(const SpireSpec& raw, bool with_exact,
                         const SolveOptions& solve_options) {
    SpireSpec spec = normalize(raw);
    BoundReport report;
    report.spec = spec;

    Graph g = build_spire(spec);
    report.lb_generic = lower_bound_distance(g, edge_usage_caps(g, family_cut_groups(spec)));
    report.lb_closed = lower_bound_closed(spec);
    report.formula = rn_formula(spec);

    OrderingPlan plan = plan_any(spec, solve_options);
    RadioLabeling labeling = plan.labeling();
    if (!verify(g, labeling).empty())
        throw std::logic_error("constructed plan fails verification");
    report.ub_constructive = labeling.span();

    if (with_exact) {
        SolveResult result = rn_exact(g, solve_options);
        report.exact = result.rn;
        report.exact_status = result.status;
    }
    return report;
}

std::string bound_report_to_json(const BoundReport& report) {
    nlohmann::json j;
    j["family"] = variant_name(report.spec.variant);
    j["n"] = report.spec.n;
    j["s"] = report.spec.s;
    j["formula"] = report.formula;
    j["lb_generic"] = report.lb_generic;
    j["lb_closed"] = report.lb_closed;
    j["ub_constructive"] = report.ub_constructive;
    if (report.exact) {
        j["exact"] = *report.exact;
        j["exact_status"] = solve_status_name(*report.exact_status);
    }
    j["consistent"] = report.consistent();
    return j.dump();
}

}  // namespace radiolab
