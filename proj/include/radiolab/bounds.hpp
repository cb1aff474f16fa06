#pragma once

#include <optional>
#include <string>
#include <vector>

#include "radiolab/graph.hpp"
#include "radiolab/solver.hpp"
#include "radiolab/spire.hpp"

namespace radiolab {

struct BadCutGroup : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Edge set whose joint path-crossing count is capped as a unit. The
/// caller asserts that no shortest path between consecutively labeled
/// vertices can contain two of its edges. `extra` widens the joint cap
/// (the asymmetric allowance used for one designated group on
/// S2_{2k,k+1}).
struct CutGroup {
    std::vector<Edge> edges;
    int extra = 0;
};

enum class CapRule { CutSize, PathCount, GroupedCut };

const char* cap_rule_name(CapRule rule);

struct EdgeCap {
    Edge e;
    int cap = 0;
    CapRule rule = CapRule::CutSize;
};

struct GroupCap {
    std::vector<Edge> edges;
    int cap = 0;
};

/// Per-edge / per-group caps on how many consecutive-pair shortest
/// paths may cross, plus their admissible total: an upper bound on
/// sum d(x_i, x_{i+1}) over every vertex ordering.
struct EdgeUsageBound {
    std::vector<EdgeCap> per_edge;  // edges not covered by a group
    std::vector<GroupCap> groups;
    bool parity_adjusted = false;   // total shaved by 1 (see edge_usage_caps)
    long long total = 0;
};

/// Computes the caps. Ungrouped edges get the tightest of: the
/// two-component cut rule 2*min(V1,V2) (bridges), the path-count rule
/// n-1, and the count of vertex pairs able to route a shortest path
/// through the edge. Groups that split the graph into exactly two
/// components get min(2*min(V1,V2)+extra, n-1); groups that split it
/// further get n-1. A group whose removal leaves the graph connected is
/// a BadCutGroup.
///
/// Two parity deductions apply (each shaves 1 from the total): with no
/// groups and every cap even, not all edges can sit at their caps, as
/// the first-labeled vertex must have an odd incident crossing count;
/// and when a lone cap-1 edge whose endpoints are the only pair able to
/// use it would otherwise have to be both consecutive and the extreme
/// labels of the ordering.
EdgeUsageBound edge_usage_caps(const Graph& g, const std::vector<CutGroup>& groups);

/// (n-1)(diam+1) + 1 - bound.total.
int lower_bound_distance(const Graph& g, const EdgeUsageBound& bound);

/// Exact radio number of the family member, by case analysis.
int rn_formula(SpireSpec spec);

/// Proven closed-form lower bound; equals rn_formula in every case.
/// For even plain graphs with s <= k-2 it is the distance bound plus 2;
/// the remaining cases are closed-form values.
int lower_bound_closed(SpireSpec spec);

/// The explicit cut groups behind the center-spire lower bounds;
/// empty for every other spec.
std::vector<CutGroup> family_cut_groups(const SpireSpec& spec);

struct BoundReport {
    SpireSpec spec;
    int lb_generic = 0;
    int lb_closed = 0;
    int ub_constructive = 0;
    int formula = 0;
    std::optional<int> exact;
    std::optional<SolveStatus> exact_status;

    bool lb_chain_ok() const;  // lb_generic <= lb_closed <= formula == ub
    bool exact_ok() const;     // exact == formula when present
    bool consistent() const { return lb_chain_ok() && exact_ok(); }
};

BoundReport bound_report(const SpireSpec& spec, bool with_exact,
                         const SolveOptions& solve_options = {});

std::string bound_report_to_json(const BoundReport& report);

}  // namespace radiolab
