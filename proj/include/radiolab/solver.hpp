#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "radiolab/graph.hpp"
#include "radiolab/labeling.hpp"

namespace radiolab {

struct NotAnAutomorphism : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class SolveStatus { Optimal, TargetMet, BudgetExhausted };

const char* solve_status_name(SolveStatus status);

struct SolveResult {
    int rn = 0;             // best span found; the radio number when Optimal
    RadioLabeling witness;  // achieves rn, passes verify()
    std::uint64_t explored = 0;
    SolveStatus status = SolveStatus::Optimal;
};

struct SolveOptions {
    std::uint64_t budget = 100'000'000;  // search-node limit
    std::optional<int> target;           // stop at first span <= target
    int threads = 1;
};

/// Exact radio number by depth-first search over vertex orderings with
/// greedy label completion. Any labeling sorted by label induces an
/// ordering, and greedy completion is pointwise minimal for it, so the
/// minimum over orderings is rn(G).
SolveResult rn_exact(const Graph& g, const SolveOptions& options = {});

/// Same result as rn_exact; the first-placed vertex ranges over orbit
/// representatives of the supplied automorphisms only. Each permutation
/// is checked (NotAnAutomorphism otherwise).
SolveResult rn_exact_with_symmetry(const Graph& g,
                                   const std::vector<std::vector<int>>& automorphisms,
                                   const SolveOptions& options = {});

std::string solve_result_to_json(const SolveResult& result);

}  // namespace radiolab
