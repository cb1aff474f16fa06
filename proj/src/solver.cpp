#include "radiolab/solver.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

#include <json.hpp>

#include "radiolab/bounds.hpp"

namespace radiolab {

const char* solve_status_name(SolveStatus status) {
    switch (status) {
        case SolveStatus::Optimal: return "OPTIMAL";
        case SolveStatus::TargetMet: return "TARGET_MET";
        case SolveStatus::BudgetExhausted: return "BUDGET_EXHAUSTED";
    }
    return "?";
}

namespace {

constexpr int kNoBound = std::numeric_limits<int>::max();

struct SharedSearch {
    const Graph& g;
    int n;
    int required;               // diam + 1
    std::vector<int> minstep;   // per vertex: least label increment it can add
    int floor_bound;            // proven lower bound; incumbent there is optimal
    std::optional<int> target;
    std::uint64_t budget;

    std::atomic<std::uint64_t> explored{0};
    std::atomic<int> incumbent{kNoBound};
    std::atomic<bool> stop{false};
    std::atomic<bool> budget_hit{false};
    std::atomic<bool> target_pruned{false};

    std::mutex best_mutex;
    RadioLabeling best;
    bool have_best = false;
    bool target_met = false;

    explicit SharedSearch(const Graph& graph) : g(graph), n(graph.order()) {}

    int bound() const {
        int b = incumbent.load(std::memory_order_relaxed);
        if (target && *target + 1 < b) b = *target + 1;
        return b;
    }
};

class DfsWorker {
public:
    explicit DfsWorker(SharedSearch& shared)
        : s(shared), order(s.n, 0), labels(s.n, 0), placed(s.n + 1, false),
          candidates_at(s.n + 1) {
        rem = std::accumulate(s.minstep.begin() + 1, s.minstep.end(), 0LL);
    }

    void run(int first, int second) {
        place(0, first, 1);
        if (second != 0) {
            int lab = labels[0] + s.required - s.g.dist(first, second);
            place(1, second, lab);
            dfs(2);
            unplace(1);
        } else {
            dfs(1);
        }
        unplace(0);
    }

private:
    struct Candidate {
        int lab;
        int v;
    };

    void place(int depth, int v, int lab) {
        order[depth] = v;
        labels[depth] = lab;
        placed[v] = true;
        rem -= s.minstep[v];
    }

    void unplace(int depth) {
        placed[order[depth]] = false;
        rem += s.minstep[order[depth]];
    }

    void record_leaf() {
        int span = labels[s.n - 1];
        std::lock_guard<std::mutex> lock(s.best_mutex);
        if (span < s.incumbent.load(std::memory_order_relaxed)) {
            RadioLabeling c(s.n);
            for (int i = 0; i < s.n; ++i) c.set(order[i], labels[i]);
            s.best = std::move(c);
            s.have_best = true;
            s.incumbent.store(span, std::memory_order_relaxed);
        }
        if (s.target && span <= *s.target) {
            s.target_met = true;
            s.stop.store(true, std::memory_order_relaxed);
        } else if (s.incumbent.load(std::memory_order_relaxed) <= s.floor_bound) {
            // matched the root lower bound, nothing better exists
            s.stop.store(true, std::memory_order_relaxed);
        }
    }

    void dfs(int depth) {
        if (s.stop.load(std::memory_order_relaxed)) return;
        std::uint64_t nodes = s.explored.fetch_add(1, std::memory_order_relaxed) + 1;
        if (nodes > s.budget) {
            s.budget_hit.store(true, std::memory_order_relaxed);
            s.stop.store(true, std::memory_order_relaxed);
            return;
        }
        if (depth == s.n) {
            record_leaf();
            return;
        }

        std::vector<Candidate>& candidates = candidates_at[depth];  // per depth: the
        candidates.clear();  // loop below survives the recursive calls
        int bound = s.bound();
        for (int v = 1; v <= s.n; ++v) {
            if (placed[v]) continue;
            int lab = labels[depth - 1] + 1;
            for (int i = 0; i < depth; ++i)
                lab = std::max(lab, labels[i] + s.required - s.g.dist(order[i], v));
            long long estimate = lab + rem - s.minstep[v];
            if (estimate >= bound) {
                if (s.target && estimate < s.incumbent.load(std::memory_order_relaxed))
                    s.target_pruned.store(true, std::memory_order_relaxed);
                continue;
            }
            candidates.push_back({lab, v});
        }
        std::sort(candidates.begin(), candidates.end(),
                  [](const Candidate& a, const Candidate& b) {
                      return a.lab != b.lab ? a.lab < b.lab : a.v < b.v;
                  });
        // candidates survive the bound check above; the bound can tighten
        // while we iterate, so re-check before descending
        for (const Candidate& cand : candidates) {
            if (s.stop.load(std::memory_order_relaxed)) return;
            long long estimate = cand.lab + rem - s.minstep[cand.v];
            if (estimate >= s.bound()) continue;
            place(depth, cand.v, cand.lab);
            dfs(depth + 1);
            unplace(depth);
        }
    }

    SharedSearch& s;
    std::vector<int> order;
    std::vector<int> labels;
    std::vector<bool> placed;
    std::vector<std::vector<Candidate>> candidates_at;
    long long rem = 0;
};

SolveResult solve(const Graph& g, const SolveOptions& options,
                  const std::vector<int>& first_vertices) {
    const int n = g.order();
    SolveResult result;
    if (n == 1) {
        RadioLabeling c(1);
        c.set(1, 1);
        result.rn = 1;
        result.witness = c;
        result.status = SolveStatus::Optimal;
        return result;
    }

    SharedSearch shared(g);
    shared.required = g.diameter() + 1;
    shared.minstep.assign(n + 1, 1);
    for (int v = 1; v <= n; ++v) {
        int ecc = 0;
        for (int u = 1; u <= n; ++u) ecc = std::max(ecc, g.dist(u, v));
        shared.minstep[v] = std::max(1, shared.required - ecc);
    }
    shared.floor_bound = lower_bound_distance(g, edge_usage_caps(g, {}));
    shared.target = options.target;
    shared.budget = options.budget;

    // Orderings that attain small spans tend to start at low-eccentricity
    // vertices (large minstep), so schedule those prefixes first.
    std::vector<int> firsts = first_vertices;
    std::stable_sort(firsts.begin(), firsts.end(), [&](int a, int b) {
        return shared.minstep[a] > shared.minstep[b];
    });
    std::vector<std::pair<int, int>> tasks;
    for (int first : firsts) {
        if (n == 2) {
            tasks.emplace_back(first, 0);
            continue;
        }
        std::vector<int> seconds;
        for (int second = 1; second <= n; ++second)
            if (second != first) seconds.push_back(second);
        std::stable_sort(seconds.begin(), seconds.end(), [&](int a, int b) {
            return shared.minstep[a] > shared.minstep[b];
        });
        for (int second : seconds) tasks.emplace_back(first, second);
    }

    int threads = std::max(1, options.threads);
    if (threads == 1) {
        DfsWorker worker(shared);
        for (const auto& [first, second] : tasks) {
            if (shared.stop.load(std::memory_order_relaxed)) break;
            worker.run(first, second);
        }
    } else {
        std::atomic<size_t> next{0};
        auto body = [&] {
            DfsWorker worker(shared);
            while (!shared.stop.load(std::memory_order_relaxed)) {
                size_t i = next.fetch_add(1);
                if (i >= tasks.size()) break;
                worker.run(tasks[i].first, tasks[i].second);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(body);
        for (auto& t : pool) t.join();
    }

    result.explored = shared.explored.load();
    result.rn = shared.have_best ? shared.incumbent.load() : 0;
    result.witness = shared.have_best ? shared.best : RadioLabeling(n);
    if (shared.target_met) {
        result.status = SolveStatus::TargetMet;
    } else if (shared.budget_hit.load()) {
        result.status = SolveStatus::BudgetExhausted;
    } else if (shared.target && shared.target_pruned.load() &&
               result.rn != *shared.target + 1) {
        // completed, but branches between target+1 and the incumbent were
        // cut by the target bound, so the incumbent is not certified
        result.status = SolveStatus::BudgetExhausted;
    } else {
        result.status = SolveStatus::Optimal;
    }
    return result;
}

}  // namespace

SolveResult rn_exact(const Graph& g, const SolveOptions& options) {
    std::vector<int> firsts(g.order());
    std::iota(firsts.begin(), firsts.end(), 1);
    return solve(g, options, firsts);
}

SolveResult rn_exact_with_symmetry(const Graph& g,
                                   const std::vector<std::vector<int>>& automorphisms,
                                   const SolveOptions& options) {
    const int n = g.order();
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };

    for (const auto& perm : automorphisms) {
        if (static_cast<int>(perm.size()) != n)
            throw NotAnAutomorphism("permutation must list images of 1..n");
        std::vector<bool> seen(n + 1, false);
        for (int image : perm) {
            if (image < 1 || image > n || seen[image])
                throw NotAnAutomorphism("not a permutation of 1..n");
            seen[image] = true;
        }
        for (const auto& [u, v] : g.edges())
            if (!g.has_edge(perm[u - 1], perm[v - 1]))
                throw NotAnAutomorphism("permutation does not preserve adjacency");
        for (int v = 1; v <= n; ++v) {
            int a = find(v), b = find(perm[v - 1]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }

    std::vector<int> reps;
    for (int v = 1; v <= n; ++v)
        if (find(v) == v) reps.push_back(v);
    return solve(g, options, reps);
}

std::string solve_result_to_json(const SolveResult& result) {
    nlohmann::json j;
    j["rn"] = result.rn;
    j["status"] = solve_status_name(result.status);
    j["explored"] = result.explored;
    nlohmann::json labels = nlohmann::json::object();
    for (int v = 1; v <= result.witness.order(); ++v)
        if (result.witness.label(v) != 0) labels[std::to_string(v)] = result.witness.label(v);
    j["witness"] = {{"labels", labels}};
    return j.dump();
}

}  // namespace radiolab
