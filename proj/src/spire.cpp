#include "radiolab/spire.hpp"

#include <algorithm>
#include <numeric>

namespace radiolab {

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::Plain: return "spire";
        case Variant::S1: return "s1";
        case Variant::S2: return "s2";
        case Variant::S12: return "s12";
    }
    return "?";
}

std::optional<Variant> variant_from_name(const std::string& name) {
    if (name == "spire" || name == "plain") return Variant::Plain;
    if (name == "s1") return Variant::S1;
    if (name == "s2") return Variant::S2;
    if (name == "s12") return Variant::S12;
    return std::nullopt;
}

bool spec_valid(const SpireSpec& spec) {
    if (spec.n < 4) return false;
    switch (spec.variant) {
        case Variant::Plain: return spec.s >= 2 && spec.s <= spec.n - 2;
        case Variant::S1: return spec.s >= 2 && spec.s <= spec.n - 1;
        case Variant::S2:
        case Variant::S12: return spec.s >= 3 && spec.s <= spec.n - 1;
    }
    return false;
}

void validate_spec(const SpireSpec& spec) {
    if (!spec_valid(spec))
        throw InvalidSpec(std::string(variant_name(spec.variant)) + " spec (n=" +
                          std::to_string(spec.n) + ", s=" + std::to_string(spec.s) +
                          ") violates the family's index bounds");
}

int normalized_s_max(int n, Variant variant) {
    switch (variant) {
        case Variant::Plain: return n / 2;
        case Variant::S1: return (n + 1) / 2;
        case Variant::S2:
        case Variant::S12: return (n + 2) / 2;
    }
    return 0;
}

bool is_normalized(const SpireSpec& spec) {
    return spec_valid(spec) && spec.s <= normalized_s_max(spec.n, spec.variant);
}

SpireSpec normalize(SpireSpec spec) {
    validate_spec(spec);
    if (spec.s > normalized_s_max(spec.n, spec.variant)) {
        // Path reflection v_i -> v_{n-i} fixes the spire and mirrors the
        // attachment block.
        switch (spec.variant) {
            case Variant::Plain: spec.s = spec.n - spec.s; break;
            case Variant::S1: spec.s = spec.n + 1 - spec.s; break;
            case Variant::S2:
            case Variant::S12: spec.s = spec.n + 2 - spec.s; break;
        }
    }
    return spec;
}

Graph build_spire(const SpireSpec& spec) {
    validate_spec(spec);
    const int n = spec.n;
    std::vector<Edge> edges;
    for (int i = 1; i <= n - 2; ++i) edges.emplace_back(i, i + 1);
    edges.push_back(make_edge(spec.s, n));
    if (spec.variant == Variant::S1 || spec.variant == Variant::S12)
        edges.push_back(make_edge(spec.s - 1, n));
    if (spec.variant == Variant::S2 || spec.variant == Variant::S12)
        edges.push_back(make_edge(spec.s - 2, n));
    Graph g = build_graph(n, std::move(edges));
    if (g.diameter() != n - 2)
        throw InvalidSpec("built graph has diameter " + std::to_string(g.diameter()) +
                          ", expected " + std::to_string(n - 2));
    return g;
}

namespace {

bool extend_mapping(const Graph& a, const Graph& b, const std::vector<int>& order,
                    size_t pos, std::vector<int>& map, std::vector<bool>& used) {
    if (pos == order.size()) return true;
    const int u = order[pos];
    const size_t deg = a.neighbors(u).size();
    for (int w = 1; w <= b.order(); ++w) {
        if (used[w] || b.neighbors(w).size() != deg) continue;
        bool ok = true;
        for (int x : a.neighbors(u)) {
            if (map[x] != 0 && !b.has_edge(map[x], w)) {
                ok = false;
                break;
            }
        }
        // mapped non-neighbors must stay non-adjacent
        if (ok) {
            for (size_t i = 0; i < pos && ok; ++i) {
                int x = order[i];
                if (!a.has_edge(x, u) && b.has_edge(map[x], w)) ok = false;
            }
        }
        if (!ok) continue;
        map[u] = w;
        used[w] = true;
        if (extend_mapping(a, b, order, pos + 1, map, used)) return true;
        map[u] = 0;
        used[w] = false;
    }
    return false;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    if (a.edges().size() != b.edges().size()) return false;
    if (a.diameter() != b.diameter()) return false;

    auto degrees = [](const Graph& g) {
        std::vector<int> d;
        for (int v = 1; v <= g.order(); ++v)
            d.push_back(static_cast<int>(g.neighbors(v).size()));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degrees(a) != degrees(b)) return false;

    // Map high-degree vertices first; each placement is checked against
    // all previously mapped vertices, so dead branches die early.
    std::vector<int> order(a.order());
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&](int u, int v) {
        return a.neighbors(u).size() > a.neighbors(v).size();
    });
    std::vector<int> map(a.order() + 1, 0);
    std::vector<bool> used(b.order() + 1, false);
    return extend_mapping(a, b, order, 0, map, used);
}

std::optional<SpireSpec> classify(const Graph& g) {
    const int n = g.order();
    if (n < 4 || g.diameter() != n - 2) return std::nullopt;
    for (Variant variant : {Variant::Plain, Variant::S1, Variant::S2, Variant::S12}) {
        const int s_min = variant == Variant::Plain || variant == Variant::S1 ? 2 : 3;
        for (int s = s_min; s <= normalized_s_max(n, variant); ++s) {
            SpireSpec spec{n, s, variant};
            if (!spec_valid(spec)) continue;
            Graph candidate = build_spire(spec);
            if (candidate.edges().size() != g.edges().size()) continue;
            if (isomorphic(candidate, g)) return spec;
        }
    }
    return std::nullopt;
}

}  // namespace radiolab
