#pragma once

#include <optional>
#include <string>

#include "radiolab/graph.hpp"

namespace radiolab {

// The four order-n, diameter-(n-2) families: a path v_1..v_{n-1} plus a
// spire v_n attached to v_s (Plain), additionally to v_{s-1} (S1), to
// v_{s-2} (S2), or to both (S12).
enum class Variant { Plain, S1, S2, S12 };

const char* variant_name(Variant v);  // "spire", "s1", "s2", "s12"
std::optional<Variant> variant_from_name(const std::string& name);

struct InvalidSpec : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SpireSpec {
    int n = 0;
    int s = 0;
    Variant variant = Variant::Plain;

    bool operator==(const SpireSpec&) const = default;
};

// Index bounds: Plain 2 <= s <= n-2; S1 2 <= s <= n-1; S2/S12 3 <= s <= n-1.
// All require n >= 4.
bool spec_valid(const SpireSpec& spec);
void validate_spec(const SpireSpec& spec);  // throws InvalidSpec

// Largest s in the mirror-normalized range: floor(n/2) for Plain,
// floor((n+1)/2) for S1, floor((n+2)/2) for S2/S12.
int normalized_s_max(int n, Variant variant);
bool is_normalized(const SpireSpec& spec);

/// Reflects s across the path midpoint when needed so that s lands in
/// the normalized range; the built graphs are isomorphic.
SpireSpec normalize(SpireSpec spec);

/// Builds the family member; the result always has diameter n-2.
Graph build_spire(const SpireSpec& spec);

/// Normalized spec isomorphic to g, or nullopt if g is not a family
/// member. Brute-force spec enumeration plus isomorphism test.
std::optional<SpireSpec> classify(const Graph& g);

/// Backtracking graph isomorphism (degree-pruned); intended for the
/// small orders this tool works at.
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace radiolab
