#pragma once

#include <string>
#include <vector>

#include "radiolab/graph.hpp"

namespace radiolab {

struct PartialLabeling : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NegativeSlack : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Assignment of positive integer labels to vertices 1..n. Label 0
/// means "not yet assigned"; a labeling is complete when every vertex
/// has a positive label.
class RadioLabeling {
public:
    RadioLabeling() = default;
    explicit RadioLabeling(int n) : labels_(n + 1, 0) {}

    int order() const { return static_cast<int>(labels_.size()) - 1; }
    int label(int v) const;
    void set(int v, int value);  // value >= 1
    bool complete() const;
    int span() const;  // max label

    bool operator==(const RadioLabeling&) const = default;

private:
    std::vector<int> labels_;
};

/// A pair breaking the radio condition: d(u,v) + |c(u)-c(v)| falls
/// `deficit` short of diam+1. Always u < v.
struct Violation {
    int u = 0;
    int v = 0;
    int deficit = 0;

    bool operator==(const Violation&) const = default;
};

/// Every violating pair, sorted by (u, v); empty iff c is a radio
/// labeling. Throws PartialLabeling if any vertex is unlabeled.
std::vector<Violation> verify(const Graph& g, const RadioLabeling& c);

/// Labels the vertices in the given order, giving each the smallest
/// label that satisfies the radio condition against everything already
/// placed. The result is a valid radio labeling, minimal among all
/// labelings with this label order.
RadioLabeling greedy_complete(const Graph& g, const std::vector<int>& order);

/// A vertex ordering x_1..x_n with the label increments between
/// consecutive vertices: label(x_{i+1}) - label(x_i) = gaps[i-1].
struct OrderingPlan {
    std::vector<int> order;
    std::vector<int> gaps;  // n-1 positive integers
    int base = 1;           // label(x_1)

    int span() const;
    RadioLabeling labeling() const;
};

/// Slack of each consecutive pair over the radio condition:
/// j_i = d(x_i, x_{i+1}) + gap_i - (diam+1). Exact identity:
/// span = (n-1)(diam+1) + base - sum d(x_i,x_{i+1}) + sum j_i.
struct SlackVector {
    std::vector<int> j;

    long long sum() const;
};

/// Throws NegativeSlack if the plan breaks the radio condition on a
/// consecutive pair.
SlackVector slack(const Graph& g, const OrderingPlan& plan);

// --- serialization ------------------------------------------------------

// {"labels": {"1": c1, ..., "n": cn}}
RadioLabeling labeling_from_json(const std::string& text, int n);
std::string labeling_to_json(const RadioLabeling& c);

// {"order": [v...], "gaps": [g...], "base": 1}
OrderingPlan plan_from_json(const std::string& text);
std::string plan_to_json(const OrderingPlan& plan);

}  // namespace radiolab
