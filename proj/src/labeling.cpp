#include "radiolab/labeling.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include <json.hpp>

namespace radiolab {

int RadioLabeling::label(int v) const {
    if (v < 1 || v >= static_cast<int>(labels_.size()))
        throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range");
    return labels_[v];
}

void RadioLabeling::set(int v, int value) {
    if (v < 1 || v >= static_cast<int>(labels_.size()))
        throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range");
    if (value < 1) throw std::invalid_argument("labels must be positive integers");
    labels_[v] = value;
}

bool RadioLabeling::complete() const {
    return std::find(labels_.begin() + 1, labels_.end(), 0) == labels_.end();
}

int RadioLabeling::span() const {
    if (labels_.size() <= 1) return 0;
    return *std::max_element(labels_.begin() + 1, labels_.end());
}

std::vector<Violation> verify(const Graph& g, const RadioLabeling& c) {
    const int n = g.order();
    if (c.order() != n || !c.complete())
        throw PartialLabeling("labeling does not cover all vertices 1.." +
                              std::to_string(n));
    const int required = g.diameter() + 1;
    std::vector<Violation> violations;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            int have = g.dist(u, v) + std::abs(c.label(u) - c.label(v));
            if (have < required) violations.push_back({u, v, required - have});
        }
    }
    return violations;  // loop order is already sorted by (u, v)
}

RadioLabeling greedy_complete(const Graph& g, const std::vector<int>& order) {
    const int n = g.order();
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("order must list every vertex exactly once");
    std::vector<bool> seen(n + 1, false);
    for (int v : order) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("order must be a permutation of 1..n");
        seen[v] = true;
    }

    const int required = g.diameter() + 1;
    RadioLabeling c(n);
    c.set(order[0], 1);
    for (int i = 1; i < n; ++i) {
        int next = order[i];
        int label = c.label(order[i - 1]) + 1;
        for (int j = 0; j < i; ++j)
            label = std::max(label, c.label(order[j]) + required - g.dist(order[j], next));
        c.set(next, label);
    }
    return c;
}

int OrderingPlan::span() const {
    return base + std::accumulate(gaps.begin(), gaps.end(), 0);
}

RadioLabeling OrderingPlan::labeling() const {
    const int n = static_cast<int>(order.size());
    if (gaps.size() + 1 != order.size())
        throw std::invalid_argument("plan needs exactly n-1 gaps");
    if (base < 1) throw std::invalid_argument("base label must be positive");
    RadioLabeling c(n);
    int label = base;
    c.set(order[0], label);
    for (size_t i = 0; i < gaps.size(); ++i) {
        if (gaps[i] < 1) throw std::invalid_argument("gaps must be positive");
        label += gaps[i];
        c.set(order[i + 1], label);
    }
    return c;
}

long long SlackVector::sum() const {
    return std::accumulate(j.begin(), j.end(), 0LL);
}

SlackVector slack(const Graph& g, const OrderingPlan& plan) {
    if (static_cast<int>(plan.order.size()) != g.order())
        throw std::invalid_argument("plan order size does not match graph");
    const int required = g.diameter() + 1;
    SlackVector result;
    result.j.reserve(plan.gaps.size());
    for (size_t i = 0; i + 1 < plan.order.size(); ++i) {
        int ji = g.dist(plan.order[i], plan.order[i + 1]) + plan.gaps[i] - required;
        if (ji < 0)
            throw NegativeSlack("consecutive pair (" + std::to_string(plan.order[i]) +
                                ", " + std::to_string(plan.order[i + 1]) +
                                ") violates the radio condition by " +
                                std::to_string(-ji));
        result.j.push_back(ji);
    }
    return result;
}

RadioLabeling labeling_from_json(const std::string& text, int n) {
    nlohmann::json j = nlohmann::json::parse(text);
    RadioLabeling c(n);
    for (const auto& [key, value] : j.at("labels").items()) {
        int v = std::stoi(key);
        if (v < 1 || v > n)
            throw VertexOutOfRange("labeled vertex " + key + " out of range 1.." +
                                   std::to_string(n));
        c.set(v, value.get<int>());
    }
    return c;
}

std::string labeling_to_json(const RadioLabeling& c) {
    nlohmann::json labels = nlohmann::json::object();
    for (int v = 1; v <= c.order(); ++v)
        if (c.label(v) != 0) labels[std::to_string(v)] = c.label(v);
    nlohmann::json j;
    j["labels"] = labels;
    return j.dump();
}

OrderingPlan plan_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    OrderingPlan plan;
    plan.order = j.at("order").get<std::vector<int>>();
    plan.gaps = j.at("gaps").get<std::vector<int>>();
    plan.base = j.value("base", 1);
    return plan;
}

std::string plan_to_json(const OrderingPlan& plan) {
    nlohmann::json j;
    j["order"] = plan.order;
    j["gaps"] = plan.gaps;
    j["base"] = plan.base;
    return j.dump();
}

}  // namespace radiolab
