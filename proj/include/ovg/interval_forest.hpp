#pragma once

#include <cstdint>
#include <vector>

#include "ovg/interval.hpp"

namespace ovg {

// Decomposition of a laminar family of weighted intervals (every pair nested
// or disjoint) into pairwise disjoint weighted pieces. Each input interval
// becomes a node whose parent is the smallest strictly containing input; the
// node's gaps are the maximal sub-intervals left uncovered by its children.
// Emitting every node's gaps yields at most 2k-1 disjoint pieces covering
// exactly the union of the inputs, with each point carrying the weight of the
// deepest (and, by the input invariant below, minimum-weight) interval
// covering it.

struct ForestNode {
    WeightedInterval item;
    std::int32_t parent = -1;
    std::vector<std::int32_t> children; // ascending by lower bound
    std::vector<Interval> gaps;         // maximal sub-intervals disjoint from all children
};

struct IntervalForest {
    std::vector<ForestNode> nodes; // in processing order: lo ascending, hi descending
    std::vector<std::int32_t> roots;

    std::size_t size() const { return nodes.size(); }
};

// Sorts (lo ascending; ties hi descending; ties weight descending), removes
// duplicate intervals keeping the minimum weight, then links parents with a
// pop-only ancestor stack (equivalent to binary search over the nested
// ancestor chain). Rejects crossing intervals and nested intervals whose
// weight does not strictly decrease inward; both signal a caller bug, since
// prefix intervals are laminar with weights shrinking as prefixes grow.
// O(k log k).
IntervalForest build_forest(std::vector<WeightedInterval> items);

// Every node's gaps tagged with the node's weight, sorted by lower bound.
// |result| <= 2k-1 for k deduplicated inputs.
std::vector<WeightedInterval> flatten(const IntervalForest& forest);

// build_forest + flatten.
std::vector<WeightedInterval> disjoint_cover(std::vector<WeightedInterval> items);

} // namespace ovg
