#include "ovg/interval_forest.hpp"

#include <algorithm>
#include <string>

#include "ovg/errors.hpp"

namespace ovg {

namespace {

std::string describe(const Interval& iv) {
    return "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
}

} // namespace

IntervalForest build_forest(std::vector<WeightedInterval> items) {
    for (const auto& it : items) {
        if (it.iv.empty()) throw validation_error("empty interval in forest input");
        if (it.weight < 1) throw validation_error("interval weight must be >= 1");
    }
    std::sort(items.begin(), items.end(), [](const WeightedInterval& a, const WeightedInterval& b) {
        if (a.iv.lo != b.iv.lo) return a.iv.lo < b.iv.lo;
        if (a.iv.hi != b.iv.hi) return a.iv.hi > b.iv.hi;
        return a.weight > b.weight;
    });

    // collapse duplicate intervals, keeping the minimum weight (last in a run)
    std::vector<WeightedInterval> uniq;
    uniq.reserve(items.size());
    for (const auto& it : items) {
        if (!uniq.empty() && uniq.back().iv == it.iv) {
            uniq.back().weight = std::min(uniq.back().weight, it.weight);
        } else {
            uniq.push_back(it);
        }
    }

    IntervalForest forest;
    forest.nodes.reserve(uniq.size());
    std::vector<std::int32_t> ancestors; // stack: ancestors of the previous node, outermost first
    for (const auto& it : uniq) {
        const auto idx = static_cast<std::int32_t>(forest.nodes.size());
        // ancestors that end before this interval starts never contain anything later
        while (!ancestors.empty() && forest.nodes[ancestors.back()].item.iv.hi < it.iv.lo)
            ancestors.pop_back();
        ForestNode node;
        node.item = it;
        if (ancestors.empty()) {
            forest.roots.push_back(idx);
        } else {
            ForestNode& top = forest.nodes[ancestors.back()];
            if (it.iv.hi > top.item.iv.hi) {
                throw validation_error("crossing intervals " + describe(top.item.iv) + " and " +
                                       describe(it.iv) + " violate laminarity");
            }
            if (it.weight >= top.item.weight) {
                throw validation_error("nested interval " + describe(it.iv) +
                                       " must have smaller weight than " +
                                       describe(top.item.iv));
            }
            node.parent = ancestors.back();
            top.children.push_back(idx);
        }
        forest.nodes.push_back(std::move(node));
        ancestors.push_back(idx);
    }

    // gaps: sweep each node's interval past its children
    for (auto& node : forest.nodes) {
        rank_t cursor = node.item.iv.lo;
        for (auto child : node.children) {
            const Interval& civ = forest.nodes[child].item.iv;
            if (civ.lo > cursor) node.gaps.push_back({cursor, civ.lo - 1});
            cursor = civ.hi + 1;
        }
        if (cursor <= node.item.iv.hi) node.gaps.push_back({cursor, node.item.iv.hi});
    }
    return forest;
}

std::vector<WeightedInterval> flatten(const IntervalForest& forest) {
    std::vector<WeightedInterval> out;
    out.reserve(2 * forest.nodes.size());
    for (const auto& node : forest.nodes) {
        for (const auto& gap : node.gaps) out.push_back({gap, node.item.weight});
    }
    std::sort(out.begin(), out.end(), [](const WeightedInterval& a, const WeightedInterval& b) {
        return a.iv.lo < b.iv.lo;
    });
    return out;
}

std::vector<WeightedInterval> disjoint_cover(std::vector<WeightedInterval> items) {
    return flatten(build_forest(std::move(items)));
}

} // namespace ovg
