#include <doctest.h>

#include <algorithm>
#include <vector>

#include "ovg/errors.hpp"
#include "ovg/interval_forest.hpp"

#include "support.hpp"

using namespace ovg;

namespace {

using items_t = std::vector<WeightedInterval>;

// O(k^2) reference for the parent relation: smallest strictly containing item.
std::int32_t brute_force_parent(const IntervalForest& forest, std::size_t node) {
    const auto& iv = forest.nodes[node].item.iv;
    std::int32_t best = -1;
    for (std::size_t other = 0; other < forest.nodes.size(); ++other) {
        if (other == node) continue;
        const auto& cand = forest.nodes[other].item.iv;
        if (cand.contains(iv) && cand != iv) {
            if (best < 0 || forest.nodes[best].item.iv.contains(cand)) {
                best = std::int32_t(other);
            }
        }
    }
    return best;
}

void check_forest_structure(const IntervalForest& forest) {
    for (std::size_t i = 0; i < forest.nodes.size(); ++i) {
        const auto& node = forest.nodes[i];
        CHECK(node.parent == brute_force_parent(forest, i));
        // children ascend by lower bound and tile the item together with gaps
        rank_t covered = 0;
        std::vector<Interval> parts;
        for (auto c : forest.nodes[i].children) {
            CHECK(forest.nodes[c].parent == std::int32_t(i));
            parts.push_back(forest.nodes[c].item.iv);
        }
        parts.insert(parts.end(), node.gaps.begin(), node.gaps.end());
        std::sort(parts.begin(), parts.end(),
                  [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
        rank_t cursor = node.item.iv.lo;
        for (const auto& part : parts) {
            CHECK(part.lo == cursor);
            cursor = part.hi + 1;
            covered += part.hi - part.lo + 1;
        }
        CHECK(cursor == node.item.iv.hi + 1);
        CHECK(covered == node.item.iv.size());
    }
}

} // namespace

TEST_SUITE_BEGIN("interval_forest");

TEST_CASE("four nested intervals split into the documented gaps") {
    const items_t items = {{{1, 20}, 3}, {{3, 5}, 1}, {{7, 8}, 2}, {{12, 15}, 1}};
    const auto forest = build_forest(items);
    REQUIRE(forest.size() == 4);
    REQUIRE(forest.roots.size() == 1);

    const auto& root = forest.nodes[forest.roots[0]];
    CHECK(root.item.iv == Interval{1, 20});
    CHECK(root.children.size() == 3);
    const std::vector<Interval> expected_gaps = {{1, 2}, {6, 6}, {9, 11}, {16, 20}};
    CHECK(root.gaps == expected_gaps);

    for (auto c : root.children) {
        const auto& child = forest.nodes[c];
        CHECK(child.children.empty());
        CHECK(child.gaps == std::vector<Interval>{child.item.iv});
    }
}

TEST_CASE("flatten emits per-gap weights in order") {
    const items_t items = {{{1, 20}, 3}, {{3, 5}, 1}, {{7, 8}, 2}, {{12, 15}, 1}};
    const items_t expected = {{{1, 2}, 3},  {{3, 5}, 1},   {{6, 6}, 3},  {{7, 8}, 2},
                              {{9, 11}, 3}, {{12, 15}, 1}, {{16, 20}, 3}};
    CHECK(disjoint_cover(items) == expected);
    CHECK(expected.size() == 2 * items.size() - 1); // the 2k-1 worst case
}

TEST_CASE("input order does not matter") {
    items_t items = {{{3, 5}, 1}, {{12, 15}, 1}, {{1, 20}, 3}, {{7, 8}, 2}};
    const auto a = disjoint_cover(items);
    std::reverse(items.begin(), items.end());
    CHECK(disjoint_cover(items) == a);
}

TEST_CASE("single interval is its own gap") {
    const auto forest = build_forest({{{4, 9}, 2}});
    REQUIRE(forest.size() == 1);
    CHECK(forest.nodes[0].parent == -1);
    CHECK(forest.nodes[0].gaps == std::vector<Interval>{Interval{4, 9}});
    CHECK(flatten(forest) == items_t{{{4, 9}, 2}});
}

TEST_CASE("duplicate intervals collapse to the minimum weight") {
    CHECK(disjoint_cover({{{2, 6}, 5}, {{2, 6}, 2}}) == items_t{{{2, 6}, 2}});
    CHECK(disjoint_cover({{{2, 6}, 2}, {{2, 6}, 5}, {{2, 6}, 3}}) == items_t{{{2, 6}, 2}});
}

TEST_CASE("disjoint inputs pass through unchanged") {
    const items_t items = {{{1, 2}, 4}, {{5, 5}, 1}, {{8, 12}, 2}};
    CHECK(disjoint_cover(items) == items);
}

TEST_CASE("empty input gives an empty cover") {
    CHECK(disjoint_cover({}).empty());
}

TEST_CASE("crossing intervals are rejected") {
    CHECK_THROWS_AS(build_forest({{{1, 5}, 2}, {{3, 8}, 1}}), validation_error);
    CHECK_THROWS_AS(build_forest({{{2, 9}, 3}, {{1, 4}, 2}}), validation_error);
}

TEST_CASE("nesting must strictly decrease the weight") {
    CHECK_THROWS_AS(build_forest({{{1, 10}, 2}, {{2, 3}, 2}}), validation_error);
    CHECK_THROWS_AS(build_forest({{{1, 10}, 2}, {{2, 3}, 5}}), validation_error);
    // ...but equal weights on disjoint siblings are fine.
    CHECK_NOTHROW(build_forest({{{1, 3}, 2}, {{5, 8}, 2}}));
}

TEST_CASE("degenerate items are rejected") {
    CHECK_THROWS_AS(build_forest({{Interval::none(), 1}}), validation_error);
    CHECK_THROWS_AS(build_forest({{{1, 4}, 0}}), validation_error);
}

TEST_CASE("random laminar families match the point-wise oracle") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const rank_t span = 50;
        const auto items = ovg::testing::random_laminar(span, 9, seed);
        const auto forest = build_forest(items);
        check_forest_structure(forest);

        const auto cover = disjoint_cover(items);
        CHECK(cover.size() <= 2 * std::max<std::size_t>(items.size(), 1) - 1);

        // sorted and pairwise disjoint
        for (std::size_t i = 1; i < cover.size(); ++i) {
            CHECK(cover[i - 1].iv.hi < cover[i].iv.lo);
        }
        // same coverage, each point at the minimum covering weight
        std::vector<weight_t> expect = ovg::testing::point_weights(items, span);
        std::vector<weight_t> got(span + 1, 0);
        for (const auto& piece : cover) {
            for (rank_t p = piece.iv.lo; p <= piece.iv.hi; ++p) got[p] = piece.weight;
        }
        CHECK(got == expect);
        // count bound against the deduplicated family size
        if (forest.size() > 0) CHECK(cover.size() <= 2 * forest.size() - 1);
    }
}

TEST_SUITE_END();
