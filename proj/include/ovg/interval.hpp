#pragma once

#include <cstdint>

namespace ovg {

using rank_t = std::uint64_t;   // 1-based lexicographic rank (identification number)
using weight_t = std::uint32_t; // edge weight, 1 <= w <= lambda

// Inclusive range [lo, hi] of ranks. lo == 0 is the distinguished empty value;
// otherwise 1 <= lo <= hi.
struct Interval {
    rank_t lo = 0;
    rank_t hi = 0;

    static constexpr Interval none() { return {0, 0}; }

    constexpr bool empty() const { return lo == 0; }
    constexpr rank_t size() const { return empty() ? 0 : hi - lo + 1; }
    constexpr bool contains(rank_t r) const { return !empty() && lo <= r && r <= hi; }
    constexpr bool contains(const Interval& other) const {
        return !empty() && !other.empty() && lo <= other.lo && other.hi <= hi;
    }
    constexpr bool disjoint_from(const Interval& other) const {
        return empty() || other.empty() || hi < other.lo || other.hi < lo;
    }

    friend constexpr bool operator==(const Interval&, const Interval&) = default;
};

struct WeightedInterval {
    Interval iv;
    weight_t weight = 0;

    friend constexpr bool operator==(const WeightedInterval&, const WeightedInterval&) = default;
};

} // namespace ovg
