#pragma once

// Shared fixtures and brute-force helpers for the unit and acceptance tests.
// Everything here is framework-free so both binaries can include it.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ovg/corpus.hpp"
#include "ovg/interval.hpp"
#include "ovg/oracle.hpp"
#include "ovg/overlap_graph.hpp"

namespace ovg::testing {

// The six length-12 DNA reads used as the running example corpus.
inline std::vector<std::string> example_reads() {
    return {
        "AAACCGGGGTTT", // 0
        "ACCCGAATTTGT", // 1
        "ACCCTGTGGTAT", // 2
        "ACCGGCTTTCCA", // 3
        "ACTAAGGAATTT", // 4
        "TGGCCGAAGAAG", // 5
    };
}

// Variant of the example corpus whose sorted order exercises the doubling
// boundary search: reads 1-3 are edited so that column 3 over the sorted
// order reads ACCGTG and the pattern ACCA narrows through [2,5] to [2,3].
inline std::vector<std::string> double_search_reads() {
    return {
        "AAACCGGGGTTT", // 0
        "ACCAGAATTTGT", // 1
        "ACCATGTGGTAT", // 2
        "ACGGGCTTTCCA", // 3
        "ACTAAGGAATTT", // 4
        "TGGCCGAAGAAG", // 5
    };
}

inline std::vector<std::string> random_strings(std::size_t n, std::uint32_t len,
                                               std::string_view symbols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, symbols.size() - 1);
    std::vector<std::string> out(n);
    for (auto& s : out) {
        s.resize(len);
        for (auto& c : s) c = symbols[pick(rng)];
    }
    return out;
}

// Fixed-length reads sampled from a short circular genome: dense genuine
// suffix-prefix overlaps, the regime the structure is built for.
inline std::vector<std::string> genome_reads(std::size_t n, std::uint32_t len,
                                             std::size_t genome_len, std::string_view symbols,
                                             std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, symbols.size() - 1);
    std::string genome(genome_len, '?');
    for (auto& c : genome) c = symbols[pick(rng)];
    std::uniform_int_distribution<std::size_t> offset(0, genome_len - 1);
    std::vector<std::string> out(n);
    for (auto& s : out) {
        const auto at = offset(rng);
        s.resize(len);
        for (std::uint32_t k = 0; k < len; ++k) s[k] = genome[(at + k) % genome_len];
    }
    return out;
}

inline std::vector<std::string> identical_reads(std::size_t n, std::uint32_t len,
                                                std::uint64_t seed) {
    auto one = random_strings(1, len, "ACGT", seed);
    return std::vector<std::string>(n, one[0]);
}

// Rotations of a short motif: heavily periodic, maximal self-overlap.
inline std::vector<std::string> periodic_reads(std::size_t n, std::uint32_t len,
                                               std::uint32_t period, std::uint64_t seed) {
    auto motif = random_strings(1, period, "ACGT", seed)[0];
    std::vector<std::string> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i].resize(len);
        for (std::uint32_t k = 0; k < len; ++k) out[i][k] = motif[(i + k) % period];
    }
    return out;
}

// Long shared prefix, random tails: deep single-child chains in the trie.
inline std::vector<std::string> shared_prefix_reads(std::size_t n, std::uint32_t len,
                                                    std::uint32_t prefix_len, std::uint64_t seed) {
    auto out = random_strings(n, len, "ACGT", seed);
    const auto prefix = random_strings(1, prefix_len, "ACGT", seed ^ 0x9E3779B97F4A7C15ull)[0];
    for (auto& s : out) s.replace(0, prefix_len, prefix);
    return out;
}

// First disagreement between the compact graph and the brute-force edge map
// over all ordered rank pairs, or nullopt when they agree everywhere.
inline std::optional<std::string> compare_graph_to_oracle(const CompactOverlapGraph& graph,
                                                          const oracle::OracleEdgeMap& om) {
    const auto n = graph.size();
    for (rank_t i = 1; i <= n; ++i) {
        for (rank_t j = 1; j <= n; ++j) {
            const auto got = graph.edge_weight(i, j);
            const weight_t want = om.weight(i, j);
            const weight_t have = got.value_or(0);
            if (want != have) {
                return "edge (" + std::to_string(i) + "," + std::to_string(j) + "): oracle says " +
                       (want ? std::to_string(want) : std::string("ABSENT")) + ", graph says " +
                       (have ? std::to_string(have) : std::string("ABSENT"));
            }
        }
    }
    return std::nullopt;
}

// --- laminar interval families -------------------------------------------

// Random family over [1, span] satisfying the decomposition preconditions:
// every pair nested or disjoint, and nesting strictly decreases the weight.
// Occasionally repeats an interval at a higher weight to exercise the
// duplicate-collapsing path.
inline std::vector<WeightedInterval> random_laminar(rank_t span, weight_t top_weight,
                                                    std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<WeightedInterval> items;

    auto subdivide = [&](auto&& self, rank_t lo, rank_t hi, weight_t below) -> void {
        if (below <= 1 || hi < lo) return;
        std::uniform_int_distribution<int> children(0, 3);
        rank_t cursor = lo;
        for (int c = children(rng); c > 0 && cursor <= hi; --c) {
            std::uniform_int_distribution<rank_t> lo_pick(cursor, hi);
            const auto clo = lo_pick(rng);
            std::uniform_int_distribution<rank_t> hi_pick(clo, hi);
            const auto chi = hi_pick(rng);
            std::uniform_int_distribution<weight_t> w_pick(1, below - 1);
            const auto w = w_pick(rng);
            items.push_back({{clo, chi}, w});
            if (rng() % 4 == 0 && w + 1 < below) {
                // duplicate at a higher weight; the minimum must win
                std::uniform_int_distribution<weight_t> dup_pick(w + 1, below - 1);
                items.push_back({{clo, chi}, dup_pick(rng)});
            }
            self(self, clo, chi, w);
            cursor = chi + 1;
        }
    };
    subdivide(subdivide, 1, span, top_weight + 1);
    std::shuffle(items.begin(), items.end(), rng);
    return items;
}

// Minimum weight covering each point of [1, span], 0 where uncovered.
inline std::vector<weight_t> point_weights(const std::vector<WeightedInterval>& items,
                                           rank_t span) {
    std::vector<weight_t> w(span + 1, 0);
    for (const auto& it : items) {
        for (rank_t p = it.iv.lo; p <= it.iv.hi && p <= span; ++p) {
            if (w[p] == 0 || it.weight < w[p]) w[p] = it.weight;
        }
    }
    return w;
}

// RAII scratch directory for tests that touch the filesystem.
class TempDir {
  public:
    TempDir() {
        std::mt19937_64 rng(std::random_device{}());
        path_ = std::filesystem::temp_directory_path() /
                ("ovg-test-" + std::to_string(rng() | 1));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

    std::filesystem::path write_lines(const std::string& name,
                                      const std::vector<std::string>& lines) const {
        const auto file = path_ / name;
        std::ofstream out(file);
        for (const auto& line : lines) out << line << '\n';
        return file;
    }

  private:
    std::filesystem::path path_;
};

} // namespace ovg::testing
