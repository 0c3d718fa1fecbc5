#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "ovg/corpus.hpp"
#include "ovg/interval.hpp"

namespace ovg::oracle {

// Brute-force reference implementations. Deliberately naive and deliberately
// independent of the prefix/forest/graph code paths: everything here is direct
// symbol comparison over the raw strings.

// Length of the longest string that is both a suffix of x and a prefix of y,
// in [0, min(|x|, |y|)]. x == y yields |x|.
std::uint32_t ov_max_length(std::string_view x, std::string_view y);

// Longest overlap of length at most min(|x|, |y|) - 1, i.e. excluding the
// full-string match; 0 when no such overlap exists.
std::uint32_t max_proper_overlap(std::string_view x, std::string_view y);

// Ranks whose corpus strings have x as a prefix, ascending, via linear scan.
std::vector<rank_t> naive_prefix_ranks(const SortedCorpus& corpus, std::string_view x);

// Dense map of edge weights over ordered rank pairs, 0 meaning no edge.
class OracleEdgeMap {
  public:
    OracleEdgeMap(rank_t n, std::uint32_t lambda)
        : n_(n), lambda_(lambda), weights_(n * n, 0) {}

    rank_t size() const { return n_; }
    std::uint32_t lambda() const { return lambda_; }

    weight_t weight(rank_t i, rank_t j) const { return weights_[(i - 1) * n_ + (j - 1)]; }
    void set_weight(rank_t i, rank_t j, weight_t w) { weights_[(i - 1) * n_ + (j - 1)] = w; }

    std::uint64_t edge_count() const;

    // Ordered pairs (i, j), i != j, whose strings are identical. These have
    // ov_max == l and so weight 0 under the raw definition; the compact
    // structure never stores weight-0 edges, so they are reported here only.
    std::vector<std::pair<rank_t, rank_t>> identical_pairs;

  private:
    rank_t n_;
    std::uint32_t lambda_;
    std::vector<weight_t> weights_;
};

// Weight of every ordered pair (including i == j) by trying overlap lengths
// t = l-1, l-2, ... with direct comparison; an edge (i, j, w) is recorded when
// the longest proper overlap t* satisfies w = l - t* <= lambda. O(n^2 l^2)
// worst case, so callers must stay under max_n.
OracleEdgeMap oracle_graph(const SortedCorpus& corpus, std::uint32_t lambda, rank_t max_n = 2000);

} // namespace ovg::oracle
