#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ovg/bits.hpp"
#include "ovg/corpus.hpp"
#include "ovg/interval.hpp"

namespace ovg {

// Out-neighborhood of one vertex: at most 2*lambda - 1 disjoint weighted
// rank intervals, sorted by lower bound. Rank j lies in a piece of weight w
// exactly when the w-symbol-shorter suffix of this vertex's string is a
// prefix of string j and no smaller such w exists.
struct AdjacencyRow {
    std::vector<WeightedInterval> pieces;

    friend bool operator==(const AdjacencyRow&, const AdjacencyRow&) = default;
};

struct GraphStats {
    rank_t n = 0;
    std::uint32_t length = 0;
    std::uint32_t lambda = 0;
    std::uint32_t id_bits = 0;
    std::uint32_t weight_bits = 0;
    std::uint64_t total_pieces = 0;
    std::uint64_t max_row_pieces = 0;
    std::uint64_t payload_bits = 0; // total_pieces * (2*id_bits + weight_bits)
    std::uint64_t bound_bits = 0;   // (2*lambda - 1) * (2*id_bits + weight_bits) * n
    std::uint64_t count_bits = 0;   // per-row piece counts, kept outside the interval budget
};

enum class BuildAlgorithm { bsearch, trie };

// The compact overlap graph: one AdjacencyRow per rank plus the permutation
// back to input order. Weights w in [1, min(lambda, l-1)]: an edge (i, j, w)
// means the longest proper suffix-prefix overlap of strings i and j has
// length l - w. Immutable after construction.
class CompactOverlapGraph {
  public:
    CompactOverlapGraph(std::uint32_t length, std::uint32_t lambda,
                        std::vector<AdjacencyRow> rows, std::vector<std::uint64_t> input_by_rank);

    rank_t size() const { return rows_.size(); }
    std::uint32_t length() const { return len_; }
    std::uint32_t lambda() const { return lambda_; }
    std::uint32_t id_bits() const { return std::max<std::uint32_t>(1, ceil_log2(size())); }
    std::uint32_t weight_bits() const { return std::max<std::uint32_t>(1, ceil_log2(lambda_)); }

    const AdjacencyRow& row(rank_t i) const;

    // Weight of edge (i, j) or nullopt, by binary search over row i's pieces
    // for the last piece starting at or before j. When probes is given it
    // receives the number of pieces inspected, at most ceil(log2(2*lambda))+1.
    std::optional<weight_t> edge_weight(rank_t i, rank_t j, std::size_t* probes = nullptr) const;

    // Calls f(j, w) for every out-neighbor of i in ascending rank order.
    template <typename F>
    void for_each_out_neighbor(rank_t i, F&& f) const {
        for (const auto& piece : row(i).pieces) {
            for (rank_t j = piece.iv.lo; j <= piece.iv.hi; ++j) f(j, piece.weight);
        }
    }

    std::vector<std::pair<rank_t, weight_t>> out_neighbors(rank_t i) const;
    std::uint64_t out_degree(rank_t i) const;

    GraphStats stats() const;

    rank_t rank_of_input(std::size_t input_idx) const;
    std::size_t input_index(rank_t rank) const;
    const std::vector<std::uint64_t>& input_by_rank() const { return input_by_rank_; }

    friend bool operator==(const CompactOverlapGraph& a, const CompactOverlapGraph& b) {
        return a.len_ == b.len_ && a.lambda_ == b.lambda_ && a.rows_ == b.rows_ &&
               a.input_by_rank_ == b.input_by_rank_;
    }

  private:
    std::uint32_t len_;
    std::uint32_t lambda_;
    std::vector<AdjacencyRow> rows_;
    std::vector<std::uint64_t> input_by_rank_; // 0-based input index per rank
    std::vector<std::uint64_t> rank_by_input_; // derived inverse, 1-based ranks
};

// Builds the graph for 1 <= lambda <= l. Per vertex i: PREFIX of each suffix
// dropped by w = 1..min(lambda, l-1) symbols, non-empty intervals fed through
// the disjoint-interval decomposition. The trie backend shares one trie
// across all vertices; the bsearch backend needs no auxiliary structure.
// Vertices may be partitioned over threads; the result is identical to the
// sequential build.
CompactOverlapGraph build_graph(const SortedCorpus& corpus, std::uint32_t lambda,
                                BuildAlgorithm algo = BuildAlgorithm::trie, unsigned threads = 1);

inline CompactOverlapGraph build_bsearch(const SortedCorpus& corpus, std::uint32_t lambda,
                                         unsigned threads = 1) {
    return build_graph(corpus, lambda, BuildAlgorithm::bsearch, threads);
}

inline CompactOverlapGraph build_trie(const SortedCorpus& corpus, std::uint32_t lambda,
                                      unsigned threads = 1) {
    return build_graph(corpus, lambda, BuildAlgorithm::trie, threads);
}

// All ordered pairs whose longest proper overlap is at least min_overlap
// (1 <= min_overlap <= l-1), streamed as emit(i_input, j_input, overlap_len)
// with 0-based input-order indices. Builds with lambda = l - min_overlap and
// walks the rows in rank order, so the emission sequence is independent of
// the input file order.
void all_pairs_suffix_prefix(const SortedCorpus& corpus, std::uint32_t min_overlap,
                             const std::function<void(std::size_t, std::size_t, std::uint32_t)>& emit,
                             BuildAlgorithm algo = BuildAlgorithm::trie, unsigned threads = 1);

} // namespace ovg
