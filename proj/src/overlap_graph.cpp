#include "ovg/overlap_graph.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>

#include "ovg/errors.hpp"
#include "ovg/interval_forest.hpp"
#include "ovg/prefix_index.hpp"

namespace ovg {

CompactOverlapGraph::CompactOverlapGraph(std::uint32_t length, std::uint32_t lambda,
                                         std::vector<AdjacencyRow> rows,
                                         std::vector<std::uint64_t> input_by_rank)
    : len_(length), lambda_(lambda), rows_(std::move(rows)),
      input_by_rank_(std::move(input_by_rank)) {
    const std::uint64_t n = rows_.size();
    if (n == 0) throw validation_error("graph must have at least one vertex");
    if (len_ < 1) throw validation_error("string length must be >= 1");
    if (lambda_ < 1 || lambda_ > len_)
        throw validation_error("lambda must be in [1, " + std::to_string(len_) + "]");
    if (input_by_rank_.size() != n)
        throw validation_error("permutation size does not match vertex count");

    rank_by_input_.assign(n, 0);
    for (std::uint64_t r = 0; r < n; ++r) {
        const auto idx = input_by_rank_[r];
        if (idx >= n || rank_by_input_[idx] != 0)
            throw validation_error("permutation is not a bijection on [0, n)");
        rank_by_input_[idx] = r + 1;
    }

    const std::uint64_t max_pieces = 2 * std::uint64_t(lambda_) - 1;
    const weight_t w_cap = std::min(lambda_, len_ - 1);
    for (const auto& row : rows_) {
        if (row.pieces.size() > max_pieces)
            throw validation_error("row exceeds 2*lambda - 1 pieces");
        rank_t prev_hi = 0;
        for (const auto& p : row.pieces) {
            if (p.iv.empty() || p.iv.lo <= prev_hi || p.iv.hi > n)
                throw validation_error("row pieces must be sorted, disjoint and within [1, n]");
            if (p.weight < 1 || p.weight > w_cap)
                throw validation_error("piece weight out of [1, min(lambda, l-1)]");
            prev_hi = p.iv.hi;
        }
    }
}

const AdjacencyRow& CompactOverlapGraph::row(rank_t i) const {
    if (i < 1 || i > size()) throw std::out_of_range("rank out of range");
    return rows_[i - 1];
}

std::optional<weight_t> CompactOverlapGraph::edge_weight(rank_t i, rank_t j,
                                                         std::size_t* probes) const {
    const auto& pieces = row(i).pieces;
    if (j < 1 || j > size()) throw std::out_of_range("rank out of range");
    std::size_t n_probes = 0;
    std::optional<weight_t> result;

    // last piece with lo <= j, then check its upper bound
    std::size_t lo = 0, hi = pieces.size();
    std::size_t best = pieces.size();
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        ++n_probes;
        if (pieces[mid].iv.lo <= j) {
            best = mid;
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    if (best != pieces.size()) {
        ++n_probes;
        if (pieces[best].iv.hi >= j) result = pieces[best].weight;
    }
    if (probes != nullptr) *probes = n_probes;
    return result;
}

std::vector<std::pair<rank_t, weight_t>> CompactOverlapGraph::out_neighbors(rank_t i) const {
    std::vector<std::pair<rank_t, weight_t>> out;
    out.reserve(out_degree(i));
    for_each_out_neighbor(i, [&](rank_t j, weight_t w) { out.emplace_back(j, w); });
    return out;
}

std::uint64_t CompactOverlapGraph::out_degree(rank_t i) const {
    std::uint64_t d = 0;
    for (const auto& piece : row(i).pieces) d += piece.iv.size();
    return d;
}

GraphStats CompactOverlapGraph::stats() const {
    GraphStats s;
    s.n = size();
    s.length = len_;
    s.lambda = lambda_;
    s.id_bits = id_bits();
    s.weight_bits = weight_bits();
    for (const auto& row : rows_) {
        s.total_pieces += row.pieces.size();
        s.max_row_pieces = std::max<std::uint64_t>(s.max_row_pieces, row.pieces.size());
    }
    const std::uint64_t per_piece = 2 * std::uint64_t(s.id_bits) + s.weight_bits;
    s.payload_bits = s.total_pieces * per_piece;
    s.bound_bits = (2 * std::uint64_t(lambda_) - 1) * per_piece * s.n;
    s.count_bits = s.n * std::max<std::uint64_t>(1, ceil_log2(2 * std::uint64_t(lambda_)));
    if (s.max_row_pieces > 2 * std::uint64_t(lambda_) - 1 || s.payload_bits > s.bound_bits)
        throw std::logic_error("graph violates the piece-count bound");
    return s;
}

rank_t CompactOverlapGraph::rank_of_input(std::size_t input_idx) const {
    if (input_idx >= size()) throw std::out_of_range("input index out of range");
    return rank_by_input_[input_idx];
}

std::size_t CompactOverlapGraph::input_index(rank_t rank) const {
    if (rank < 1 || rank > size()) throw std::out_of_range("rank out of range");
    return input_by_rank_[rank - 1];
}

namespace {

void build_rows(const SortedCorpus& corpus, const PrefixTrie* trie, weight_t w_cap,
                rank_t first, rank_t last, std::vector<AdjacencyRow>& rows) {
    std::vector<WeightedInterval> items;
    items.reserve(w_cap);
    for (rank_t i = first; i <= last; ++i) {
        items.clear();
        const std::string_view s = corpus.at(i);
        for (weight_t w = 1; w <= w_cap; ++w) {
            const std::string_view suffix = s.substr(w);
            const Interval iv =
                trie != nullptr ? trie->lookup(corpus, suffix) : prefix_interval_bsearch(corpus, suffix);
            if (!iv.empty()) items.push_back({iv, w});
        }
        rows[i - 1].pieces = disjoint_cover(items);
    }
}

} // namespace

CompactOverlapGraph build_graph(const SortedCorpus& corpus, std::uint32_t lambda,
                                BuildAlgorithm algo, unsigned threads) {
    const std::uint32_t len = corpus.length();
    if (lambda < 1 || lambda > len)
        throw validation_error("lambda must be in [1, " + std::to_string(len) + "], got " +
                               std::to_string(lambda));
    const rank_t n = corpus.size();
    const weight_t w_cap = std::min(lambda, len - 1); // w = l (empty suffix) is never an edge

    std::optional<PrefixTrie> trie;
    if (algo == BuildAlgorithm::trie) trie.emplace(PrefixTrie::build(corpus));
    const PrefixTrie* trie_ptr = trie ? &*trie : nullptr;

    std::vector<AdjacencyRow> rows(n);
    const auto workers = static_cast<unsigned>(
        std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, n)));
    if (workers == 1) {
        build_rows(corpus, trie_ptr, w_cap, 1, n, rows);
    } else {
        // contiguous rank chunks; rows are disjoint so no synchronization
        std::vector<std::thread> pool;
        pool.reserve(workers);
        const rank_t chunk = (n + workers - 1) / workers;
        for (unsigned t = 0; t < workers; ++t) {
            const rank_t first = 1 + rank_t(t) * chunk;
            if (first > n) break;
            const rank_t last = std::min(n, first + chunk - 1);
            pool.emplace_back(build_rows, std::cref(corpus), trie_ptr, w_cap, first, last,
                              std::ref(rows));
        }
        for (auto& th : pool) th.join();
    }
    return {len, lambda, std::move(rows), corpus.input_by_rank()};
}

void all_pairs_suffix_prefix(const SortedCorpus& corpus, std::uint32_t min_overlap,
                             const std::function<void(std::size_t, std::size_t, std::uint32_t)>& emit,
                             BuildAlgorithm algo, unsigned threads) {
    const std::uint32_t len = corpus.length();
    if (len < 2 || min_overlap < 1 || min_overlap > len - 1)
        throw validation_error("min overlap must be in [1, l-1]");
    const auto g = build_graph(corpus, len - min_overlap, algo, threads);
    for (rank_t i = 1; i <= g.size(); ++i) {
        const std::size_t i_input = g.input_index(i);
        g.for_each_out_neighbor(i, [&](rank_t j, weight_t w) {
            emit(i_input, g.input_index(j), len - w);
        });
    }
}

} // namespace ovg
