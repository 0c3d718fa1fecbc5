#include "ovg/prefix_index.hpp"

#include <stdexcept>

#include "ovg/errors.hpp"

namespace ovg {

namespace {

// Leftmost rank in [bound, hit] whose column symbol equals sym. The column is
// sorted, hit matches, and equal symbols are contiguous. Doubling probes at
// offsets 1, 2, 4, ... bracket the boundary, clamped at bound; a binary
// search inside the bracket finishes.
rank_t gallop_left(const SortedCorpus& c, std::uint32_t col, rank_t bound, rank_t hit, char sym) {
    if (hit == bound || c.symbol_unchecked(hit - 1, col) != sym) return hit;
    rank_t good = hit - 1; // matches
    rank_t bad = 0;        // 0 = bracket clamped at bound
    for (rank_t off = 2;; off <<= 1) {
        if (hit < bound + off) break;
        const rank_t probe = hit - off;
        if (c.symbol_unchecked(probe, col) == sym) {
            good = probe;
        } else {
            bad = probe;
            break;
        }
    }
    if (bad == 0) bad = bound - 1; // may be 0 when bound == 1; virtual pre-first slot
    while (bad + 1 < good) {
        const rank_t mid = bad + (good - bad) / 2;
        (c.symbol_unchecked(mid, col) == sym ? good : bad) = mid;
    }
    return good;
}

rank_t gallop_right(const SortedCorpus& c, std::uint32_t col, rank_t bound, rank_t hit, char sym) {
    if (hit == bound || c.symbol_unchecked(hit + 1, col) != sym) return hit;
    rank_t good = hit + 1;
    rank_t bad = 0;
    for (rank_t off = 2;; off <<= 1) {
        if (hit + off > bound) break;
        const rank_t probe = hit + off;
        if (c.symbol_unchecked(probe, col) == sym) {
            good = probe;
        } else {
            bad = probe;
            break;
        }
    }
    if (bad == 0) bad = bound + 1;
    while (good + 1 < bad) {
        const rank_t mid = good + (bad - good) / 2;
        (c.symbol_unchecked(mid, col) == sym ? good : bad) = mid;
    }
    return good;
}

} // namespace

Interval prefix_interval_bsearch(const SortedCorpus& corpus, std::string_view x, Interval start,
                                 std::uint32_t start_depth) {
    if (start.empty()) throw validation_error("start interval is empty");
    if (start.lo < 1 || start.hi > corpus.size())
        throw std::out_of_range("start interval out of range");
    if (x.empty()) return start;

    const std::uint32_t len = corpus.length();
    const Alphabet& alpha = corpus.alphabet();
    rank_t a = start.lo;
    rank_t b = start.hi;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const std::uint64_t col64 = std::uint64_t(start_depth) + k + 1;
        if (col64 > len) return Interval::none(); // x longer than the strings
        const auto col = static_cast<std::uint32_t>(col64);
        const char sym = x[k];
        const int target = alpha.rank(sym);
        if (target < 0) return Interval::none();

        // any occurrence of sym in the column over [a, b]
        rank_t lo = a, hi = b, hit = 0;
        while (lo <= hi) {
            const rank_t mid = lo + (hi - lo) / 2;
            const int r = alpha.rank(corpus.symbol_unchecked(mid, col));
            if (r < target) {
                lo = mid + 1;
            } else if (r > target) {
                hi = mid - 1;
            } else {
                hit = mid;
                break;
            }
        }
        if (hit == 0) return Interval::none();
        a = gallop_left(corpus, col, a, hit, sym);
        b = gallop_right(corpus, col, b, hit, sym);
    }
    return {a, b};
}

PrefixTrie PrefixTrie::build(const SortedCorpus& corpus) {
    const std::uint32_t len = corpus.length();
    PrefixTrie trie;
    trie.nodes_.reserve(2 * std::min<std::uint64_t>(corpus.size(), 1u << 20));

    // Strings lo..hi share a prefix of start_depth symbols. Extends the chain
    // while the next column is constant over the range (the range is sorted,
    // so first == last means all equal), then either stops at a leaf or
    // partitions the range by the branching column.
    auto build_node = [&](auto&& self, rank_t lo, rank_t hi, std::uint32_t start_depth)
        -> std::uint32_t {
        std::uint32_t depth = start_depth;
        while (depth < len &&
               corpus.symbol_unchecked(lo, depth + 1) == corpus.symbol_unchecked(hi, depth + 1)) {
            ++depth;
        }
        const auto idx = static_cast<std::uint32_t>(trie.nodes_.size());
        trie.nodes_.push_back(Node{{lo, hi}, depth, depth - start_depth, {}});
        if (depth == len) return idx; // leaf; a multi-rank range here means duplicates

        const std::uint32_t col = depth + 1;
        rank_t run_lo = lo;
        while (run_lo <= hi) {
            const char sym = corpus.symbol_unchecked(run_lo, col);
            rank_t run_hi = run_lo;
            while (run_hi < hi && corpus.symbol_unchecked(run_hi + 1, col) == sym) ++run_hi;
            const std::uint32_t child = self(self, run_lo, run_hi, depth + 1);
            trie.nodes_[idx].children.emplace_back(sym, child);
            run_lo = run_hi + 1;
        }
        return idx;
    };
    build_node(build_node, 1, corpus.size(), 0);
    return trie;
}

Interval PrefixTrie::lookup(const SortedCorpus& corpus, std::string_view x) const {
    if (x.empty()) return corpus.full_interval();
    const Node* node = &nodes_[root_index];
    std::size_t pos = 0; // symbols of x consumed
    for (;;) {
        // verify the chain portion of this node against the witness string
        const std::size_t limit = std::min<std::size_t>(x.size(), node->depth);
        const rank_t witness = node->range.lo;
        while (pos < limit) {
            if (x[pos] != corpus.symbol_unchecked(witness, static_cast<std::uint32_t>(pos + 1)))
                return Interval::none();
            ++pos;
        }
        if (pos == x.size()) return node->range;

        // pos == node->depth < |x|: descend on the branching symbol
        const Node* next = nullptr;
        for (const auto& [sym, child] : node->children) {
            if (sym == x[pos]) {
                next = &nodes_[child];
                break;
            }
        }
        if (next == nullptr) return Interval::none();
        ++pos; // the branching symbol is implied by the child key
        node = next;
    }
}

} // namespace ovg
