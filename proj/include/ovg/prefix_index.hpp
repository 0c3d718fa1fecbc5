#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "ovg/corpus.hpp"
#include "ovg/interval.hpp"

namespace ovg {

// PREFIX(x): the interval of ranks whose strings have x as a prefix, or the
// empty interval. Two interchangeable backends below; they must agree exactly.

// Column binary-search backend. start must be non-empty and its strings must
// share a common prefix of start_depth symbols; x is matched from position
// start_depth + 1 on. Top-level callers pass the full interval and depth 0.
// Each step binary-searches x's next symbol in the virtual column over the
// current interval, then locates both boundaries by exponential (doubling)
// probes followed by a binary search inside the bracket. O(|x| log n) time,
// O(1) extra memory. Empty x returns start.
Interval prefix_interval_bsearch(const SortedCorpus& corpus, std::string_view x, Interval start,
                                 std::uint32_t start_depth);

inline Interval prefix_interval_bsearch(const SortedCorpus& corpus, std::string_view x) {
    return prefix_interval_bsearch(corpus, x, corpus.full_interval(), 0);
}

// Compressed trie over the sorted corpus. Single-child chains are removed and
// their lengths kept as per-node skip counts, so every internal node (the
// root included) has at least two children and the node count is at most 2n.
class PrefixTrie {
  public:
    struct Node {
        Interval range;                                     // ranks of leaves below
        std::uint32_t depth = 0;                            // symbols consumed from the root
        std::uint32_t skip = 0;                             // chain symbols absorbed on the way in
        std::vector<std::pair<char, std::uint32_t>> children; // keyed by branching symbol, in order
    };

    static constexpr std::uint32_t root_index = 0;

    static PrefixTrie build(const SortedCorpus& corpus);

    // Equals prefix_interval_bsearch over the full interval; O(|x|). Symbols
    // absorbed into skip counts are verified against the string at the lo
    // rank of the current node's range, so mismatches inside chains are
    // caught and return the empty interval.
    Interval lookup(const SortedCorpus& corpus, std::string_view x) const;

    std::size_t node_count() const { return nodes_.size(); }
    const Node& node(std::uint32_t idx) const { return nodes_[idx]; }
    const Node& root() const { return nodes_[root_index]; }

  private:
    std::vector<Node> nodes_;
};

inline Interval prefix_interval_trie(const PrefixTrie& trie, const SortedCorpus& corpus,
                                     std::string_view x) {
    return trie.lookup(corpus, x);
}

} // namespace ovg
