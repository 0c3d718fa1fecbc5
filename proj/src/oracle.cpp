#include "ovg/oracle.hpp"

#include <algorithm>

#include "ovg/errors.hpp"

namespace ovg::oracle {

std::uint32_t ov_max_length(std::string_view x, std::string_view y) {
    const std::size_t max_t = std::min(x.size(), y.size());
    for (std::size_t t = max_t; t > 0; --t) {
        if (x.substr(x.size() - t) == y.substr(0, t)) return static_cast<std::uint32_t>(t);
    }
    return 0;
}

std::uint32_t max_proper_overlap(std::string_view x, std::string_view y) {
    const std::size_t max_t = std::min(x.size(), y.size());
    if (max_t == 0) return 0;
    for (std::size_t t = max_t - 1; t > 0; --t) {
        if (x.substr(x.size() - t) == y.substr(0, t)) return static_cast<std::uint32_t>(t);
    }
    return 0;
}

std::vector<rank_t> naive_prefix_ranks(const SortedCorpus& corpus, std::string_view x) {
    std::vector<rank_t> out;
    for (rank_t i = 1; i <= corpus.size(); ++i) {
        if (corpus.at(i).substr(0, x.size()) == x) out.push_back(i);
    }
    return out;
}

std::uint64_t OracleEdgeMap::edge_count() const {
    std::uint64_t c = 0;
    for (auto w : weights_)
        if (w != 0) ++c;
    return c;
}

OracleEdgeMap oracle_graph(const SortedCorpus& corpus, std::uint32_t lambda, rank_t max_n) {
    const rank_t n = corpus.size();
    if (n > max_n)
        throw validation_error("oracle capped at n <= " + std::to_string(max_n) + ", got n = " +
                               std::to_string(n));
    const std::uint32_t len = corpus.length();
    if (lambda < 1 || lambda > len)
        throw validation_error("lambda must be in [1, " + std::to_string(len) + "]");

    const std::uint32_t w_cap = std::min(lambda, len - 1);
    OracleEdgeMap map(n, lambda);
    for (rank_t i = 1; i <= n; ++i) {
        for (rank_t j = 1; j <= n; ++j) {
            const auto x = corpus.at(i);
            const auto y = corpus.at(j);
            const std::uint32_t t = max_proper_overlap(x, y);
            if (t > 0 && len - t <= w_cap) map.set_weight(i, j, len - t);
            if (i != j && x == y) map.identical_pairs.emplace_back(i, j);
        }
    }
    return map;
}

} // namespace ovg::oracle
