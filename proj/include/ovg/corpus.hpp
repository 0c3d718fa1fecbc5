#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ovg/alphabet.hpp"
#include "ovg/interval.hpp"

namespace ovg {

enum class InputFormat { plain, fasta };

// Parse one string per record from the stream, validating symbols against the
// alphabet and enforcing a single common length. plain: one string per line,
// no blank lines. fasta: '>' headers delimit records, sequence lines are
// concatenated. Errors carry the offending line number.
std::vector<std::string> read_strings(std::istream& in, InputFormat format,
                                      const Alphabet& alphabet);

// The n input strings of common length l, lexicographically sorted under the
// alphabet order, plus the permutation between input order and rank order.
// Ranks are 1-based; input indices are 0-based. Immutable after construction.
class SortedCorpus {
  public:
    // Validates, then stably radix-sorts (duplicates keep their input order,
    // so equal strings occupy consecutive ranks in input order).
    static SortedCorpus from_strings(std::vector<std::string> raw,
                                     Alphabet alphabet = Alphabet::dna());

    rank_t size() const { return n_; }
    std::uint32_t length() const { return len_; }
    const Alphabet& alphabet() const { return alpha_; }

    Interval full_interval() const { return {1, n_}; }

    // String at the given rank, 1 <= rank <= n.
    std::string_view at(rank_t rank) const;

    // Symbol at 1-based position pos of the string at the given rank; O(1).
    // This is the virtual column view: column pos read over ranks a..b is the
    // (sorted) string of pos-th symbols.
    char symbol(rank_t rank, std::uint32_t pos) const;

    char symbol_unchecked(rank_t rank, std::uint32_t pos) const noexcept {
        return data_[(rank - 1) * len_ + (pos - 1)];
    }

    // Input index (0-based) -> rank (1-based).
    rank_t rank_of_input(std::size_t input_idx) const;

    // Rank (1-based) -> input index (0-based).
    std::size_t input_index(rank_t rank) const;

    const std::vector<std::uint64_t>& input_by_rank() const { return input_by_rank_; }

  private:
    SortedCorpus() = default;

    std::vector<char> data_; // n * l symbols, rank order, row-major
    rank_t n_ = 0;
    std::uint32_t len_ = 0;
    Alphabet alpha_ = Alphabet::dna();
    std::vector<std::uint64_t> rank_by_input_; // 1-based ranks
    std::vector<std::uint64_t> input_by_rank_; // 0-based input indices
};

// Read + validate + sort a whole file.
SortedCorpus load_corpus(const std::filesystem::path& path, InputFormat format,
                         Alphabet alphabet = Alphabet::dna());

} // namespace ovg
