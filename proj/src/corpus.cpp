#include "ovg/corpus.hpp"

#include <cstring>
#include <fstream>
#include <istream>
#include <numeric>
#include <stdexcept>

#include "ovg/errors.hpp"

namespace ovg {

namespace {

void check_line_symbols(const std::string& line, std::size_t lineno, const Alphabet& alphabet) {
    for (std::size_t p = 0; p < line.size(); ++p) {
        if (!alphabet.contains(line[p])) {
            throw parse_error("line " + std::to_string(lineno) + ", column " +
                                  std::to_string(p + 1) + ": symbol '" + line[p] +
                                  "' not in alphabet",
                              lineno);
        }
    }
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::vector<std::string> read_plain(std::istream& in, const Alphabet& alphabet) {
    std::vector<std::string> out;
    std::string line;
    std::size_t lineno = 0;
    std::size_t expect = 0;
    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (line.empty())
            throw parse_error("line " + std::to_string(lineno) + ": blank line", lineno);
        check_line_symbols(line, lineno, alphabet);
        if (out.empty()) {
            expect = line.size();
        } else if (line.size() != expect) {
            throw parse_error("line " + std::to_string(lineno) + ": length " +
                                  std::to_string(line.size()) + ", expected " +
                                  std::to_string(expect),
                              lineno);
        }
        out.push_back(std::move(line));
    }
    return out;
}

std::vector<std::string> read_fasta(std::istream& in, const Alphabet& alphabet) {
    std::vector<std::string> out;
    std::string line, header, seq;
    std::size_t lineno = 0, record_line = 0, expect = 0;
    bool in_record = false;

    auto finish_record = [&] {
        if (!in_record) return;
        if (seq.empty())
            throw parse_error("record '" + header + "' (line " + std::to_string(record_line) +
                                  "): empty sequence",
                              record_line);
        if (!out.empty() && seq.size() != expect) {
            throw parse_error("record '" + header + "' (line " + std::to_string(record_line) +
                                  "): length " + std::to_string(seq.size()) + ", expected " +
                                  std::to_string(expect),
                              record_line);
        }
        if (out.empty()) expect = seq.size();
        out.push_back(std::move(seq));
        seq.clear();
    };

    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (!line.empty() && line[0] == '>') {
            finish_record();
            in_record = true;
            header = line.substr(1);
            record_line = lineno;
            continue;
        }
        if (line.empty()) continue; // blank lines between records are tolerated
        if (!in_record)
            throw parse_error("line " + std::to_string(lineno) + ": sequence before first header",
                              lineno);
        check_line_symbols(line, lineno, alphabet);
        seq += line;
    }
    finish_record();
    return out;
}

} // namespace

std::vector<std::string> read_strings(std::istream& in, InputFormat format,
                                      const Alphabet& alphabet) {
    auto out = format == InputFormat::plain ? read_plain(in, alphabet) : read_fasta(in, alphabet);
    if (out.empty()) throw validation_error("input contains no strings");
    return out;
}

SortedCorpus SortedCorpus::from_strings(std::vector<std::string> raw, Alphabet alphabet) {
    if (raw.empty()) throw validation_error("corpus is empty");
    const std::size_t n = raw.size();
    const std::size_t len = raw[0].size();
    if (len == 0) throw validation_error("corpus strings must be non-empty");
    for (std::size_t i = 0; i < n; ++i) {
        if (raw[i].size() != len) {
            throw validation_error("string " + std::to_string(i + 1) + ": length " +
                                   std::to_string(raw[i].size()) + ", expected " +
                                   std::to_string(len));
        }
        for (std::size_t p = 0; p < len; ++p) {
            if (!alphabet.contains(raw[i][p])) {
                throw validation_error("string " + std::to_string(i + 1) + ", position " +
                                       std::to_string(p + 1) + ": symbol '" + raw[i][p] +
                                       "' not in alphabet");
            }
        }
    }

    // LSD radix sort of input indices, one stable counting pass per position.
    const std::size_t sigma = alphabet.size();
    std::vector<std::uint64_t> order(n), next(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::uint64_t> bucket(sigma + 1);
    for (std::size_t pos = len; pos-- > 0;) {
        std::fill(bucket.begin(), bucket.end(), 0);
        for (auto idx : order) ++bucket[std::size_t(alphabet.rank(raw[idx][pos])) + 1];
        for (std::size_t r = 1; r <= sigma; ++r) bucket[r] += bucket[r - 1];
        for (auto idx : order) next[bucket[std::size_t(alphabet.rank(raw[idx][pos]))]++] = idx;
        order.swap(next);
    }

    SortedCorpus c;
    c.n_ = n;
    c.len_ = static_cast<std::uint32_t>(len);
    c.alpha_ = std::move(alphabet);
    c.data_.resize(n * len);
    c.input_by_rank_ = order;
    c.rank_by_input_.resize(n);
    for (std::size_t r = 0; r < n; ++r) {
        std::memcpy(c.data_.data() + r * len, raw[order[r]].data(), len);
        c.rank_by_input_[order[r]] = r + 1;
    }
    return c;
}

std::string_view SortedCorpus::at(rank_t rank) const {
    if (rank < 1 || rank > n_) throw std::out_of_range("rank out of range");
    return {data_.data() + (rank - 1) * len_, len_};
}

char SortedCorpus::symbol(rank_t rank, std::uint32_t pos) const {
    if (rank < 1 || rank > n_) throw std::out_of_range("rank out of range");
    if (pos < 1 || pos > len_) throw std::out_of_range("position out of range");
    return symbol_unchecked(rank, pos);
}

rank_t SortedCorpus::rank_of_input(std::size_t input_idx) const {
    if (input_idx >= n_) throw std::out_of_range("input index out of range");
    return rank_by_input_[input_idx];
}

std::size_t SortedCorpus::input_index(rank_t rank) const {
    if (rank < 1 || rank > n_) throw std::out_of_range("rank out of range");
    return input_by_rank_[rank - 1];
}

SortedCorpus load_corpus(const std::filesystem::path& path, InputFormat format,
                         Alphabet alphabet) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path.string());
    auto raw = read_strings(in, format, alphabet);
    return SortedCorpus::from_strings(std::move(raw), std::move(alphabet));
}

} // namespace ovg
