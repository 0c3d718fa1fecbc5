#include "ovg/serialize.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "ovg/bits.hpp"
#include "ovg/errors.hpp"

namespace ovg {

namespace {

constexpr std::size_t kMagicSize = 4;
constexpr std::array<std::uint8_t, kMagicSize> kMagic = {'O', 'V', 'G', '1'};
constexpr std::uint8_t kVersion = 1;
// magic + version + n (u64) + length (u32) + lambda (u32) + two width bytes.
constexpr std::size_t kHeaderSize = kMagicSize + 1 + 8 + 4 + 4 + 1 + 1;
constexpr std::size_t kTrailerSize = 4;
// Smallest well-formed stream: n = 1, one permutation entry, one payload
// byte holding a single count field, CRC trailer.
constexpr std::size_t kMinStreamSize = kHeaderSize + 8 + 1 + kTrailerSize;

std::uint32_t count_field_bits(std::uint32_t lambda) {
    return std::max<std::uint32_t>(1, ceil_log2(2 * std::uint64_t(lambda)));
}

void append_u32le(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(std::uint8_t(v >> (8 * i)));
}

void append_u64le(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(std::uint8_t(v >> (8 * i)));
}

std::uint32_t read_u32le(std::span<const std::uint8_t> bytes, std::size_t at) {
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | bytes[at + std::size_t(i)];
    return v;
}

std::uint64_t read_u64le(std::span<const std::uint8_t> bytes, std::size_t at) {
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | bytes[at + std::size_t(i)];
    return v;
}

// MSB-first bit packer: the first bit written lands in the high bit of the
// first byte, matching the stream layout read back by BitReader.
class BitWriter {
  public:
    explicit BitWriter(std::vector<std::uint8_t>& out) : out_(out) {}

    void put(std::uint64_t value, std::uint32_t bits) {
        for (std::uint32_t b = bits; b-- > 0;) {
            acc_ = std::uint8_t((acc_ << 1) | ((value >> b) & 1));
            if (++fill_ == 8) {
                out_.push_back(acc_);
                acc_ = 0;
                fill_ = 0;
            }
        }
    }

    // Zero-fills the trailing partial byte, if any.
    void pad_to_byte() {
        if (fill_ > 0) {
            out_.push_back(std::uint8_t(acc_ << (8 - fill_)));
            acc_ = 0;
            fill_ = 0;
        }
    }

  private:
    std::vector<std::uint8_t>& out_;
    std::uint8_t acc_ = 0;
    std::uint32_t fill_ = 0;
};

class BitReader {
  public:
    BitReader(std::span<const std::uint8_t> bytes, std::size_t begin, std::size_t end)
        : bytes_(bytes), pos_(begin), end_(end) {}

    std::uint64_t get(std::uint32_t bits) {
        std::uint64_t value = 0;
        for (std::uint32_t b = 0; b < bits; ++b) {
            const std::size_t byte = pos_ >> 3;
            if (byte >= end_) {
                throw format_error(format_error::code::truncated,
                                   "graph stream ends inside the bit-packed payload");
            }
            const std::uint32_t shift = 7 - (pos_ & 7);
            value = (value << 1) | ((bytes_[byte] >> shift) & 1);
            ++pos_;
        }
        return value;
    }

    std::size_t bit_pos() const { return pos_; }
    std::size_t end_bit() const { return end_ * 8; }

    // True when every remaining bit up to the region end is zero; used to
    // verify both the sub-byte padding and the absence of trailing bytes.
    bool rest_is_zero() const {
        for (std::size_t p = pos_; p < end_ * 8; ++p) {
            if ((bytes_[p >> 3] >> (7 - (p & 7))) & 1) return false;
        }
        return true;
    }

  private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_; // in bits
    std::size_t end_; // first byte past the payload region
};

} // namespace

std::uint32_t crc32(std::span<const std::uint8_t> data) {
    static const auto table = [] {
        std::array<std::uint32_t, 256> t{};
        for (std::uint32_t i = 0; i < 256; ++i) {
            std::uint32_t c = i;
            for (int k = 0; k < 8; ++k) c = (c & 1) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
            t[i] = c;
        }
        return t;
    }();
    std::uint32_t crc = 0xFFFFFFFFu;
    for (const auto byte : data) crc = table[(crc ^ byte) & 0xFFu] ^ (crc >> 8);
    return crc ^ 0xFFFFFFFFu;
}

std::vector<std::uint8_t> serialize(const CompactOverlapGraph& graph) {
    const auto n = graph.size();
    const auto id_bits = graph.id_bits();
    const auto weight_bits = graph.weight_bits();

    std::vector<std::uint8_t> out;
    out.insert(out.end(), kMagic.begin(), kMagic.end());
    out.push_back(kVersion);
    append_u64le(out, n);
    append_u32le(out, graph.length());
    append_u32le(out, graph.lambda());
    out.push_back(std::uint8_t(id_bits));
    out.push_back(std::uint8_t(weight_bits));
    for (rank_t r = 1; r <= n; ++r) append_u64le(out, graph.input_index(r));

    BitWriter writer(out);
    const auto cbits = count_field_bits(graph.lambda());
    for (rank_t r = 1; r <= n; ++r) writer.put(graph.row(r).pieces.size(), cbits);
    for (rank_t r = 1; r <= n; ++r) {
        for (const auto& piece : graph.row(r).pieces) {
            writer.put(piece.iv.lo - 1, id_bits);
            writer.put(piece.iv.hi - 1, id_bits);
            writer.put(piece.weight - 1, weight_bits);
        }
    }
    writer.pad_to_byte();

    append_u32le(out, crc32(out));
    return out;
}

CompactOverlapGraph deserialize(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kMinStreamSize) {
        throw format_error(format_error::code::truncated,
                           "graph stream is " + std::to_string(bytes.size()) +
                               " bytes, shorter than the minimum of " +
                               std::to_string(kMinStreamSize));
    }
    if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
        throw format_error(format_error::code::bad_magic, "missing OVG1 magic");
    }
    if (bytes[kMagicSize] != kVersion) {
        throw format_error(format_error::code::bad_version,
                           "unsupported format version " + std::to_string(bytes[kMagicSize]));
    }
    const auto stored_crc = read_u32le(bytes, bytes.size() - kTrailerSize);
    const auto actual_crc = crc32(bytes.first(bytes.size() - kTrailerSize));
    if (stored_crc != actual_crc) {
        throw format_error(format_error::code::bad_crc, "CRC mismatch: stream is corrupt");
    }

    std::size_t at = kMagicSize + 1;
    const auto n = read_u64le(bytes, at);
    at += 8;
    const auto length = read_u32le(bytes, at);
    at += 4;
    const auto lambda = read_u32le(bytes, at);
    at += 4;
    const std::uint32_t id_bits = bytes[at++];
    const std::uint32_t weight_bits = bytes[at++];
    if (n == 0 || length == 0 || lambda == 0 || lambda > length) {
        throw format_error(format_error::code::bad_header,
                           "inconsistent header: n=" + std::to_string(n) +
                               " length=" + std::to_string(length) +
                               " lambda=" + std::to_string(lambda));
    }
    if (id_bits != std::max<std::uint32_t>(1, ceil_log2(n)) ||
        weight_bits != std::max<std::uint32_t>(1, ceil_log2(lambda))) {
        throw format_error(format_error::code::bad_header,
                           "declared field widths do not match n and lambda");
    }
    // The permutation plus at least one payload byte must fit between the
    // header and the CRC trailer; phrased to avoid overflow on huge n.
    const std::uint64_t between = bytes.size() - kHeaderSize - kTrailerSize;
    if (n > (between - 1) / 8) {
        throw format_error(format_error::code::truncated,
                           "graph stream too short for its permutation table");
    }
    const std::size_t perm_end = kHeaderSize + 8 * std::size_t(n);

    std::vector<std::uint64_t> input_by_rank(n);
    std::vector<bool> seen(n, false);
    for (std::uint64_t r = 0; r < n; ++r) {
        const auto idx = read_u64le(bytes, at);
        at += 8;
        if (idx >= n || seen[idx]) {
            throw format_error(format_error::code::bad_permutation,
                               "permutation entry " + std::to_string(idx) +
                                   " at rank " + std::to_string(r + 1) +
                                   (idx >= n ? " is out of range" : " repeats"));
        }
        seen[idx] = true;
        input_by_rank[r] = idx;
    }

    BitReader reader(bytes, perm_end * 8, bytes.size() - kTrailerSize);
    const auto cbits = count_field_bits(lambda);
    const std::uint64_t max_pieces = 2 * std::uint64_t(lambda) - 1;
    std::vector<std::uint64_t> counts(n);
    for (std::uint64_t r = 0; r < n; ++r) {
        counts[r] = reader.get(cbits);
        if (counts[r] > max_pieces) {
            throw format_error(format_error::code::bad_count,
                               "row " + std::to_string(r + 1) + " declares " +
                                   std::to_string(counts[r]) + " pieces, above the 2*lambda-1 bound");
        }
    }

    const std::uint32_t max_weight = std::min(lambda, length - 1);
    std::vector<AdjacencyRow> rows(n);
    for (std::uint64_t r = 0; r < n; ++r) {
        auto& pieces = rows[r].pieces;
        pieces.reserve(counts[r]);
        for (std::uint64_t k = 0; k < counts[r]; ++k) {
            WeightedInterval piece;
            piece.iv.lo = reader.get(id_bits) + 1;
            piece.iv.hi = reader.get(id_bits) + 1;
            piece.weight = weight_t(reader.get(weight_bits) + 1);
            const bool ordered = pieces.empty() || pieces.back().iv.hi < piece.iv.lo;
            if (piece.iv.lo > piece.iv.hi || piece.iv.hi > n || !ordered ||
                piece.weight > max_weight) {
                throw format_error(format_error::code::bad_piece,
                                   "row " + std::to_string(r + 1) + " piece " +
                                       std::to_string(k + 1) + " ([" +
                                       std::to_string(piece.iv.lo) + "," +
                                       std::to_string(piece.iv.hi) + "] w=" +
                                       std::to_string(piece.weight) +
                                       ") is out of range, out of order, or overlapping");
            }
            pieces.push_back(piece);
        }
    }

    // Only sub-byte zero padding may follow the last piece.
    if (reader.end_bit() - reader.bit_pos() >= 8 || !reader.rest_is_zero()) {
        throw format_error(format_error::code::bad_padding,
                           "unexpected data after the last adjacency row");
    }

    return CompactOverlapGraph(length, lambda, std::move(rows), std::move(input_by_rank));
}

void save_graph(const CompactOverlapGraph& graph, const std::filesystem::path& path) {
    const auto bytes = serialize(graph);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
    out.flush();
    if (!out) throw io_error("failed writing " + path.string());
}

CompactOverlapGraph load_graph(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path.string() + " for reading");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) throw io_error("failed reading " + path.string());
    return deserialize(bytes);
}

} // namespace ovg
