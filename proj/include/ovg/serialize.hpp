#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "ovg/overlap_graph.hpp"

namespace ovg {

// OVG1 stream, little-endian scalars, MSB-first bit-packed payload:
//   magic "OVG1" | version u8=1 | n u64 | l u32 | lambda u32 | id_bits u8 |
//   weight_bits u8 | input index by rank (n x u64) | per-row piece counts
//   (n fields of max(1, ceil(log2(2*lambda))) bits) | pieces as
//   (lo-1, hi-1, w-1) at (id_bits, id_bits, weight_bits) bits, rows
//   concatenated | zero padding to a byte boundary | crc32 of all prior
//   bytes (u32).
// deserialize(serialize(g)) == g, and equal graphs serialize identically.

std::vector<std::uint8_t> serialize(const CompactOverlapGraph& graph);

CompactOverlapGraph deserialize(std::span<const std::uint8_t> bytes);

void save_graph(const CompactOverlapGraph& graph, const std::filesystem::path& path);
CompactOverlapGraph load_graph(const std::filesystem::path& path);

// IEEE CRC-32 (reflected, 0xEDB88320), as used by the OVG1 trailer.
std::uint32_t crc32(std::span<const std::uint8_t> data);

} // namespace ovg
