#pragma once

#include <bit>
#include <cstdint>

namespace ovg {

// ceil(log2(v)) for v >= 1; 0 for v <= 1.
constexpr std::uint32_t ceil_log2(std::uint64_t v) {
    return v <= 1 ? 0 : std::uint32_t(std::bit_width(v - 1));
}

} // namespace ovg
