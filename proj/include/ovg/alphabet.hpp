#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace ovg {

// Ordered symbol set. The position of a symbol in the set defines the
// lexicographic order used everywhere (sorting, column search, trie children).
class Alphabet {
  public:
    static Alphabet dna() { return from_symbols("ACGT"); }

    // Printable ASCII (0x21..0x7e) in byte order.
    static Alphabet ascii();

    // Symbols in the given order; duplicates are rejected.
    static Alphabet from_symbols(std::string_view symbols);

    // Position of c in the symbol order, or -1 if c is not in the alphabet.
    int rank(char c) const { return rank_[static_cast<unsigned char>(c)]; }

    bool contains(char c) const { return rank(c) >= 0; }
    std::size_t size() const { return symbols_.size(); }
    char symbol(std::size_t r) const { return symbols_[r]; }
    std::string_view symbols() const { return symbols_; }

    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        return a.symbols_ == b.symbols_;
    }

  private:
    Alphabet() { rank_.fill(-1); }

    std::string symbols_;
    std::array<std::int16_t, 256> rank_{};
};

} // namespace ovg
