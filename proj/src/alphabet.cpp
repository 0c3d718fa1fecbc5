#include "ovg/alphabet.hpp"

#include "ovg/errors.hpp"

namespace ovg {

Alphabet Alphabet::ascii() {
    std::string symbols;
    for (int c = 0x21; c <= 0x7e; ++c) symbols.push_back(static_cast<char>(c));
    return from_symbols(symbols);
}

Alphabet Alphabet::from_symbols(std::string_view symbols) {
    if (symbols.empty()) throw validation_error("alphabet must contain at least one symbol");
    Alphabet a;
    a.symbols_.assign(symbols);
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        const auto c = static_cast<unsigned char>(symbols[i]);
        if (a.rank_[c] >= 0)
            throw validation_error(std::string("alphabet repeats symbol '") + symbols[i] + "'");
        a.rank_[c] = static_cast<std::int16_t>(i);
    }
    return a;
}

} // namespace ovg
