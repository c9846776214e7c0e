#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cdlat {

// One syllable g_i^e of a word.  Generators are 0-based internally and
// 1-based in every serialized or printed form.
struct Syllable {
    std::uint32_t gen;
    std::uint32_t exp; // in [1, p_gen) for stored relation words

    bool operator==(const Syllable&) const = default;
};

// Left-to-right product of syllables.  The empty word is the identity.
using Word = std::vector<Syllable>;

// Input words may carry arbitrary integer exponents (negative included);
// they are normalized during collection.
struct SignedSyllable {
    std::uint32_t gen;
    std::int64_t exp;
};

using SignedWord = std::vector<SignedSyllable>;

inline SignedWord to_signed(const Word& w) {
    SignedWord s;
    s.reserve(w.size());
    for (const auto& y : w) s.push_back({y.gen, static_cast<std::int64_t>(y.exp)});
    return s;
}

} // namespace cdlat
