#pragma once

#include <array>
#include <cstdint>

namespace matalg::golden {

// Minimal strongly connected digraphs on n labeled vertices, n = 1..13.
// OEIS A130768, offset fixed so that n = 3 gives the five labeled graphs.
inline constexpr std::array<std::uint64_t, 13> kLabeledCounts{
    1, 1, 5, 58, 1069, 27816, 943669, 39757264, 2010923289,
    119153235520ULL, 8118839891161ULL, 627023347399296ULL, 54258093698028037ULL};

// Same, up to isomorphism, n = 1..12. OEIS A130756.
inline constexpr std::array<std::uint64_t, 12> kUnlabeledCounts{
    1, 1, 2, 5, 15, 63, 288, 1526, 8627, 52021, 328432, 2160415};

}  // namespace matalg::golden
