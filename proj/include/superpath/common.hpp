#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace superpath {

// Thrown when two algebra elements live over different generator sets.
struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when a value has the wrong parity (e.g. inverting an odd element).
struct parity_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when a requested arc already exists in the triangulation, in
// situations where this needs to be distinguished from other input errors.
struct arc_exists_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Sign picked up when concatenating two ascending anticommuting words and
// re-sorting the result into one ascending word.  `a` and `b` are bitmasks of
// generator indices; the caller guarantees (a & b) == 0.  The sign is
// (-1)^{#pairs (i in a, j in b) with i > j}.
inline int merge_sign(std::uint32_t a, std::uint32_t b) {
    int swaps = 0;
    std::uint32_t rest = b;
    while (rest != 0) {
        const int j = std::countr_zero(rest);
        swaps += std::popcount(a >> (j + 1));
        rest &= rest - 1;
    }
    return (swaps & 1) ? -1 : +1;
}

// Sign of the permutation sorting `word` ascending; returns 0 if the word has
// a repeated letter.  `word` holds generator indices in an arbitrary order.
template <typename Seq>
inline int sort_sign(const Seq& word) {
    int inversions = 0;
    const auto n = static_cast<int>(word.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (word[i] == word[j]) return 0;
            if (word[i] > word[j]) ++inversions;
        }
    }
    return (inversions & 1) ? -1 : +1;
}

}  // namespace superpath
