#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace rainbow {

// Unbiased draw from [0, bound) using rejection on the raw 64-bit stream.
// std::uniform_int_distribution is implementation-defined, so results would
// not be reproducible across standard libraries; this is.
inline std::uint64_t bounded_random(std::mt19937_64& rng, std::uint64_t bound) {
    std::uint64_t limit = -bound % bound;  // 2^64 mod bound
    for (;;) {
        std::uint64_t x = rng();
        if (x >= limit) return x % bound;
    }
}

template <class T>
void deterministic_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[bounded_random(rng, i)]);
}

} // namespace rainbow
