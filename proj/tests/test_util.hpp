#ifndef LRC_TEST_UTIL_HPP
#define LRC_TEST_UTIL_HPP

#include <optional>

#include "lrc/code.hpp"
#include "lrc/rng.hpp"

namespace lrc_test {

/// Random full-rank [n,k] code over GF(q); retries draws until rank k.
inline lrc::LinearCode random_code(lrc::SplitMix64& rng, std::uint64_t q, std::size_t k, std::size_t n) {
    const lrc::Field f(q);
    while (true) {
        lrc::FieldMatrix gen(f, k, n);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < n; ++c) gen.set(r, c, rng.below(q));
        if (lrc::rank(gen) == k) return lrc::LinearCode(f, gen);
    }
}

}  // namespace lrc_test

#endif
