#ifndef LRC_CONSTRUCT_HPP
#define LRC_CONSTRUCT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrc/bounds.hpp"
#include "lrc/code.hpp"
#include "lrc/locality.hpp"

namespace lrc {

/// Index structure of the block construction: k blocks, each a head
/// followed by delta-1 groups of r coordinates. Block l occupies the
/// contiguous range [l*(r(delta-1)+1), (l+1)*(r(delta-1)+1)).
struct BlockLayout {
    std::uint64_t k = 0, r = 0, delta = 0;
    std::size_t n = 0;
    struct Block {
        std::size_t head = 0;
        std::vector<std::vector<std::size_t>> groups;
    };
    std::vector<Block> blocks;
};

BlockLayout theorem2_layout(std::uint64_t k, std::uint64_t r, std::uint64_t delta);

/// (r+1) x (r+1) grid, coordinate = row*(r+1)+col, 0-based.
struct GridLayout {
    std::uint64_t r = 0;
    std::size_t n = 0;
    std::size_t index(std::size_t row, std::size_t col) const { return row * (r + 1) + col; }
    std::vector<std::size_t> row_set(std::size_t row) const;
    std::vector<std::size_t> col_set(std::size_t col) const;
};

/// The binary [7,3,4] code whose columns are the points of the Fano plane.
LinearCode fano_code();

/// The binary [6,3,3] code (one point and three lines removed from the plane).
LinearCode code_633();

struct ConstructionReport {
    LinearCode code;
    std::string kind;
    std::optional<BlockLayout> block_layout;
    std::optional<GridLayout> grid_layout;
    bool parity_ok = false;
    bool rank_ok = false;
    std::size_t d_target = 0;
    DistanceCheckReport distance;
    unsigned retries_used = 0;
    std::uint64_t seed = 0;
    std::uint64_t q_threshold = 0;        // smallest q the existence argument covers
    bool field_below_threshold = false;   // success guarantee void, not an error
    std::string rng_id = "splitmix64";
};

/// Randomized construct-and-verify for the block construction. Samples the
/// free columns, forces the group parities, then verifies head rank and
/// distance >= n-k+1-mu in the requested mode, retrying with fresh
/// randomness from the same stream on failure.
ConstructionReport construct_theorem2(std::uint64_t k, std::uint64_t r, std::uint64_t delta, std::uint64_t q,
                                      std::uint64_t seed, VerifyMode verify, unsigned max_retries = 5,
                                      std::size_t extra_parity = 0);

/// Randomized construct-and-verify for the square code: zero-sum rows and
/// columns on an (r+1) x (r+1) grid, distance target n-k+1-mu_k.
ConstructionReport construct_square(std::uint64_t r, std::uint64_t k, std::uint64_t q, std::uint64_t seed,
                                    VerifyMode verify, unsigned max_retries = 5);

struct OptimalityReport {
    std::size_t d = 0;
    bool d_exact = false;
    LocalityClass claimed = LocalityClass::Information;
    LocalityClass found = LocalityClass::None;
    std::uint64_t bound = 0;  // d+k-1+mu
    bool optimal = false;
    bool budget_exceeded = false;
    DistanceCheckReport sampled_fallback;  // populated when the exact oracles are out of budget
};

/// Exact distance (both oracles when affordable) + locality classification
/// + equality check against the minimum-length bound.
OptimalityReport verify_optimality(const LinearCode& code, std::uint64_t k, std::uint64_t r, std::uint64_t delta,
                                   LocalityClass claimed);

}  // namespace lrc

#endif
