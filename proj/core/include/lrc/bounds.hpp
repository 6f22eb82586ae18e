#ifndef LRC_BOUNDS_HPP
#define LRC_BOUNDS_HPP

#include <cstdint>
#include <vector>

#include "lrc/errors.hpp"

namespace lrc {

/// Parameter guard: 2 <= r < k and delta >= 2; r = 1 is repetition,
/// delta = 1 means no locality, and for r >= k an MDS code already wins.
void check_locality_params(std::uint64_t k, std::uint64_t r, std::uint64_t delta);

/// The length penalty ceil(((k-1)(delta-1)+1)/((r-1)(delta-1)+1)) - 1.
/// Cross-checked internally against the equivalent floor form.
std::uint64_t mu(std::uint64_t k, std::uint64_t r, std::uint64_t delta);

/// Minimum length d+k-1+mu for combinatorial (r,delta) locality.
std::uint64_t bound_c_min_length(std::uint64_t k, std::uint64_t d, std::uint64_t r, std::uint64_t delta);

/// Minimum length d+k-1+(ceil(k/r)-1)(delta-1) for punctured-subcode locality.
std::uint64_t bound_prakash_min_length(std::uint64_t k, std::uint64_t d, std::uint64_t r, std::uint64_t delta);

/// Distance upper bound n-k+1-mu.
std::uint64_t d_upper_c(std::uint64_t n, std::uint64_t k, std::uint64_t r, std::uint64_t delta);
std::uint64_t d_upper_prakash(std::uint64_t n, std::uint64_t k, std::uint64_t r, std::uint64_t delta);

/// Square-code overlap count f(x) = x(r+1) - floor(x^2/4), exact integers.
std::uint64_t square_f(std::uint64_t x, std::uint64_t r);

/// mu_k = max{x : f(x) - x <= k-1}, defined for r+1 <= k <= r^2.
std::uint64_t mu_k_square(std::uint64_t k, std::uint64_t r);

/// (1/r)(k+mu-ceil((k+mu)/(r(delta-1)+1))) < mu+1, in integer arithmetic.
bool lemma3_check(std::uint64_t k, std::uint64_t r, std::uint64_t delta);

/// Distance-gap summary for the high-rate square code k = r^2-r+1, delta = 3.
struct GapReport {
    std::uint64_t r = 0;
    std::uint64_t k = 0;            // r^2 - r + 1
    std::uint64_t n = 0;            // (r+1)^2
    std::uint64_t mu_k = 0;
    std::uint64_t mu_k_cap = 0;     // 2(r - floor(sqrt(r-1))) - 1
    std::uint64_t d_guarantee = 0;  // n-k+1-mu_k
    std::uint64_t d_upper_prakash = 0;
    std::uint64_t gap = 0;          // d_guarantee - d_upper_prakash
    std::uint64_t gap_floor = 0;    // 2(floor(sqrt(r-1)) - 1) + 1
};

GapReport gap_report(std::uint64_t r);

struct BoundsReport {
    std::uint64_t k = 0, r = 0, delta = 0;
    std::uint64_t mu = 0;
    std::uint64_t prakash_term = 0;  // (ceil(k/r)-1)(delta-1)
    std::uint64_t gap = 0;           // prakash_term - mu, independent of n
    bool lemma3 = false;
};

BoundsReport bounds_report(std::uint64_t k, std::uint64_t r, std::uint64_t delta);

}  // namespace lrc

#endif
