#include "lrc/bounds.hpp"

#include <string>

namespace lrc {

namespace {

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

std::uint64_t isqrt(std::uint64_t x) {
    std::uint64_t r = 0;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

}  // namespace

void check_locality_params(std::uint64_t k, std::uint64_t r, std::uint64_t delta) {
    if (r < 2) throw InvalidParams("r < 2 implies repetition");
    if (delta < 2) throw InvalidParams("delta < 2 means no locality");
    if (r > k) throw InvalidParams("r > k: whole-code repair sets make locality vacuous");
}

std::uint64_t mu(std::uint64_t k, std::uint64_t r, std::uint64_t delta) {
    check_locality_params(k, r, delta);
    const std::uint64_t num = (k - 1) * (delta - 1) + 1;
    const std::uint64_t den = (r - 1) * (delta - 1) + 1;
    const std::uint64_t ceil_form = ceil_div(num, den) - 1;
    const std::uint64_t floor_form = ((k - 1) * (delta - 1)) / den;
    if (ceil_form != floor_form) throw Error("mu ceiling/floor forms disagree");  // unreachable
    return ceil_form;
}

std::uint64_t bound_c_min_length(std::uint64_t k, std::uint64_t d, std::uint64_t r, std::uint64_t delta) {
    if (d < 1) throw InvalidParams("d must be >= 1");
    return d + k - 1 + mu(k, r, delta);
}

std::uint64_t bound_prakash_min_length(std::uint64_t k, std::uint64_t d, std::uint64_t r, std::uint64_t delta) {
    check_locality_params(k, r, delta);
    if (d < 1) throw InvalidParams("d must be >= 1");
    return d + k - 1 + (ceil_div(k, r) - 1) * (delta - 1);
}

std::uint64_t d_upper_c(std::uint64_t n, std::uint64_t k, std::uint64_t r, std::uint64_t delta) {
    const std::uint64_t m = mu(k, r, delta);
    if (n < k + m) throw InvalidParams("n below k+mu");
    return n - k + 1 - m;
}

std::uint64_t d_upper_prakash(std::uint64_t n, std::uint64_t k, std::uint64_t r, std::uint64_t delta) {
    check_locality_params(k, r, delta);
    const std::uint64_t t = (ceil_div(k, r) - 1) * (delta - 1);
    if (n < k + t) throw InvalidParams("n below k plus the locality term");
    return n - k + 1 - t;
}

std::uint64_t square_f(std::uint64_t x, std::uint64_t r) { return x * (r + 1) - (x * x) / 4; }

std::uint64_t mu_k_square(std::uint64_t k, std::uint64_t r) {
    if (r < 2) throw InvalidParams("r must be >= 2");
    if (k < r + 1 || k > r * r)
        throw InvalidParams("mu_k defined only for r+1 <= k <= r^2, got k=" + std::to_string(k));
    std::uint64_t best = 0;
    for (std::uint64_t x = 0; x <= 2 * r + 1; ++x)
        if (square_f(x, r) - x <= k - 1) best = x;
    return best;
}

bool lemma3_check(std::uint64_t k, std::uint64_t r, std::uint64_t delta) {
    const std::uint64_t m = mu(k, r, delta);
    const std::uint64_t lhs = k + m - ceil_div(k + m, r * (delta - 1) + 1);
    return lhs < r * (m + 1);
}

GapReport gap_report(std::uint64_t r) {
    if (r < 2) throw InvalidParams("r must be >= 2");
    GapReport g;
    g.r = r;
    g.k = r * r - r + 1;
    g.n = (r + 1) * (r + 1);
    g.mu_k = mu_k_square(g.k, r);
    const std::uint64_t root = isqrt(r - 1);
    g.mu_k_cap = 2 * (r - root) - 1;
    g.d_guarantee = g.n - g.k + 1 - g.mu_k;
    g.d_upper_prakash = g.n - g.k + 1 - 2 * (r - 1);  // delta = 3, ceil(k/r)-1 = r-1
    g.gap = g.d_guarantee - g.d_upper_prakash;
    g.gap_floor = 2 * (root - 1) + 1;
    return g;
}

BoundsReport bounds_report(std::uint64_t k, std::uint64_t r, std::uint64_t delta) {
    BoundsReport b;
    b.k = k;
    b.r = r;
    b.delta = delta;
    b.mu = mu(k, r, delta);
    b.prakash_term = (ceil_div(k, r) - 1) * (delta - 1);
    b.gap = b.prakash_term - b.mu;
    b.lemma3 = lemma3_check(k, r, delta);
    return b;
}

}  // namespace lrc
