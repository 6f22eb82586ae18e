#include <doctest.h>

#include "lrc/bounds.hpp"

using namespace lrc;

namespace {

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

}  // namespace

TEST_CASE("mu on the example parameters") {
    CHECK(mu(3, 2, 4) == 1);
    CHECK(mu(3, 2, 3) == 1);
    // delta = 2 collapses to the classical single-erasure form
    for (std::uint64_t r = 2; r <= 6; ++r)
        for (std::uint64_t k = r + 1; k <= 24; ++k) CHECK(mu(k, r, 2) == ceil_div(k, r) - 1);
}

TEST_CASE("parameter guard rails") {
    CHECK_THROWS_AS(mu(3, 1, 3), InvalidParams);
    CHECK_THROWS_AS(mu(3, 2, 1), InvalidParams);
    CHECK_THROWS_AS(mu(2, 3, 3), InvalidParams);  // r > k
    CHECK(mu(2, 2, 3) == 0);                      // r = k degenerates to MDS, no penalty
    CHECK_THROWS_AS(bound_c_min_length(3, 0, 2, 3), InvalidParams);
}

TEST_CASE("minimum-length bounds") {
    CHECK(bound_c_min_length(3, 4, 2, 4) == 7);
    CHECK(bound_c_min_length(3, 3, 2, 3) == 6);
    CHECK(bound_c_min_length(3, 1, 2, 2) == 4);
    CHECK(bound_prakash_min_length(3, 4, 2, 4) == 9);
    CHECK(bound_prakash_min_length(3, 3, 2, 3) == 7);
    // delta = 2 reduction with k = r*m
    CHECK(bound_prakash_min_length(6, 5, 3, 2) == 5 + 6 - 1 + 1);
}

TEST_CASE("mu_k for square codes") {
    CHECK(mu_k_square(3, 2) == 1);
    CHECK(mu_k_square(21, 5) == 5);
    // the low-k regime is always 1
    for (std::uint64_t r = 2; r <= 9; ++r)
        for (std::uint64_t k = r + 1; k <= 2 * r - 1; ++k) CHECK(mu_k_square(k, r) == 1);
    CHECK_THROWS_AS(mu_k_square(2, 2), InvalidParams);
    CHECK_THROWS_AS(mu_k_square(5, 2), InvalidParams);
}

TEST_CASE("f(x) - x is strictly increasing below the plateau") {
    // increment is r - floor((x+1)/2): positive up to x = 2r-2, zero after
    for (std::uint64_t r = 2; r <= 12; ++r) {
        for (std::uint64_t x = 0; x + 1 <= 2 * r - 1; ++x)
            CHECK(square_f(x + 1, r) - (x + 1) > square_f(x, r) - x);
        for (std::uint64_t x = 2 * r - 1; x < 2 * r + 1; ++x)
            CHECK(square_f(x + 1, r) - (x + 1) >= square_f(x, r) - x);
        // the plateau sits strictly above every admissible k-1
        CHECK(square_f(2 * r - 1, r) - (2 * r - 1) > r * r - 1);
    }
}

TEST_CASE("gap report") {
    const auto g5 = gap_report(5);
    CHECK(g5.k == 21);
    CHECK(g5.n == 36);
    CHECK(g5.mu_k == 5);
    CHECK(g5.mu_k_cap == 5);
    CHECK(g5.d_guarantee == 11);
    CHECK(g5.d_upper_prakash == 8);
    CHECK(g5.gap == 3);
    CHECK(g5.gap_floor == 3);

    const auto g2 = gap_report(2);
    CHECK(g2.k == 3);
    CHECK(g2.n == 9);
    CHECK(g2.d_guarantee == 6);
    CHECK(g2.d_upper_prakash == 5);
    CHECK(g2.gap >= 1);
    CHECK(g2.gap_floor == 1);

    CHECK(gap_report(10).gap_floor == 5);  // floor(sqrt(9)) = 3
}

TEST_CASE("lemma3 inequality") {
    CHECK(lemma3_check(3, 2, 4));
    CHECK(lemma3_check(3, 2, 3));
    for (std::uint64_t r = 2; r < 40; ++r)
        for (std::uint64_t k = r + 1; k <= 40; ++k)
            for (std::uint64_t delta = 2; delta <= 8; ++delta) CHECK(lemma3_check(k, r, delta));
}

TEST_CASE("mu properties over a sweep") {
    for (std::uint64_t r = 2; r <= 20; ++r) {
        for (std::uint64_t k = r + 1; k <= 60; ++k) {
            for (std::uint64_t delta = 2; delta <= 12; ++delta) {
                const auto m = mu(k, r, delta);  // internal two-forms cross-check
                // never worse than the punctured-subcode penalty
                CHECK(m <= (ceil_div(k, r) - 1) * (delta - 1));
                // monotone in k, antitone in r
                if (k > r + 1) CHECK(m >= mu(k - 1, r, delta));
                if (r > 2 && k > r) CHECK(m <= mu(k, r - 1, delta));
            }
        }
    }
}

TEST_CASE("square-code sandwich for delta = 3") {
    for (std::uint64_t r = 2; r <= 10; ++r)
        for (std::uint64_t k = r + 1; k <= r * r; ++k) {
            const auto mk = mu_k_square(k, r);
            CHECK(mu(k, r, 3) <= mk);
            CHECK(mk <= (ceil_div(k, r) - 1) * 2);
        }
}

TEST_CASE("bounds_report gap is nonnegative by construction") {
    for (std::uint64_t r = 2; r <= 8; ++r)
        for (std::uint64_t k = r + 1; k <= 30; ++k)
            for (std::uint64_t delta = 2; delta <= 6; ++delta) {
                const auto b = bounds_report(k, r, delta);
                CHECK(b.prakash_term >= b.mu);
                CHECK(b.gap == b.prakash_term - b.mu);
                CHECK(b.lemma3);
            }
}
