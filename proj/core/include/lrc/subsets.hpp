#ifndef LRC_SUBSETS_HPP
#define LRC_SUBSETS_HPP

#include <cstdint>
#include <vector>

namespace lrc {

/// C(n, m), saturating at cap (cap defaults to "never").
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t m, std::uint64_t cap = ~std::uint64_t{0});

/// Visits the m-subsets of {0..n-1} in lexicographic order. The visitor
/// returns false to stop early; the function returns false iff stopped.
template <typename F>
bool for_each_combination(std::size_t n, std::size_t m, F&& visit) {
    if (m > n) return true;
    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) idx[i] = i;
    while (true) {
        if (!visit(static_cast<const std::vector<std::size_t>&>(idx))) return false;
        // advance
        std::size_t i = m;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - m) {
                ++idx[i];
                for (std::size_t j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
                goto next;
            }
        }
        return true;
    next:;
    }
}

}  // namespace lrc

#endif
