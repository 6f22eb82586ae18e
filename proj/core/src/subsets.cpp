#include "lrc/subsets.hpp"

namespace lrc {

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t m, std::uint64_t cap) {
    if (m > n) return 0;
    if (m > n - m) m = n - m;
    unsigned __int128 res = 1;
    for (std::uint64_t i = 1; i <= m; ++i) {
        res = res * (n - m + i) / i;
        if (res > cap) return cap;
    }
    return static_cast<std::uint64_t>(res);
}

}  // namespace lrc
