#ifndef LRC_RNG_HPP
#define LRC_RNG_HPP

#include <cstdint>

namespace lrc {

/// Seedable splitmix64 stream. The generator is fixed by name in every
/// construction report so runs are reproducible across implementations.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw in [0, bound) via rejection, bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    static constexpr const char* name() { return "splitmix64"; }

  private:
    std::uint64_t state_;
};

}  // namespace lrc

#endif
