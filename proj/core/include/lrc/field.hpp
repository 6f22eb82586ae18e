#ifndef LRC_FIELD_HPP
#define LRC_FIELD_HPP

#include <cstdint>

#include "lrc/errors.hpp"

namespace lrc {

/// Prime field GF(q). The modulus is checked for primality at construction
/// and capped below 2^61 so that products fit in 128-bit intermediates.
class Field {
  public:
    static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 61) - 1;

    explicit Field(std::uint64_t q);

    std::uint64_t modulus() const { return q_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= q_ ? s - q_ : s;
    }

    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + q_ - b; }

    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : q_ - a; }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % q_);
    }

    std::uint64_t inv(std::uint64_t a) const;

    std::uint64_t div(std::uint64_t a, std::uint64_t b) const { return mul(a, inv(b)); }

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

    friend bool operator==(const Field& a, const Field& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Field& a, const Field& b) { return a.q_ != b.q_; }

    /// Deterministic Miller-Rabin, valid for the whole supported range.
    static bool is_prime(std::uint64_t n);

  private:
    std::uint64_t q_;
};

}  // namespace lrc

#endif
