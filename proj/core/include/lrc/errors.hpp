#ifndef LRC_ERRORS_HPP
#define LRC_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lrc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrime : Error {
    explicit NotPrime(std::uint64_t q) : Error("not a prime modulus: " + std::to_string(q)), q(q) {}
    std::uint64_t q;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero in GF(q)") {}
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct RankDeficient : Error {
    RankDeficient(std::size_t found, std::size_t wanted)
        : Error("generator matrix rank " + std::to_string(found) + " < k = " + std::to_string(wanted)),
          rank_found(found) {}
    std::size_t rank_found;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

struct InvalidParams : Error {
    using Error::Error;
};

struct NotLocal : Error {
    using Error::Error;
};

struct CertificateMismatch : Error {
    using Error::Error;
};

struct ConstructionFailed : Error {
    explicit ConstructionFailed(unsigned retries)
        : Error("construction failed after " + std::to_string(retries) + " attempts"), retries(retries) {}
    unsigned retries;
};

}  // namespace lrc

#endif
