#ifndef LRC_CODE_HPP
#define LRC_CODE_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "lrc/matrix.hpp"

namespace lrc {

class LinearCode;

/// One codeword; symbols can be marked erased for repair simulation.
class Codeword {
  public:
    Codeword(const LinearCode& code, std::vector<std::uint64_t> symbols);

    std::size_t length() const { return symbols_.size(); }
    bool is_erased(std::size_t i) const { return erased_[i]; }
    std::uint64_t symbol(std::size_t i) const;
    void erase(std::size_t i);
    void restore(std::size_t i, std::uint64_t value);
    const LinearCode& code() const { return *code_; }

  private:
    const LinearCode* code_;
    std::vector<std::uint64_t> symbols_;
    std::vector<bool> erased_;
};

/// An [n,k] linear code over GF(q), held as its k x n generator matrix.
/// Coordinates are 0-based throughout the API; serialized files use the
/// 1-based convention (see io.hpp).
class LinearCode {
  public:
    LinearCode(Field field, FieldMatrix gen);  // throws RankDeficient

    const Field& field() const { return field_; }
    std::size_t n() const { return gen_.cols(); }
    std::size_t k() const { return gen_.rows(); }
    const FieldMatrix& gen() const { return gen_; }
    std::vector<std::uint64_t> column(std::size_t i) const { return gen_.column(i); }

    Codeword encode(const std::vector<std::uint64_t>& msg) const;

  private:
    Field field_;
    FieldMatrix gen_;
};

/// Rank of the generator columns indexed by s.
std::size_t subset_rank(const LinearCode& code, const std::vector<std::size_t>& s);

/// Minimum Hamming weight over all nonzero codewords, by enumeration.
/// Throws BudgetExceeded when q^k exceeds the message budget.
std::size_t min_distance_words(const LinearCode& code, std::uint64_t max_messages = std::uint64_t{1} << 24);

/// d = n - max{|N| : rank(N) < k}, by descending-size subset search with
/// early exit. Throws BudgetExceeded after max_rank_tests rank evaluations.
std::size_t min_distance_rank(const LinearCode& code, std::uint64_t max_rank_tests = 100'000'000);

struct VerifyMode {
    enum class Kind { Exhaustive, Sampled, None };
    Kind kind = Kind::Exhaustive;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;

    static VerifyMode exhaustive() { return {Kind::Exhaustive, 0, 0}; }
    static VerifyMode sampled(std::uint64_t trials, std::uint64_t seed) { return {Kind::Sampled, trials, seed}; }
    static VerifyMode none() { return {Kind::None, 0, 0}; }
};

struct DistanceCheckReport {
    bool pass = true;
    std::uint64_t subsets_checked = 0;
    bool exhaustive = false;  // true iff every subset of the target size was examined
    std::optional<std::vector<std::size_t>> witness;  // a rank-deficient subset, on failure
    double miss_bound = 0.0;  // rule-of-three estimate in sampled mode; not a proof
};

/// Checks that every size-(n-d_min+1) coordinate subset has rank k, which
/// certifies d >= d_min. Sampled mode checks `trials` uniform subsets.
DistanceCheckReport verify_distance_at_least(const LinearCode& code, std::size_t d_min, VerifyMode mode,
                                             std::uint64_t max_subsets = 10'000'000);

/// Lowest-index greedy information set; always exists since rank(gen) = k.
std::vector<std::size_t> find_information_set(const LinearCode& code);

}  // namespace lrc

#endif
