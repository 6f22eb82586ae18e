#ifndef LRC_LOCALITY_HPP
#define LRC_LOCALITY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "lrc/code.hpp"

namespace lrc {

/// delta-1 pairwise-disjoint repair sets for one coordinate, with the
/// reconstruction coefficients frozen in at certification time so repair
/// is a plain dot product.
struct RepairCertificate {
    std::size_t coordinate = 0;
    std::size_t r = 0;
    std::size_t delta = 0;
    std::vector<std::vector<std::size_t>> repair_sets;          // delta-1 disjoint sets, |set| <= r
    std::vector<std::vector<std::uint64_t>> coefficients;       // per set, g_i = sum lambda_j g_j
};

enum class LocalityClass { None, Information, AllSymbol };

struct LocalityProfile {
    LocalityClass classification = LocalityClass::None;
    std::vector<std::optional<RepairCertificate>> certificates;  // one slot per coordinate
    std::vector<std::size_t> information_set;  // witness when classification >= Information
};

struct ErasurePattern {
    std::vector<std::size_t> erased;
};

/// Table-style repair metrics, as exact fractions of the original data B.
struct RepairMetrics {
    std::size_t storage_num = 1, storage_den = 1;  // per-node storage, B/k
    std::size_t repair_locality = 0;
    std::size_t local_repair_tolerance = 0;  // delta-1
    std::size_t bandwidth_num = 0, bandwidth_den = 1;
};

struct RepairOutcome {
    bool ok = false;
    std::uint64_t value = 0;
    std::size_t used_set = 0;      // index into cert.repair_sets when ok
    std::size_t symbols_read = 0;  // |used set|
};

/// All inclusion-minimal S subset of [n]\{i} with |S| <= r and g_i in span(S),
/// in lexicographic order. Throws BudgetExceeded past the subset budget.
std::vector<std::vector<std::size_t>> candidate_repair_sets(const LinearCode& code, std::size_t i, std::size_t r,
                                                            std::uint64_t max_subsets = 10'000'000);

/// Exact backtracking packing of delta-1 pairwise-disjoint candidates,
/// smallest candidates first; nullopt when no packing exists.
std::optional<RepairCertificate> certify_locality(const LinearCode& code, std::size_t i, std::size_t r,
                                                  std::size_t delta, std::uint64_t max_subsets = 10'000'000);

LocalityProfile locality_profile(const LinearCode& code, std::size_t r, std::size_t delta,
                                 std::uint64_t max_subsets = 10'000'000);

/// Re-checks every certificate invariant against the code (disjointness,
/// sizes, exact reconstruction). Used on loaded certificates too.
bool verify_certificate(const LinearCode& code, const RepairCertificate& cert);

/// Repairs erased symbol i using the first repair set untouched by erasures.
RepairOutcome local_repair(const Codeword& word, std::size_t i, const RepairCertificate& cert);

RepairMetrics repair_metrics(const LinearCode& code, const LocalityProfile& profile);

}  // namespace lrc

#endif
