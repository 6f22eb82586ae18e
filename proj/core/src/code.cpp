#include "lrc/code.hpp"

#include <algorithm>
#include <string>

#include "lrc/rng.hpp"
#include "lrc/subsets.hpp"

namespace lrc {

Codeword::Codeword(const LinearCode& code, std::vector<std::uint64_t> symbols)
    : code_(&code), symbols_(std::move(symbols)), erased_(symbols_.size(), false) {
    if (symbols_.size() != code.n()) throw DimensionMismatch("codeword length != n");
    for (auto s : symbols_)
        if (s >= code.field().modulus()) throw DimensionMismatch("symbol out of field range");
}

std::uint64_t Codeword::symbol(std::size_t i) const {
    if (i >= symbols_.size()) throw IndexOutOfRange("symbol index " + std::to_string(i));
    if (erased_[i]) throw IndexOutOfRange("symbol " + std::to_string(i) + " is erased");
    return symbols_[i];
}

void Codeword::erase(std::size_t i) {
    if (i >= symbols_.size()) throw IndexOutOfRange("symbol index " + std::to_string(i));
    erased_[i] = true;
}

void Codeword::restore(std::size_t i, std::uint64_t value) {
    if (i >= symbols_.size()) throw IndexOutOfRange("symbol index " + std::to_string(i));
    symbols_[i] = value;
    erased_[i] = false;
}

LinearCode::LinearCode(Field field, FieldMatrix gen) : field_(field), gen_(std::move(gen)) {
    if (gen_.field() != field_) throw DimensionMismatch("generator field mismatch");
    if (gen_.rows() > gen_.cols()) throw DimensionMismatch("k > n");
    const std::size_t r = rank(gen_);
    if (r < gen_.rows()) throw RankDeficient(r, gen_.rows());
}

Codeword LinearCode::encode(const std::vector<std::uint64_t>& msg) const {
    if (msg.size() != k()) throw DimensionMismatch("message length != k");
    std::vector<std::uint64_t> symbols(n(), 0);
    for (std::size_t i = 0; i < n(); ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < k(); ++j) acc = field_.add(acc, field_.mul(msg[j] % field_.modulus(), gen_.at(j, i)));
        symbols[i] = acc;
    }
    return Codeword(*this, std::move(symbols));
}

std::size_t subset_rank(const LinearCode& code, const std::vector<std::size_t>& s) {
    for (auto i : s)
        if (i >= code.n()) throw IndexOutOfRange("coordinate " + std::to_string(i));
    if (s.empty()) return 0;
    return rank(code.gen().select_columns(s));
}

std::size_t min_distance_words(const LinearCode& code, std::uint64_t max_messages) {
    const std::uint64_t q = code.field().modulus();
    const std::size_t k = code.k();
    unsigned __int128 total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total *= q;
        if (total > max_messages)
            throw BudgetExceeded("q^k exceeds message budget " + std::to_string(max_messages));
    }
    const Field& f = code.field();
    std::vector<std::uint64_t> msg(k, 0);
    std::size_t best = code.n() + 1;
    while (true) {
        // odometer increment
        std::size_t pos = 0;
        while (pos < k && msg[pos] == q - 1) msg[pos++] = 0;
        if (pos == k) break;
        ++msg[pos];
        std::size_t weight = 0;
        for (std::size_t i = 0; i < code.n() && weight < best; ++i) {
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < k; ++j) acc = f.add(acc, f.mul(msg[j], code.gen().at(j, i)));
            if (acc != 0) ++weight;
        }
        best = std::min(best, weight);
        if (best == 1) break;  // cannot do better in a code without zero columns
    }
    return best;
}

std::size_t min_distance_rank(const LinearCode& code, std::uint64_t max_rank_tests) {
    const std::size_t n = code.n();
    const std::size_t k = code.k();
    std::uint64_t tests = 0;
    for (std::size_t s = n; s-- > 0;) {
        bool found = false;
        for_each_combination(n, s, [&](const std::vector<std::size_t>& idx) {
            if (++tests > max_rank_tests) throw BudgetExceeded("rank-test budget exceeded in min_distance_rank");
            if (subset_rank(code, idx) < k) {
                found = true;
                return false;
            }
            return true;
        });
        if (found) return n - s;
    }
    return n;  // empty set has rank 0 < k
}

namespace {

std::vector<std::size_t> sample_subset(SplitMix64& rng, std::size_t n, std::size_t m) {
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(m);
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace

DistanceCheckReport verify_distance_at_least(const LinearCode& code, std::size_t d_min, VerifyMode mode,
                                             std::uint64_t max_subsets) {
    if (d_min < 1) throw InvalidParams("d_min must be >= 1");
    const std::size_t n = code.n();
    const std::size_t k = code.k();
    if (d_min > n - k + 1) throw InvalidParams("d_min exceeds the Singleton bound n-k+1");
    const std::size_t m = n - d_min + 1;
    DistanceCheckReport report;
    if (mode.kind == VerifyMode::Kind::None) {
        report.exhaustive = false;
        return report;
    }
    if (mode.kind == VerifyMode::Kind::Exhaustive) {
        if (binomial_capped(n, m, max_subsets + 1) > max_subsets)
            throw BudgetExceeded("C(n, n-d_min+1) exceeds subset budget");
        report.exhaustive = true;
        for_each_combination(n, m, [&](const std::vector<std::size_t>& idx) {
            ++report.subsets_checked;
            if (subset_rank(code, idx) < k) {
                report.pass = false;
                report.witness = idx;
                return false;
            }
            return true;
        });
        return report;
    }
    SplitMix64 rng(mode.seed);
    for (std::uint64_t t = 0; t < mode.trials; ++t) {
        auto idx = sample_subset(rng, n, m);
        ++report.subsets_checked;
        if (subset_rank(code, idx) < k) {
            report.pass = false;
            report.witness = idx;
            return report;
        }
    }
    report.miss_bound = mode.trials ? 3.0 / static_cast<double>(mode.trials) : 1.0;
    return report;
}

std::vector<std::size_t> find_information_set(const LinearCode& code) {
    std::vector<std::size_t> chosen;
    std::size_t current = 0;
    for (std::size_t i = 0; i < code.n() && chosen.size() < code.k(); ++i) {
        chosen.push_back(i);
        const std::size_t r = subset_rank(code, chosen);
        if (r > current)
            current = r;
        else
            chosen.pop_back();
    }
    return chosen;
}

}  // namespace lrc
