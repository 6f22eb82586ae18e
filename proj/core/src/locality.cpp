#include "lrc/locality.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lrc/subsets.hpp"

namespace lrc {

namespace {

bool is_zero_column(const LinearCode& code, std::size_t i) {
    for (std::size_t r = 0; r < code.k(); ++r)
        if (code.gen().at(r, i) != 0) return false;
    return true;
}

bool spans_target(const LinearCode& code, std::size_t target, const std::vector<std::size_t>& s) {
    // g_target in span(s) iff adding the target column does not raise the rank.
    std::vector<std::size_t> with = s;
    with.push_back(target);
    return subset_rank(code, with) == subset_rank(code, s);
}

}  // namespace

std::vector<std::vector<std::size_t>> candidate_repair_sets(const LinearCode& code, std::size_t i, std::size_t r,
                                                            std::uint64_t max_subsets) {
    if (r < 1) throw InvalidParams("r must be >= 1");
    if (i >= code.n()) throw IndexOutOfRange("coordinate " + std::to_string(i));
    if (is_zero_column(code, i)) throw InvalidParams("zero generator column has no repair sets");

    const std::size_t n = code.n();
    std::uint64_t total = 0;
    for (std::size_t j = 1; j <= r && j <= n - 1; ++j)
        total += binomial_capped(n - 1, j, max_subsets + 1);
    if (total > max_subsets) throw BudgetExceeded("candidate repair-set search budget exceeded");

    std::vector<std::size_t> others;
    others.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j)
        if (j != i) others.push_back(j);

    std::vector<std::vector<std::size_t>> found;
    for (std::size_t size = 1; size <= r && size <= others.size(); ++size) {
        for_each_combination(others.size(), size, [&](const std::vector<std::size_t>& idx) {
            std::vector<std::size_t> s(size);
            for (std::size_t j = 0; j < size; ++j) s[j] = others[idx[j]];
            // a superset of a known spanning set is never minimal
            for (const auto& smaller : found)
                if (std::includes(s.begin(), s.end(), smaller.begin(), smaller.end())) return true;
            if (spans_target(code, i, s)) found.push_back(std::move(s));
            return true;
        });
    }
    std::sort(found.begin(), found.end());
    return found;
}

namespace {

bool pack_disjoint(const std::vector<std::vector<std::size_t>>& candidates, std::size_t need, std::size_t from,
                   std::vector<char>& used, std::vector<std::size_t>& chosen) {
    if (need == 0) return true;
    if (candidates.size() - from < need) return false;
    for (std::size_t c = from; c < candidates.size(); ++c) {
        const auto& s = candidates[c];
        bool clash = false;
        for (auto x : s)
            if (used[x]) {
                clash = true;
                break;
            }
        if (clash) continue;
        for (auto x : s) used[x] = 1;
        chosen.push_back(c);
        if (pack_disjoint(candidates, need - 1, c + 1, used, chosen)) return true;
        chosen.pop_back();
        for (auto x : s) used[x] = 0;
    }
    return false;
}

}  // namespace

std::optional<RepairCertificate> certify_locality(const LinearCode& code, std::size_t i, std::size_t r,
                                                  std::size_t delta, std::uint64_t max_subsets) {
    if (delta < 2) throw InvalidParams("delta must be >= 2");
    auto candidates = candidate_repair_sets(code, i, r, max_subsets);
    // smallest candidates first so the packing search fails or succeeds early
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::vector<char> used(code.n(), 0);
    std::vector<std::size_t> chosen;
    if (!pack_disjoint(candidates, delta - 1, 0, used, chosen)) return std::nullopt;

    RepairCertificate cert;
    cert.coordinate = i;
    cert.r = r;
    cert.delta = delta;
    const auto target = code.column(i);
    for (auto c : chosen) {
        const auto& s = candidates[c];
        auto lambda = express_in_span(target, code.gen().select_columns(s));
        cert.repair_sets.push_back(s);
        cert.coefficients.push_back(std::move(*lambda));
    }
    return cert;
}

LocalityProfile locality_profile(const LinearCode& code, std::size_t r, std::size_t delta,
                                 std::uint64_t max_subsets) {
    LocalityProfile profile;
    profile.certificates.resize(code.n());
    std::vector<std::size_t> certified;
    for (std::size_t i = 0; i < code.n(); ++i) {
        if (is_zero_column(code, i)) continue;
        profile.certificates[i] = certify_locality(code, i, r, delta, max_subsets);
        if (profile.certificates[i]) certified.push_back(i);
    }
    // greedy rank-k witness among certified coordinates
    std::vector<std::size_t> witness;
    std::size_t current = 0;
    for (auto i : certified) {
        witness.push_back(i);
        const std::size_t rk = subset_rank(code, witness);
        if (rk > current)
            current = rk;
        else
            witness.pop_back();
    }
    if (certified.size() == code.n()) {
        profile.classification = LocalityClass::AllSymbol;
        profile.information_set = witness;
    } else if (current == code.k()) {
        profile.classification = LocalityClass::Information;
        profile.information_set = witness;
    }
    return profile;
}

bool verify_certificate(const LinearCode& code, const RepairCertificate& cert) {
    if (cert.coordinate >= code.n()) return false;
    if (cert.delta < 2 || cert.repair_sets.size() != cert.delta - 1) return false;
    if (cert.coefficients.size() != cert.repair_sets.size()) return false;
    std::vector<char> seen(code.n(), 0);
    const Field& f = code.field();
    const auto target = code.column(cert.coordinate);
    for (std::size_t s = 0; s < cert.repair_sets.size(); ++s) {
        const auto& set = cert.repair_sets[s];
        const auto& lambda = cert.coefficients[s];
        if (set.empty() || set.size() > cert.r || lambda.size() != set.size()) return false;
        std::vector<std::uint64_t> acc(code.k(), 0);
        for (std::size_t j = 0; j < set.size(); ++j) {
            const std::size_t coord = set[j];
            if (coord >= code.n() || coord == cert.coordinate || seen[coord]) return false;
            seen[coord] = 1;
            for (std::size_t row = 0; row < code.k(); ++row)
                acc[row] = f.add(acc[row], f.mul(lambda[j] % f.modulus(), code.gen().at(row, coord)));
        }
        if (acc != target) return false;
    }
    return true;
}

RepairOutcome local_repair(const Codeword& word, std::size_t i, const RepairCertificate& cert) {
    if (cert.coordinate != i) throw CertificateMismatch("certificate is for a different coordinate");
    if (i >= word.length()) throw IndexOutOfRange("coordinate " + std::to_string(i));
    for (const auto& set : cert.repair_sets)
        for (auto j : set)
            if (j >= word.length()) throw CertificateMismatch("certificate references coordinates beyond n");
    if (!word.is_erased(i)) throw InvalidParams("target symbol is not erased");

    const Field& f = word.code().field();
    for (std::size_t s = 0; s < cert.repair_sets.size(); ++s) {
        const auto& set = cert.repair_sets[s];
        const bool blocked = std::any_of(set.begin(), set.end(), [&](std::size_t j) { return word.is_erased(j); });
        if (blocked) continue;
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < set.size(); ++j)
            acc = f.add(acc, f.mul(cert.coefficients[s][j] % f.modulus(), word.symbol(set[j])));
        return {true, acc, s, set.size()};
    }
    return {};  // every repair set intersects the erasure pattern
}

RepairMetrics repair_metrics(const LinearCode& code, const LocalityProfile& profile) {
    if (profile.classification == LocalityClass::None) throw NotLocal("code has no certified locality");
    RepairMetrics m;
    m.storage_num = 1;
    m.storage_den = code.k();
    std::size_t locality = 0;
    std::size_t delta = 0;
    for (const auto& cert : profile.certificates) {
        if (!cert) continue;
        delta = cert->delta;
        for (const auto& set : cert->repair_sets) locality = std::max(locality, set.size());
    }
    m.repair_locality = locality;
    m.local_repair_tolerance = delta - 1;
    const std::size_t g = std::gcd(locality, code.k());
    m.bandwidth_num = locality / g;
    m.bandwidth_den = code.k() / g;
    return m;
}

}  // namespace lrc
