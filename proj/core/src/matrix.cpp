#include "lrc/matrix.hpp"

#include <string>

namespace lrc {

FieldMatrix::FieldMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {
    if (rows < 1) throw DimensionMismatch("matrix needs at least one row");
}

FieldMatrix::FieldMatrix(Field field, std::size_t rows, std::size_t cols, std::vector<std::uint64_t> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows < 1) throw DimensionMismatch("matrix needs at least one row");
    if (entries_.size() != rows * cols)
        throw DimensionMismatch("entry count " + std::to_string(entries_.size()) + " != rows*cols");
    for (auto& e : entries_)
        if (e >= field_.modulus()) throw DimensionMismatch("entry out of field range");
}

std::vector<std::uint64_t> FieldMatrix::column(std::size_t c) const {
    if (c >= cols_) throw IndexOutOfRange("column index " + std::to_string(c));
    std::vector<std::uint64_t> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

std::vector<std::uint64_t> FieldMatrix::row(std::size_t r) const {
    if (r >= rows_) throw IndexOutOfRange("row index " + std::to_string(r));
    return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

FieldMatrix FieldMatrix::select_columns(std::span<const std::size_t> cols) const {
    FieldMatrix out(field_, rows_, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] >= cols_) throw IndexOutOfRange("column index " + std::to_string(cols[j]));
        for (std::size_t r = 0; r < rows_; ++r) out.set(r, j, at(r, cols[j]));
    }
    return out;
}

FieldMatrix FieldMatrix::transpose() const {
    FieldMatrix out(field_, cols_ == 0 ? 1 : cols_, rows_);
    if (cols_ == 0) return FieldMatrix(field_, 1, 0);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.set(c, r, at(r, c));
    return out;
}

namespace {

// Row-echelon elimination on a scratch copy; returns pivot count and leaves
// the echelon form in `a` (rows*cols, row-major). Pivot columns collected
// when `pivots` is non-null.
std::size_t eliminate(const Field& f, std::vector<std::uint64_t>& a, std::size_t rows, std::size_t cols,
                      std::vector<std::size_t>* pivots = nullptr) {
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        std::size_t pivot = pr;
        while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != pr)
            for (std::size_t j = c; j < cols; ++j) std::swap(a[pivot * cols + j], a[pr * cols + j]);
        const std::uint64_t inv = f.inv(a[pr * cols + c]);
        for (std::size_t j = c; j < cols; ++j) a[pr * cols + j] = f.mul(a[pr * cols + j], inv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pr || a[r * cols + c] == 0) continue;
            const std::uint64_t factor = a[r * cols + c];
            for (std::size_t j = c; j < cols; ++j)
                a[r * cols + j] = f.sub(a[r * cols + j], f.mul(factor, a[pr * cols + j]));
        }
        if (pivots) pivots->push_back(c);
        ++pr;
    }
    return pr;
}

}  // namespace

std::size_t rank(const FieldMatrix& m) {
    if (m.cols() == 0) return 0;
    std::vector<std::uint64_t> a(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) a[r * m.cols() + c] = m.at(r, c);
    return eliminate(m.field(), a, m.rows(), m.cols());
}

std::optional<std::vector<std::uint64_t>> express_in_span(const std::vector<std::uint64_t>& v,
                                                          const FieldMatrix& basis_cols) {
    if (v.size() != basis_cols.rows()) throw DimensionMismatch("vector length != basis row count");
    const Field& f = basis_cols.field();
    const std::size_t rows = basis_cols.rows();
    const std::size_t m = basis_cols.cols();
    const std::size_t cols = m + 1;
    std::vector<std::uint64_t> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < m; ++c) a[r * cols + c] = basis_cols.at(r, c);
        a[r * cols + m] = v[r] % f.modulus();
    }
    std::vector<std::size_t> pivots;
    eliminate(f, a, rows, cols, &pivots);
    // Inconsistent iff the augmented column became a pivot.
    if (!pivots.empty() && pivots.back() == m) return std::nullopt;
    std::vector<std::uint64_t> lambda(m, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) lambda[pivots[i]] = a[i * cols + m];
    return lambda;
}

}  // namespace lrc
