#ifndef LRC_MATRIX_HPP
#define LRC_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lrc/field.hpp"

namespace lrc {

/// Dense row-major matrix over a prime field. Immutable after construction
/// apart from set(), which is only used while building.
class FieldMatrix {
  public:
    FieldMatrix(Field field, std::size_t rows, std::size_t cols);
    FieldMatrix(Field field, std::size_t rows, std::size_t cols, std::vector<std::uint64_t> entries);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint64_t at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint64_t v) { entries_[r * cols_ + c] = v % field_.modulus(); }

    std::vector<std::uint64_t> column(std::size_t c) const;
    std::vector<std::uint64_t> row(std::size_t r) const;

    /// Submatrix of the given columns, in the given order.
    FieldMatrix select_columns(std::span<const std::size_t> cols) const;

    FieldMatrix transpose() const;

    friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

  private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint64_t> entries_;
};

/// Exact Gaussian elimination rank, first-nonzero pivoting.
std::size_t rank(const FieldMatrix& m);

/// One solution lambda of basis_cols * lambda = v (free variables zero),
/// or nullopt when v is outside the column span.
std::optional<std::vector<std::uint64_t>> express_in_span(const std::vector<std::uint64_t>& v,
                                                          const FieldMatrix& basis_cols);

}  // namespace lrc

#endif
