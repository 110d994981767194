#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dyck/error.hpp"

namespace dyck {

/// Raw binary grid, row-major. Input type for validation.
using Grid = std::vector<std::vector<std::uint8_t>>;

class DyckMatrix;

/// Checks the Dyck-matrix conditions and wraps the grid on success.
///
/// A non-empty n-by-k binary matrix is a Dyck matrix when:
///  (M1) the first row is 1 on columns 1..h and 0 after, for some h >= 1;
///  (M2) for each pair of adjacent rows i, i+1 there are columns
///       a <= b < c where a is the smallest column that is 1 in row i and
///       0 in row i+1, b is the last 1-column of row i, c is the last
///       1-column of row i+1, and
///       (M2.1) row i+1 copies row i on columns before a,
///       (M2.2) row i+1 is 0 on columns a..b,
///       (M2.3) row i+1 is 1 on columns b+1..c,
///       (M2.4) row i+1 is 0 on columns after c.
///
/// Throws MatrixError: not_rectangular, not_binary(row, col),
/// m1_violation, m2_violation(transition, clause). The failing clause is
/// reported in the fixed order M2, M2.1, M2.2, M2.3, M2.4.
DyckMatrix validate_matrix(const Grid& raw);

/// Parses the text form: one row per line, characters '0'/'1' with
/// optional single-space separation ("11100" or "1 1 1 0 0"), an optional
/// final newline, no blank lines. Validates the result.
DyckMatrix parse_matrix_text(std::string_view text);

/// The indices (a, b, c) describing the transition between rows i and
/// i+1. All 0-based; a <= b < c < cols.
struct RowTransition {
  std::size_t row = 0;  // i, the upper row
  std::size_t a = 0;    // first column that is 1 in row i and 0 in row i+1
  std::size_t b = 0;    // last 1-column of row i
  std::size_t c = 0;    // last 1-column of row i+1
  bool operator==(const RowTransition&) const = default;
};

/// A validated Dyck matrix. Immutable; equality is bit-exact.
class DyckMatrix {
 public:
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  /// Entry at 0-based (i, j).
  bool at(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return bits_[i * cols_ + j] != 0;
  }

  /// Text form: one unspaced row per line, each newline-terminated.
  std::string text() const;

  bool operator==(const DyckMatrix&) const = default;

 private:
  DyckMatrix(std::size_t n, std::size_t k, std::vector<std::uint8_t> bits)
      : rows_(n), cols_(k), bits_(std::move(bits)) {}
  friend DyckMatrix validate_matrix(const Grid&);

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> bits_;  // row-major
};

/// The matrix framed by an implicit all-zero row above and below. Pure
/// index translation; rows() == m.rows() + 2. Keeps a pointer to the
/// matrix, which must outlive the view.
class PaddedView {
 public:
  explicit PaddedView(const DyckMatrix& m) : m_(&m) {}

  std::size_t rows() const noexcept { return m_->rows() + 2; }
  std::size_t cols() const noexcept { return m_->cols(); }

  bool operator()(std::size_t i, std::size_t j) const {
    return i >= 1 && i <= m_->rows() && m_->at(i - 1, j);
  }

 private:
  const DyckMatrix* m_;
};

inline PaddedView padded_view(const DyckMatrix& m) { return PaddedView(m); }

/// Transition indices for rows (i, i+1), 0-based; requires i < rows()-1.
/// Throws Error(out_of_range) otherwise.
RowTransition row_transition(const DyckMatrix& m, std::size_t i);

/// True iff every column of the padded view reads 0-block, 1-block,
/// 0-block with all three blocks non-empty (exactly one 0->1 and one
/// 1->0 switch per column). Holds for every Dyck matrix.
bool column_structure_check(const DyckMatrix& m);

}  // namespace dyck
