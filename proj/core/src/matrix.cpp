#include "dyck/matrix.hpp"

#include <string>

namespace dyck {

namespace {

std::string pos(std::size_t row, std::size_t col) {
  return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

// Last 1-column of a row, or cols if the row is all zero.
std::size_t last_one(const Grid& g, std::size_t i) {
  const std::size_t k = g[i].size();
  for (std::size_t j = k; j-- > 0;)
    if (g[i][j]) return j;
  return k;
}

[[noreturn]] void fail_m2(std::size_t i, M2Clause clause,
                          const std::string& what) {
  // Transition indices in diagnostics are 1-based.
  throw MatrixError(Errc::m2_violation,
                    "M2Violation at transition " + std::to_string(i + 1) +
                        " (" + std::string(m2_clause_name(clause)) + ": " +
                        what + ")",
                    0, 0, i + 1, clause);
}

}  // namespace

DyckMatrix validate_matrix(const Grid& raw) {
  if (raw.empty() || raw[0].empty())
    throw MatrixError(Errc::not_rectangular, "NotRectangular: empty grid");
  const std::size_t n = raw.size();
  const std::size_t k = raw[0].size();
  for (std::size_t i = 0; i < n; ++i)
    if (raw[i].size() != k)
      throw MatrixError(Errc::not_rectangular,
                        "NotRectangular: row " + std::to_string(i + 1) +
                            " has " + std::to_string(raw[i].size()) +
                            " entries, expected " + std::to_string(k),
                        i + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (raw[i][j] > 1)
        throw MatrixError(Errc::not_binary,
                          "NotBinary at " + pos(i + 1, j + 1), i + 1, j + 1);

  // M1: the first row is a non-empty prefix block of 1's.
  if (!raw[0][0])
    throw MatrixError(Errc::m1_violation,
                      "M1Violation: first row does not start with 1");
  {
    std::size_t h = 0;
    while (h < k && raw[0][h]) ++h;
    for (std::size_t j = h; j < k; ++j)
      if (raw[0][j])
        throw MatrixError(Errc::m1_violation,
                          "M1Violation: first row is not a 1-block prefix "
                          "(stray 1 in column " +
                              std::to_string(j + 1) + ")");
  }

  // M2 per transition, clauses checked in fixed order.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto& cur = raw[i];
    const auto& nxt = raw[i + 1];

    const std::size_t b = last_one(raw, i);
    if (b == k) fail_m2(i, M2Clause::exists, "row has no 1");
    const std::size_t c = last_one(raw, i + 1);
    if (c == k) fail_m2(i, M2Clause::exists, "next row has no 1");

    std::size_t a = k;
    for (std::size_t j = 0; j < k; ++j)
      if (cur[j] && !nxt[j]) {
        a = j;
        break;
      }
    if (a == k) fail_m2(i, M2Clause::exists, "no column is 1 above 0");
    if (!(b < c)) fail_m2(i, M2Clause::exists, "b < c fails");

    for (std::size_t j = 0; j < a; ++j)
      if (nxt[j] != cur[j])
        fail_m2(i, M2Clause::copy,
                "column " + std::to_string(j + 1) + " not copied");
    for (std::size_t j = a; j <= b; ++j)
      if (nxt[j])
        fail_m2(i, M2Clause::zero_mid,
                "column " + std::to_string(j + 1) + " not 0");
    for (std::size_t j = b + 1; j <= c; ++j)
      if (!nxt[j])
        fail_m2(i, M2Clause::one_block,
                "column " + std::to_string(j + 1) + " not 1");
    for (std::size_t j = c + 1; j < k; ++j)
      if (nxt[j])
        fail_m2(i, M2Clause::zero_tail,
                "column " + std::to_string(j + 1) + " not 0");
  }

  std::vector<std::uint8_t> bits;
  bits.reserve(n * k);
  for (const auto& row : raw) bits.insert(bits.end(), row.begin(), row.end());
  return DyckMatrix(n, k, std::move(bits));
}

DyckMatrix parse_matrix_text(std::string_view text) {
  // Drop one final newline; what remains must be non-blank lines.
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);

  Grid grid;
  std::size_t line_start = 0;
  std::size_t row = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    ++row;

    std::vector<std::uint8_t> bits;
    bool expect_digit = true;
    for (std::size_t j = 0; j < line.size(); ++j) {
      const char ch = line[j];
      if (ch == '0' || ch == '1') {
        bits.push_back(static_cast<std::uint8_t>(ch - '0'));
        expect_digit = false;
      } else if (ch == ' ' && !expect_digit) {
        expect_digit = true;  // a single space, a digit must follow
      } else {
        throw MatrixError(Errc::not_binary, "NotBinary at " + pos(row, j + 1),
                          row, j + 1);
      }
    }
    if (bits.empty() || expect_digit)
      throw MatrixError(Errc::not_rectangular,
                        "NotRectangular: malformed row " + std::to_string(row),
                        row);
    grid.push_back(std::move(bits));

    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }
  return validate_matrix(grid);
}

std::string DyckMatrix::text() const {
  std::string out;
  out.reserve(rows_ * (cols_ + 1));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j)
      out.push_back(at(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

RowTransition row_transition(const DyckMatrix& m, std::size_t i) {
  if (i + 1 >= m.rows())
    throw Error(Errc::out_of_range,
                "OutOfRange: transition " + std::to_string(i) + " of " +
                    std::to_string(m.rows()) + " rows");

  RowTransition t;
  t.row = i;
  // Validation guarantees all three indices exist.
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (m.at(i, j) && !m.at(i + 1, j)) {
      t.a = j;
      break;
    }
  }
  for (std::size_t j = m.cols(); j-- > 0;)
    if (m.at(i, j)) {
      t.b = j;
      break;
    }
  for (std::size_t j = m.cols(); j-- > 0;)
    if (m.at(i + 1, j)) {
      t.c = j;
      break;
    }
  return t;
}

bool column_structure_check(const DyckMatrix& m) {
  const PaddedView p = padded_view(m);
  for (std::size_t j = 0; j < p.cols(); ++j) {
    std::size_t rises = 0;
    std::size_t falls = 0;
    for (std::size_t i = 1; i < p.rows(); ++i) {
      const bool above = p(i - 1, j);
      const bool below = p(i, j);
      if (!above && below) ++rises;
      if (above && !below) ++falls;
    }
    if (rises != 1 || falls != 1) return false;
  }
  return true;
}

}  // namespace dyck
