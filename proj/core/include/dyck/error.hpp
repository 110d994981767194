#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dyck {

/// Error categories raised by parsing, validation and conversion.
enum class Errc {
  invalid_char,      ///< character outside the active alphabet
  prefix_violation,  ///< a prefix holds more D's than x's
  unbalanced,        ///< x-count != D-count at end of input
  empty_word,        ///< operation requires a non-empty word
  not_rectangular,   ///< grid rows differ in length (or grid is empty)
  not_binary,        ///< grid entry outside {0,1}
  m1_violation,      ///< first row is not a non-empty 1-block prefix
  m2_violation,      ///< a row transition breaks M2 or one of M2.1-M2.4
  out_of_range,      ///< index outside the valid range
  not_in_family,     ///< digraph has no Dyck-matrix representation
};

/// Stable diagnostic name, e.g. "PrefixViolation".
std::string_view errc_name(Errc code);

/// Sub-clauses of condition M2, in the order the validator checks them.
enum class M2Clause {
  exists,     ///< M2: indices a <= b < c do not exist
  copy,       ///< M2.1: columns below a must copy the previous row
  zero_mid,   ///< M2.2: columns a..b must be 0
  one_block,  ///< M2.3: columns b+1..c must be 1
  zero_tail,  ///< M2.4: columns past c must be 0
};

/// Printable label: "M2", "M2.1", ..., "M2.4".
std::string_view m2_clause_name(M2Clause clause);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

/// Word-level failure. Positions are 1-based character (or symbol) offsets;
/// 0 means not applicable.
class ParseError : public Error {
 public:
  ParseError(Errc code, const std::string& message, std::size_t position = 0,
             std::size_t x_count = 0, std::size_t d_count = 0)
      : Error(code, message),
        position_(position),
        x_count_(x_count),
        d_count_(d_count) {}

  std::size_t position() const noexcept { return position_; }
  std::size_t x_count() const noexcept { return x_count_; }
  std::size_t d_count() const noexcept { return d_count_; }

 private:
  std::size_t position_;
  std::size_t x_count_;
  std::size_t d_count_;
};

/// Matrix-level failure. Row/column/transition indices in diagnostics are
/// 1-based; 0 means not applicable. `transition() == i` refers to the pair
/// of rows (i, i+1).
class MatrixError : public Error {
 public:
  MatrixError(Errc code, const std::string& message, std::size_t row = 0,
              std::size_t col = 0, std::size_t transition = 0,
              std::optional<M2Clause> clause = std::nullopt)
      : Error(code, message),
        row_(row),
        col_(col),
        transition_(transition),
        clause_(clause) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }
  std::size_t transition() const noexcept { return transition_; }
  std::optional<M2Clause> clause() const noexcept { return clause_; }

 private:
  std::size_t row_;
  std::size_t col_;
  std::size_t transition_;
  std::optional<M2Clause> clause_;
};

}  // namespace dyck
