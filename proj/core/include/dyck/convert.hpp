#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>

#include "dyck/error.hpp"
#include "dyck/matrix.hpp"
#include "dyck/word.hpp"

namespace dyck {

/// Running state of the streaming word-to-matrix conversion.
///  - x_count: x's seen in the current segment (including carried-over
///    shared vertices);
///  - d_count: D's seen in the current descent;
///  - shared:  vertices the cycle just emitted shares with the next one;
///  - prev:    last symbol read.
/// At every point x_count >= d_count; at each row emission
/// shared == x_count - d_count and 0 <= shared < x_count.
struct ConverterState {
  std::size_t x_count = 0;
  std::size_t d_count = 0;
  std::size_t shared = 0;
  Symbol prev = Symbol::X;
};

/// Streaming word-to-matrix converter. Feed symbols one at a time; each
/// symbol is consumed exactly once and never re-read. A new row is
/// emitted at every valley (an x following a D) and once at end of
/// input; existing rows grow with 0's as the matrix widens, so only the
/// final matrix is canonical.
///
/// Row emission, given the previous row, the shared count s and the
/// segment count X:
///   1. copy the previous row, keeping its first s 1's, clearing the
///      rest (the first row starts from an empty row);
///   2. append X - s 1's.
/// The new row carries exactly X 1's.
class MatrixBuilder {
 public:
  /// Throws ParseError(prefix_violation) when D's outnumber x's; the
  /// position is the 1-based index of the offending symbol.
  void push(Symbol s);

  /// Emits the final row and validates. Throws ParseError(empty_word) if
  /// nothing was pushed, ParseError(unbalanced) if the counts differ.
  /// The builder is spent afterwards.
  DyckMatrix finish();

  const ConverterState& state() const noexcept { return state_; }

  /// Rows emitted so far, already padded to the current width.
  const Grid& emitted_rows() const noexcept { return rows_; }

  std::size_t symbols_consumed() const noexcept { return position_; }

 private:
  void emit_row();

  ConverterState state_;
  Grid rows_;
  std::size_t position_ = 0;
  bool finished_ = false;
};

/// Converts a word to its Dyck matrix. Row i holds one 1 per vertex of
/// cycle i; the column count equals the semilength, the row count the
/// number of peaks. Throws ParseError(empty_word) on the empty word.
DyckMatrix get_matrix(const DyckWord& word);

/// Streaming variant: reads characters off `in` until end of stream,
/// mapping them through `alphabet`. A single trailing newline is
/// accepted; any other unmapped byte raises invalid_char with its
/// 1-based position. Never seeks, never buffers past the current
/// character; memory stays proportional to the matrix.
DyckMatrix get_matrix(std::istream& in, const Alphabet& alphabet = {});

/// The 2x1 vertical scanning window: (1,0) emits D, (0,1) emits x,
/// (0,0) and (1,1) emit nothing.
constexpr std::optional<Symbol> check_window(bool above, bool below) noexcept {
  if (above && !below) return Symbol::D;
  if (!above && below) return Symbol::X;
  return std::nullopt;
}

/// Converts a Dyck matrix back to its word by scanning the padded view
/// row pair by row pair, left to right, concatenating the window
/// outputs. Only validated matrices can be scanned; there is no raw-grid
/// entry point.
DyckWord get_dyck_word(const DyckMatrix& m);

}  // namespace dyck
