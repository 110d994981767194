#include "dyck/convert.hpp"

#include <istream>
#include <string>

namespace dyck {

void MatrixBuilder::push(Symbol s) {
  ++position_;
  if (s == Symbol::D) {
    ++state_.d_count;
    if (state_.d_count > state_.x_count)
      throw ParseError(Errc::prefix_violation,
                       "PrefixViolation at " + std::to_string(position_),
                       position_);
    state_.prev = Symbol::D;
  } else if (state_.prev == Symbol::X) {
    ++state_.x_count;
  } else {
    // A valley: the peak just closed becomes a row, and the new segment
    // opens with the shared vertices plus this x.
    emit_row();
    state_.shared = state_.x_count - state_.d_count;
    state_.x_count = state_.shared + 1;
    state_.d_count = 0;
    state_.prev = Symbol::X;
  }
}

void MatrixBuilder::emit_row() {
  std::vector<std::uint8_t> row;
  if (!rows_.empty()) {
    row = rows_.back();
    std::size_t kept = 0;
    for (auto& bit : row) {
      if (bit && kept < state_.shared)
        ++kept;
      else
        bit = 0;
    }
  }
  row.insert(row.end(), state_.x_count - state_.shared, std::uint8_t{1});
  const std::size_t width = row.size();
  for (auto& prev : rows_) prev.resize(width, 0);
  rows_.push_back(std::move(row));
}

DyckMatrix MatrixBuilder::finish() {
  if (finished_)
    throw std::logic_error("MatrixBuilder::finish called twice");
  finished_ = true;
  if (position_ == 0)
    throw ParseError(Errc::empty_word, "EmptyWord: empty input stream");
  if (state_.x_count != state_.d_count)
    throw ParseError(Errc::unbalanced,
                     "Unbalanced: " + std::to_string(state_.x_count) +
                         " x's, " + std::to_string(state_.d_count) +
                         " D's in final segment",
                     0, state_.x_count, state_.d_count);
  emit_row();
  return validate_matrix(rows_);
}

DyckMatrix get_matrix(const DyckWord& word) {
  MatrixBuilder builder;
  for (std::size_t i = 0; i < word.size(); ++i) builder.push(word.symbol(i));
  return builder.finish();
}

DyckMatrix get_matrix(std::istream& in, const Alphabet& alphabet) {
  MatrixBuilder builder;
  std::size_t position = 0;
  for (int raw = in.get(); raw != std::char_traits<char>::eof();
       raw = in.get()) {
    ++position;
    const char ch = static_cast<char>(raw);
    if (ch == '\n' && in.peek() == std::char_traits<char>::eof()) break;
    auto sym = alphabet.to_symbol(ch);
    if (!sym)
      throw ParseError(Errc::invalid_char,
                       "InvalidChar at " + std::to_string(position), position);
    builder.push(*sym);
  }
  return builder.finish();
}

DyckWord get_dyck_word(const DyckMatrix& m) {
  const PaddedView p = padded_view(m);
  std::string out;
  out.reserve(2 * m.cols());
  for (std::size_t i = 1; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (auto sym = check_window(p(i - 1, j), p(i, j)))
        out.push_back(to_char(*sym));
  return parse_word(out);
}

}  // namespace dyck
