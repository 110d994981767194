#include "dyck/word.hpp"

#include <stdexcept>
#include <string>

namespace dyck {

DyckWord parse_word(std::string_view text, const Alphabet& alphabet) {
  if (alphabet.up == alphabet.down)
    throw std::invalid_argument("alphabet characters must be distinct");

  std::string canonical;
  canonical.reserve(text.size());
  std::size_t x_count = 0;
  std::size_t d_count = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto sym = alphabet.to_symbol(text[i]);
    if (!sym)
      throw ParseError(Errc::invalid_char,
                       "InvalidChar at " + std::to_string(i + 1), i + 1);
    if (*sym == Symbol::X) {
      ++x_count;
    } else {
      ++d_count;
      if (d_count > x_count)
        throw ParseError(Errc::prefix_violation,
                         "PrefixViolation at " + std::to_string(i + 1), i + 1);
    }
    canonical.push_back(to_char(*sym));
  }
  if (x_count != d_count)
    throw ParseError(Errc::unbalanced,
                     "Unbalanced: " + std::to_string(x_count) + " x's, " +
                         std::to_string(d_count) + " D's",
                     0, x_count, d_count);
  return DyckWord(std::move(canonical));
}

DyckWord PeakDecomposition::to_word() const {
  std::string text;
  for (const Peak& p : peaks) {
    text.append(p.slope, to_char(Symbol::X));
    text.append(p.descent, to_char(Symbol::D));
  }
  return parse_word(text);
}

PeakDecomposition decompose(const DyckWord& word) {
  if (word.empty())
    throw ParseError(Errc::empty_word, "EmptyWord: nothing to decompose");

  PeakDecomposition result;
  std::size_t i = 0;
  const std::size_t len = word.size();
  while (i < len) {
    Peak p;
    while (i < len && word.symbol(i) == Symbol::X) ++p.slope, ++i;
    while (i < len && word.symbol(i) == Symbol::D) ++p.descent, ++i;
    result.peaks.push_back(p);
  }
  return result;
}

std::pair<std::size_t, std::size_t> LatticePath::endpoint() const noexcept {
  std::size_t east = 0;
  for (Step s : steps)
    if (s == Step::east) ++east;
  return {east, steps.size() - east};
}

LatticePath to_path(const DyckWord& word) {
  LatticePath path;
  path.steps.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i)
    path.steps.push_back(word.symbol(i) == Symbol::X ? Step::north
                                                     : Step::east);
  return path;
}

WordEnumerator::WordEnumerator(std::size_t semilength) : n_(semilength) {}

std::optional<DyckWord> WordEnumerator::next() {
  if (done_) return std::nullopt;

  if (!started_) {
    started_ = true;
    // Lexicographic minimum: all x's, then all D's.
    current_.assign(n_, to_char(Symbol::X));
    current_.append(n_, to_char(Symbol::D));
    return parse_word(current_);
  }

  // Find the rightmost x that can become a D (the prefix before it must
  // have positive height), then complete with the smallest valid suffix.
  std::size_t x_before = n_;
  std::size_t d_before = n_;
  for (std::size_t pos = current_.size(); pos-- > 0;) {
    if (current_[pos] == to_char(Symbol::X))
      --x_before;
    else
      --d_before;
    if (current_[pos] == to_char(Symbol::X) && x_before > d_before) {
      current_.resize(pos);
      current_.push_back(to_char(Symbol::D));
      current_.append(n_ - x_before, to_char(Symbol::X));
      current_.append(n_ - d_before - 1, to_char(Symbol::D));
      return parse_word(current_);
    }
  }
  done_ = true;
  return std::nullopt;
}

std::vector<DyckWord> enumerate_words(std::size_t semilength) {
  std::vector<DyckWord> words;
  WordEnumerator en(semilength);
  while (auto w = en.next()) words.push_back(std::move(*w));
  return words;
}

}  // namespace dyck
