#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dyck/error.hpp"

namespace dyck {

/// The two letters of a Dyck word. The underlying values are the canonical
/// alphabet characters: x climbs, D descends.
enum class Symbol : char { X = 'x', D = 'D' };

constexpr char to_char(Symbol s) noexcept { return static_cast<char>(s); }

/// Maps an input alphabet (two distinct characters) onto {x, D}.
/// The canonical alphabet is {'x', 'D'}; all rendering uses it.
struct Alphabet {
  char up = 'x';
  char down = 'D';

  constexpr std::optional<Symbol> to_symbol(char c) const noexcept {
    if (c == up) return Symbol::X;
    if (c == down) return Symbol::D;
    return std::nullopt;
  }
};

/// A balanced sequence over {x, D}: every prefix has at least as many x's
/// as D's and the full word has equally many. The empty word is allowed.
/// Immutable after construction; construct via parse_word().
class DyckWord {
 public:
  DyckWord() = default;

  std::size_t size() const noexcept { return symbols_.size(); }
  std::size_t semilength() const noexcept { return symbols_.size() / 2; }
  bool empty() const noexcept { return symbols_.empty(); }

  Symbol symbol(std::size_t i) const { return static_cast<Symbol>(symbols_[i]); }

  /// Canonical rendering over {'x', 'D'}.
  std::string_view str() const noexcept { return symbols_; }

  bool operator==(const DyckWord&) const = default;
  auto operator<=>(const DyckWord&) const = default;

 private:
  explicit DyckWord(std::string symbols) : symbols_(std::move(symbols)) {}
  friend DyckWord parse_word(std::string_view, const Alphabet&);

  std::string symbols_;  // canonical characters, validated
};

/// Validates `text` against `alphabet` and returns the word.
///
/// Throws ParseError:
///  - invalid_char(position)       character outside the alphabet
///  - prefix_violation(position)   first position where D's outnumber x's
///  - unbalanced                   unequal totals at end of input
/// Positions are 1-based. The alphabet characters must be distinct
/// (std::invalid_argument otherwise).
DyckWord parse_word(std::string_view text, const Alphabet& alphabet = {});

/// One peak: a maximal run of x's (slope) followed by a maximal run of D's
/// (descent). Both lengths are >= 1.
struct Peak {
  std::size_t slope = 0;
  std::size_t descent = 0;
  bool operator==(const Peak&) const = default;
};

/// The unique factorization w = x^{u_1} D^{d_1} ... x^{u_n} D^{d_n}.
struct PeakDecomposition {
  std::vector<Peak> peaks;

  std::size_t size() const noexcept { return peaks.size(); }

  /// Reassembles the source word.
  DyckWord to_word() const;

  bool operator==(const PeakDecomposition&) const = default;
};

/// Splits a non-empty word into its peaks. Throws ParseError(empty_word)
/// on the empty word.
PeakDecomposition decompose(const DyckWord& word);

enum class Step : unsigned char { north, east };

/// The lattice-path view: x maps to a North step, D to an East step.
/// The path starts at the origin and never passes below the diagonal.
struct LatticePath {
  std::vector<Step> steps;

  /// (east, north) totals; equals (semilength, semilength).
  std::pair<std::size_t, std::size_t> endpoint() const noexcept;

  bool operator==(const LatticePath&) const = default;
};

LatticePath to_path(const DyckWord& word);

/// Streams every Dyck word of a fixed semilength exactly once, in
/// lexicographic order with x < D. Each enumerator is independent.
class WordEnumerator {
 public:
  explicit WordEnumerator(std::size_t semilength);

  /// Next word, or nullopt once exhausted.
  std::optional<DyckWord> next();

 private:
  std::size_t n_;
  std::string current_;
  bool started_ = false;
  bool done_ = false;
};

/// All Dyck words of semilength n, in enumeration order. The count is the
/// n-th Catalan number; keep n small.
std::vector<DyckWord> enumerate_words(std::size_t semilength);

}  // namespace dyck
