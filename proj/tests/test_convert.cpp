#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "dyck/convert.hpp"
#include "oracles.hpp"

using namespace dyck;

namespace {

MatrixBuilder feed(MatrixBuilder b, std::string_view text) {
  for (char c : text) b.push(c == 'x' ? Symbol::X : Symbol::D);
  return b;
}

DyckMatrix convert(std::string_view text) {
  return feed({}, text).finish();
}

}  // namespace

TEST_CASE("the window rule") {
  CHECK(check_window(1, 0) == Symbol::D);
  CHECK(check_window(0, 1) == Symbol::X);
  CHECK(!check_window(0, 0).has_value());
  CHECK(!check_window(1, 1).has_value());
}

TEST_CASE("word to matrix, including the intermediate rows") {
  MatrixBuilder b;
  for (char c : std::string("xxxDD")) b.push(c == 'x' ? Symbol::X : Symbol::D);
  CHECK(b.emitted_rows().empty());  // no valley yet

  b.push(Symbol::X);  // first valley
  CHECK(b.emitted_rows() == Grid{{1, 1, 1}});

  b.push(Symbol::D);
  b.push(Symbol::D);
  b.push(Symbol::X);  // second valley
  CHECK(b.emitted_rows() == Grid{{1, 1, 1, 0}, {1, 0, 0, 1}});

  b.push(Symbol::D);
  const DyckMatrix m = b.finish();
  CHECK(m.text() == "11100\n10010\n00001\n");
}

TEST_CASE("word to matrix, small cases") {
  CHECK(convert("xD").text() == "1\n");
  CHECK(convert("xDxD").text() == "10\n01\n");
  CHECK(convert("xxDxDD").text() == "110\n101\n");
  CHECK(convert("xxDD").text() == "11\n");
}

TEST_CASE("word to matrix shape invariants") {
  for (std::size_t n = 1; n <= 7; ++n)
    for (const DyckWord& w : enumerate_words(n)) {
      const DyckMatrix m = get_matrix(w);
      const PeakDecomposition d = decompose(w);
      REQUIRE(m.rows() == d.size());
      REQUIRE(m.cols() == w.semilength());

      // Row i holds the vertices shared with the previous cycle plus one
      // per x of slope i.
      std::size_t shared = 0;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        std::size_t ones = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) ones += m.at(i, j);
        REQUIRE(ones == shared + d.peaks[i].slope);
        shared = shared + d.peaks[i].slope - d.peaks[i].descent;
      }
    }
}

TEST_CASE("converter state tracks counts and shared vertices") {
  MatrixBuilder b;
  const std::string word = "xxxDDxDDxD";
  for (char c : word) {
    b.push(c == 'x' ? Symbol::X : Symbol::D);
    REQUIRE(b.state().x_count >= b.state().d_count);
  }
  CHECK(b.state().shared == 0);  // set at the last valley
  CHECK(b.state().x_count == b.state().d_count);
  CHECK(b.symbols_consumed() == 10);
}

TEST_CASE("word to matrix error paths") {
  SUBCASE("empty input") {
    MatrixBuilder b;
    CHECK_THROWS_AS(b.finish(), ParseError);
    CHECK_THROWS_AS(get_matrix(DyckWord{}), ParseError);
  }
  SUBCASE("descent over-runs mid-stream") {
    MatrixBuilder b = feed({}, "xD");
    try {
      b.push(Symbol::D);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.code() == Errc::prefix_violation);
      CHECK(e.position() == 3);
    }
  }
  SUBCASE("unbalanced at end of stream") {
    try {
      convert("xx");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.code() == Errc::unbalanced);
      CHECK(e.x_count() == 2);
      CHECK(e.d_count() == 0);
    }
    CHECK_THROWS_AS(convert("xDx"), ParseError);
  }
}

TEST_CASE("streaming conversion off an input stream") {
  SUBCASE("plain") {
    std::istringstream in("xxxDDxDDxD");
    CHECK(get_matrix(in).text() == "11100\n10010\n00001\n");
  }
  SUBCASE("a single trailing newline is fine") {
    std::istringstream in("xD\n");
    CHECK(get_matrix(in).text() == "1\n");
  }
  SUBCASE("a newline mid-stream is not") {
    std::istringstream in("xD\nxD");
    try {
      get_matrix(in);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.code() == Errc::invalid_char);
      CHECK(e.position() == 3);
    }
  }
  SUBCASE("alternative alphabet") {
    std::istringstream in("(())\n");
    CHECK(get_matrix(in, Alphabet{'(', ')'}).text() == "11\n");
  }
  SUBCASE("empty stream") {
    std::istringstream in("");
    CHECK_THROWS_AS(get_matrix(in), ParseError);
    std::istringstream nl("\n");
    CHECK_THROWS_AS(get_matrix(nl), ParseError);
  }
}

TEST_CASE("matrix to word") {
  CHECK(get_dyck_word(validate_matrix({{1, 1, 1, 0, 0},
                                       {1, 0, 0, 1, 0},
                                       {0, 0, 0, 0, 1}}))
            .str() == "xxxDDxDDxD");
  CHECK(get_dyck_word(validate_matrix({{1}})).str() == "xD");
  CHECK(get_dyck_word(validate_matrix({{1, 1, 0}, {1, 0, 1}})).str() ==
        "xxDxDD");
}

TEST_CASE("both roundtrips are identities at desk scale") {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<std::string> matrices;
    for (const DyckWord& w : enumerate_words(n)) {
      const DyckMatrix m = get_matrix(w);
      REQUIRE(get_dyck_word(m) == w);
      REQUIRE(get_matrix(get_dyck_word(m)) == m);
      matrices.insert(m.text());
    }
    REQUIRE(matrices.size() == enumerate_words(n).size());
  }
}

TEST_CASE("each window row is a valley: D's before x's, first row all x's") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const DyckWord& w : enumerate_words(n)) {
      const DyckMatrix m = get_matrix(w);
      const PaddedView p = padded_view(m);
      for (std::size_t i = 1; i < p.rows(); ++i) {
        bool seen_x = false;
        for (std::size_t j = 0; j < p.cols(); ++j) {
          const auto sym = check_window(p(i - 1, j), p(i, j));
          if (!sym) continue;
          if (*sym == Symbol::X) seen_x = true;
          if (*sym == Symbol::D) REQUIRE(!seen_x);  // no D after an x
          if (i == 1) REQUIRE(*sym == Symbol::X);
        }
      }
    }
}
