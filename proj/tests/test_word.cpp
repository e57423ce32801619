#include <doctest.h>

#include "wreathlab/errors.hpp"
#include "wreathlab/word.hpp"

using namespace wreathlab;

TEST_CASE("words parse with case inverses and exponents") {
  const auto w = parse_word("x^3 Y a^-2", Alphabet::G);
  CHECK(w.to_string() == "xxxYAA");
  CHECK(w.length() == 6);
  CHECK(parse_word("", Alphabet::G).empty());
  CHECK(parse_word("x^0", Alphabet::K).empty());
  CHECK(parse_word("pQ", Alphabet::H).to_string() == "pQ");
}

TEST_CASE("inverse reverses and flips letters") {
  const auto w = parse_word("xpQY", Alphabet::H);
  CHECK(w.inverse().to_string() == "yqPX");
  CHECK(w.inverse().inverse() == w);
}

TEST_CASE("parse errors report a column") {
  CHECK_THROWS_AS(parse_word("xb", Alphabet::G), InputError);
  try {
    parse_word("xxq", Alphabet::G);
    FAIL("expected a parse error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("column 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_word("x^", Alphabet::K), InputError);
  CHECK_THROWS_AS(parse_word("a", Alphabet::H), InputError);
  CHECK_THROWS_AS(parse_word("p", Alphabet::K), InputError);
}

TEST_CASE("concatenation requires one alphabet") {
  auto g = parse_word("ax", Alphabet::G);
  g += parse_word("y", Alphabet::G);
  CHECK(g.to_string() == "axy");
  CHECK_THROWS_AS(g += parse_word("p", Alphabet::H), InputError);
}

TEST_CASE("append_power") {
  Word w(Alphabet::K);
  w.append_power('x', 2);
  w.append_power('y', -3);
  CHECK(w.to_string() == "xxYYY");
}
