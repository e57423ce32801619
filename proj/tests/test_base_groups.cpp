#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wreathlab/base_groups.hpp"
#include "wreathlab/errors.hpp"

using namespace wreathlab;

namespace {

BaseElement kw(BaseGroupId id, const std::string& w) { return evaluate_base_word(id, parse_word(w, Alphabet::K)); }

std::vector<Letter> letters(const std::string& w) { return parse_word(w, Alphabet::K).letters(); }

}  // namespace

TEST_CASE("free reduction") {
  CHECK(fg_reduce(letters("xX")).is_identity());
  CHECK(fg_reduce(letters("xyY")).reduced() == "x");
  CHECK(fg_reduce(letters("xYyX")).is_identity());
  const auto once = fg_reduce(letters("xyYYyxX"));
  CHECK(fg_reduce(once.word().letters()) == once);
  CHECK_THROWS_AS(fg_reduce({Letter{'a', 1}}), InputError);
}

TEST_CASE("base multiplication examples") {
  const auto f2 = BaseGroupId::f2;
  CHECK(is_identity(base_multiply(kw(f2, "x"), kw(f2, "X"))));
  const auto x2 = std::get<LamplighterElement>(kw(BaseGroupId::zwrz, "xx"));
  CHECK(x2.lamps == std::map<std::int64_t, std::int64_t>{{1, 1}, {2, 1}});
  CHECK(x2.cursor == 2);
  const auto z2 = BaseGroupId::z2;
  CHECK(base_multiply(kw(z2, "x"), kw(z2, "y")) == base_multiply(kw(z2, "y"), kw(z2, "x")));
  CHECK_THROWS_AS(base_multiply(kw(f2, "x"), kw(z2, "x")), InputError);
}

TEST_CASE("base inverses") {
  CHECK(std::get<FreeGroupElement>(base_invert(kw(BaseGroupId::f2, "xy"))).reduced() == "YX");
  const auto xi = std::get<LamplighterElement>(base_invert(kw(BaseGroupId::zwrz, "x")));
  CHECK(xi.lamps == std::map<std::int64_t, std::int64_t>{{0, -1}});
  CHECK(xi.cursor == -1);
  CHECK(is_identity(base_multiply(kw(BaseGroupId::zwrz, "x"), BaseElement{xi})));
  const auto g = std::get<GridElement>(base_invert(BaseElement{GridElement{1, 2}}));
  CHECK(g.ex == -1);
  CHECK(g.ey == -2);
}

TEST_CASE("height") {
  for (auto id : {BaseGroupId::f2, BaseGroupId::zwrz, BaseGroupId::z2}) {
    CHECK(height(base_identity(id)) == 0);
    CHECK(height(kw(id, "x")) == 1);
    CHECK(height(kw(id, "xxY")) == 1);
  }
}

TEST_CASE("pebble set membership") {
  const auto f2 = BaseGroupId::f2;
  CHECK(in_pebble_set(kw(f2, "xx"), 3));
  CHECK_FALSE(in_pebble_set(kw(f2, "xxYY"), 2));
  CHECK_FALSE(in_pebble_set(kw(BaseGroupId::zwrz, "xxYY"), 2));
  CHECK(in_pebble_set(kw(BaseGroupId::zwrz, "x"), 2));
  CHECK_THROWS_AS(in_pebble_set(kw(BaseGroupId::z2, "x"), 1), UnsupportedError);
  CHECK_THROWS_AS(in_pebble_set(kw(f2, "x"), 0), InputError);
}

TEST_CASE("pebble sets agree with the prefix and lamp definitions") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 2000; ++t) {
    const auto w = oracle::random_word(rng, "xXyY", 12);
    const int n = 1 + static_cast<int>(rng() % 5);
    const auto f = oracle::walk_base("f2", w);
    bool expect = true;
    std::int64_t h = 0;
    for (char c : f.word) {
      h += (c == 'x' || c == 'y') ? 1 : -1;
      if (h >= n) expect = false;
    }
    CHECK(in_pebble_set(kw(BaseGroupId::f2, w), n) == expect);

    const auto z = oracle::walk_base("zwrz", w);
    bool zexpect = z.pos < n;
    for (const auto& [p, v] : z.lamps) zexpect = zexpect && p <= n - 1;
    CHECK(in_pebble_set(kw(BaseGroupId::zwrz, w), n) == zexpect);
  }
}

TEST_CASE("neighbours") {
  const auto n = base_neighbors(base_identity(BaseGroupId::f2));
  REQUIRE(n.size() == 4);
  std::set<std::string> words;
  for (const auto& [l, k] : n) words.insert(std::get<FreeGroupElement>(k).reduced());
  CHECK(words == std::set<std::string>{"x", "X", "y", "Y"});

  bool has_x = false;
  for (const auto& [l, k] : base_neighbors(base_identity(BaseGroupId::zwrz))) {
    const auto& e = std::get<LamplighterElement>(k);
    if (l == Letter{'x', 1}) {
      has_x = e.cursor == 1 && e.lamps == std::map<std::int64_t, std::int64_t>{{1, 1}};
    }
  }
  CHECK(has_x);

  std::set<std::pair<std::int64_t, std::int64_t>> cells;
  for (const auto& [l, k] : base_neighbors(base_identity(BaseGroupId::z2))) {
    cells.insert({std::get<GridElement>(k).ex, std::get<GridElement>(k).ey});
  }
  CHECK(cells == std::set<std::pair<std::int64_t, std::int64_t>>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
}

TEST_CASE("group laws hold on random triples") {
  std::mt19937_64 rng(5);
  for (auto id : {BaseGroupId::f2, BaseGroupId::zwrz, BaseGroupId::z2}) {
    for (int t = 0; t < 1000; ++t) {
      const auto g = kw(id, oracle::random_word(rng, "xXyY", 10));
      const auto h = kw(id, oracle::random_word(rng, "xXyY", 10));
      const auto w = kw(id, oracle::random_word(rng, "xXyY", 10));
      CHECK(base_multiply(base_multiply(g, h), w) == base_multiply(g, base_multiply(h, w)));
      CHECK(base_multiply(g, base_identity(id)) == g);
      CHECK(is_identity(base_multiply(g, base_invert(g))));
      CHECK(height(base_multiply(g, h)) == height(g) + height(h));
    }
  }
}

TEST_CASE("base evaluation matches an independent letter walk") {
  std::mt19937_64 rng(6);
  for (const std::string base : {"f2", "zwrz", "z2"}) {
    const auto id = parse_base_group(base);
    for (int t = 0; t < 500; ++t) {
      const auto w = oracle::random_word(rng, "xXyY", 16);
      CHECK(base_to_json(kw(id, w)) == oracle::k_json(base, oracle::walk_base(base, w)));
    }
  }
}

TEST_CASE("zwrz powers of x light lamps 1..i") {
  BaseElement k = base_identity(BaseGroupId::zwrz);
  for (int i = 0; i <= 50; ++i) {
    const auto& e = std::get<LamplighterElement>(k);
    CHECK(e.cursor == i);
    CHECK(e.lamps.size() == static_cast<std::size_t>(i));
    for (const auto& [p, v] : e.lamps) CHECK((v == 1 && p >= 1 && p <= i));
    k = base_step(k, {'x', 1});
  }
}

TEST_CASE("text and json forms round trip") {
  std::mt19937_64 rng(9);
  for (auto id : {BaseGroupId::f2, BaseGroupId::zwrz, BaseGroupId::z2}) {
    for (int t = 0; t < 200; ++t) {
      const auto k = kw(id, oracle::random_word(rng, "xXyY", 10));
      CHECK(base_from_json(id, base_to_json(k)) == k);
      CHECK(evaluate_base_word(id, base_word(k)) == k);
    }
  }
  CHECK(base_to_text(base_identity(BaseGroupId::f2)) == "e");
  CHECK(is_identity(base_from_json(BaseGroupId::f2, "e")));
  CHECK_THROWS_AS(base_from_json(BaseGroupId::z2, nlohmann::json::array({1})), InputError);
}

TEST_CASE("length lower bound never exceeds word length") {
  std::mt19937_64 rng(10);
  for (auto id : {BaseGroupId::f2, BaseGroupId::zwrz, BaseGroupId::z2}) {
    for (int t = 0; t < 500; ++t) {
      const auto w = oracle::random_word(rng, "xXyY", 10);
      CHECK(base_length_lower_bound(kw(id, w)) <= static_cast<std::int64_t>(w.size()));
    }
  }
  CHECK(base_length_lower_bound(kw(BaseGroupId::f2, "xxY")) == 3);
}
