#include <doctest.h>

#include <random>

#include "support.hpp"
#include "wreathlab/cyclic.hpp"
#include "wreathlab/errors.hpp"

using namespace wreathlab;

namespace {

BaseElement kw(BaseGroupId id, const std::string& w) { return evaluate_base_word(id, parse_word(w, Alphabet::K)); }

WreathElement::Support random_f(std::mt19937_64& rng, BaseGroupId id) {
  WreathElement g(id);
  const int n = static_cast<int>(rng() % 4);
  for (int i = 0; i < n; ++i) {
    g.add_lamp(kw(id, oracle::random_word(rng, "xXyY", 3)), static_cast<std::int64_t>(rng() % 5) - 2);
  }
  return g.support();
}

}  // namespace

TEST_CASE("cyclic examples") {
  const auto f2 = BaseGroupId::f2;
  const auto e = base_identity(f2);
  const auto x = kw(f2, "x");

  const auto zero = cyclic_orbit_sum({}, x, 8);
  CHECK(zero.orbit_sum.empty());
  CHECK(zero.classification == CyclicClass::orbit_sum_zero_reduces_to_base_cyclic);

  const auto delta = cyclic_orbit_sum({{e, 1}}, x, 8);
  CHECK(delta.classification == CyclicClass::orbit_sum_nonzero_undistorted);
  CHECK(delta.stable);
  CHECK(delta.k_invariant);
  CHECK(delta.orbit_sum.size() == delta.inner_region_size);
  for (const auto& [site, v] : delta.orbit_sum) {
    CHECK(v == 1);
    const auto& w = std::get<FreeGroupElement>(site).reduced();
    CHECK(w.find_first_not_of(w.empty() ? "x" : std::string(1, w[0])) == std::string::npos);
  }

  const auto tele = cyclic_orbit_sum({{e, 1}, {x, -1}}, x, 8);
  CHECK(tele.orbit_sum.empty());
  CHECK(tele.stable);
  CHECK(tele.classification == CyclicClass::orbit_sum_zero_reduces_to_base_cyclic);
  CHECK(tele.t == testing_support::eval_g("f2", "axA"));

  CHECK_THROWS_AS(cyclic_orbit_sum({{e, 1}}, e, 4), InputError);
  CHECK_THROWS_AS(cyclic_orbit_sum({{e, 1}}, x, 0), InputError);
}

TEST_CASE("powers of t are (f_j, k^j)") {
  for (auto id : {BaseGroupId::f2, BaseGroupId::zwrz, BaseGroupId::z2}) {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 100; ++t) {
      const auto f = random_f(rng, id);
      auto k = kw(id, oracle::random_word(rng, "xXyY", 3));
      if (is_identity(k)) k = kw(id, "y");
      const WreathElement g(id, f, k);
      WreathElement p = WreathElement::identity(id);
      BaseElement kj = base_identity(id);
      for (int j = 1; j <= 6; ++j) {
        p = w_multiply(p, g);
        kj = base_multiply(kj, k);
        CHECK(p == WreathElement(id, translated_sum(f, k, 0, j - 1), kj));
      }
    }
  }
}

TEST_CASE("orbit sums are k-invariant on the stable interior") {
  for (auto id : {BaseGroupId::f2, BaseGroupId::zwrz, BaseGroupId::z2}) {
    std::mt19937_64 rng(72);
    for (int t = 0; t < 50; ++t) {
      const auto f = random_f(rng, id);
      auto k = kw(id, oracle::random_word(rng, "xXyY", 3));
      if (is_identity(k)) k = kw(id, "x");
      const auto a = cyclic_orbit_sum(f, k, 8);
      CHECK(a.stable);
      CHECK(a.k_invariant);
      WreathElement total(id);
      for (const auto& [site, v] : f) total.add_lamp(base_identity(id), v);
      // A nonzero total lamp count forces a nonzero orbit sum.
      if (!total.support().empty()) CHECK(a.classification == CyclicClass::orbit_sum_nonzero_undistorted);
    }
  }
}

TEST_CASE("orbit sum of a conjugate of k vanishes") {
  std::mt19937_64 rng(73);
  for (auto id : {BaseGroupId::f2, BaseGroupId::zwrz}) {
    for (int t = 0; t < 30; ++t) {
      // t = g (0, k) g^-1 with g a lamp pattern: f = g - k.g telescopes.
      const auto f = random_f(rng, id);
      const auto k = kw(id, "x");
      WreathElement g(id, f, base_identity(id));
      const auto t_elem = w_multiply(w_multiply(g, WreathElement::lift(k)), w_invert(g));
      const auto a = cyclic_orbit_sum(t_elem.support(), k, 8);
      CHECK(a.orbit_sum.empty());
      CHECK(a.classification == CyclicClass::orbit_sum_zero_reduces_to_base_cyclic);
    }
  }
}

TEST_CASE("json output lists sites in order") {
  const auto a = cyclic_orbit_sum({{base_identity(BaseGroupId::f2), 2}}, kw(BaseGroupId::f2, "y"), 4);
  const auto j = a.to_json();
  CHECK(j["classification"] == "orbit_sum_nonzero_undistorted");
  CHECK(j["orbit_sum"].size() == a.orbit_sum.size());
  CHECK(j["window"] == a.window);
}
