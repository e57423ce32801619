#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>

#include "support.hpp"
#include "wreathlab/errors.hpp"
#include "wreathlab/invariant.hpp"
#include "wreathlab/search.hpp"

using namespace wreathlab;
using boost::multiprecision::cpp_rational;
using testing_support::eval_g;
using testing_support::eval_h;

namespace {

cpp_rational frac(cpp_rational q) {
  const auto n = numerator(q), d = denominator(q);
  BigInt r = n % d;
  if (r < 0) r += d;
  return cpp_rational(r, d);
}

// Q/Z-valued character of the lamp group killing every translate of
// sigma and tau: on f2 it halves going up the Cayley tree from beta(e);
// on zwrz it reads the lamps at and below the cursor.
cpp_rational psi(const WreathElement& g, const cpp_rational& beta_e) {
  cpp_rational total = 0;
  for (const auto& [site, v] : g.support()) {
    cpp_rational beta;
    if (g.base() == BaseGroupId::f2) {
      beta = beta_e;
      for (char c : std::get<FreeGroupElement>(site).reduced()) {
        beta = frac((c == 'x' || c == 'y') ? cpp_rational(beta / 2) : cpp_rational(beta * 2));
      }
    } else {
      const auto& k = std::get<LamplighterElement>(site);
      for (const auto& [p, s] : k.lamps) {
        if (p <= k.cursor) beta += cpp_rational(s) / cpp_rational(BigInt(1) << static_cast<unsigned>(k.cursor - p + 1));
      }
    }
    total += v * beta;
  }
  return frac(total);
}

}  // namespace

TEST_CASE("phi examples") {
  for (const char* b : testing_support::kBases) {
    CHECK(phi_invariant(eval_h(b, "p")).is_zero());
    CHECK(phi_invariant(eval_h(b, "q")).is_zero());
    CHECK(phi_invariant(eval_h(b, "x")).is_zero());
    CHECK(phi_invariant(eval_h(b, "y")).is_zero());
    CHECK(phi_invariant(eval_g(b, "")).is_zero());
    CHECK(phi_invariant(eval_g(b, "a")) == Dyadic(1));
  }
  CHECK(phi_invariant(eval_g("f2", "Xa")) == Dyadic(2));
  CHECK(phi_invariant(eval_g("f2", "xxaa")) == Dyadic::scaled(1, 1));
}

TEST_CASE("membership examples") {
  CHECK(is_in_H(eval_g("f2", "Ax^2Y^2a")));
  CHECK(is_in_H(eval_g("zwrz", "Ax^2Y^2a")));
  CHECK_FALSE(is_in_H(eval_g("f2", "a")));
  const auto m = membership(eval_g("z2", "AxYa"));
  CHECK(m.in_h);
  CHECK_FALSE(m.kernel_description_asserted);
  CHECK(membership(eval_g("f2", "a")).kernel_description_asserted);
}

TEST_CASE("phi vanishes off H") {
  for (const char* b : {"f2", "zwrz"}) {
    const auto g = eval_g(b, "aXyA");
    const auto m = membership(g);
    CHECK(m.phi_zero);
    CHECK_FALSE(m.in_h);
    CHECK(psi(g, cpp_rational(1, 2)) == cpp_rational(1, 2));
    CHECK_THROWS_AS(geodesic_length(g, GeneratorSet::subgroup_h(), 1000), InputError);
  }
  CHECK(is_in_H(eval_g("z2", "aXyA")));
}

TEST_CASE("random words over T_H are in H and killed by psi") {
  for (const char* b : testing_support::kBases) {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 1000; ++t) {
      const auto g = eval_h(b, oracle::random_word(rng, "xXyYpPqQ", 40));
      CHECK(phi_invariant(g).is_zero());
      CHECK(is_in_H(g));
      if (std::string(b) != "z2") {
        CHECK(psi(g, cpp_rational(1, 2)) == 0);
        CHECK(psi(g, cpp_rational(3, 8)) == 0);
      }
    }
  }
}

TEST_CASE("cocycle law") {
  for (const char* b : testing_support::kBases) {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 1000; ++t) {
      const auto g = eval_g(b, oracle::random_word(rng, "aAxXyY", 20));
      const auto h = eval_g(b, oracle::random_word(rng, "aAxXyY", 20));
      CHECK(phi_invariant(w_multiply(g, h)) ==
            phi_invariant(g) + phi_invariant(h).times_pow2(-height(g.cursor())));
    }
  }
}

TEST_CASE("H is closed under products and inverses") {
  for (const char* b : testing_support::kBases) {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 500; ++t) {
      const auto g = eval_h(b, oracle::random_word(rng, "xXyYpPqQ", 20));
      const auto h = eval_h(b, oracle::random_word(rng, "xXyYpPqQ", 20));
      const auto n = eval_g(b, oracle::random_word(rng, "aAxXyY", 12));
      CHECK(is_in_H(w_multiply(g, h)));
      CHECK(is_in_H(w_invert(g)));
      CHECK(is_in_H(w_multiply(g, n)) == is_in_H(n));
      CHECK(is_in_H(w_multiply(n, g)) == is_in_H(n));
    }
  }
}

TEST_CASE("membership matches exhaustive search on small balls") {
  for (const std::string b : {"f2", "zwrz", "z2"}) {
    const auto gball = oracle::ball(b, "aAxXyY", 4);
    const auto hball = oracle::ball(b, "xXyYpPqQ", 6);
    std::size_t members = 0;
    for (const auto& [key, entry] : gball) {
      const bool reached = hball.contains(key);
      const auto g = testing_support::from_oracle(b, entry.second);
      CHECK(is_in_H(g) == reached);
      members += reached;
    }
    MESSAGE(b << ": " << members << " of " << gball.size() << " ball elements in H");
  }
}
