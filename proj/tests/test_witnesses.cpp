#include <doctest.h>

#include "support.hpp"
#include "wreathlab/errors.hpp"
#include "wreathlab/witnesses.hpp"

using namespace wreathlab;

namespace {

// x s x s^2 ... x s^(2^(n-1)) spelled out directly.
std::string lambda_text(int n, char gen, char sub) {
  std::string w;
  for (int i = 0; i < n; ++i) {
    w.push_back(gen);
    w.append(std::size_t{1} << i, sub);
  }
  return w;
}

}  // namespace

TEST_CASE("lambda and mu") {
  CHECK(build_lambda(1).to_string() == "xp");
  CHECK(build_mu(1).to_string() == "yq");
  for (int n = 1; n <= 10; ++n) {
    CHECK(build_lambda(n).to_string() == lambda_text(n, 'x', 'p'));
    CHECK(build_mu(n).to_string() == lambda_text(n, 'y', 'q'));
    CHECK(build_lambda(n).length() == static_cast<std::size_t>(n + (1 << n) - 1));
  }
  CHECK_THROWS_AS(build_lambda(0), InputError);
  CHECK_THROWS_AS(build_lambda(30, 1000), ResourceError);
}

TEST_CASE("a lambda_n = x^n a^(2^n)") {
  for (const char* b : {"f2", "zwrz", "z2"}) {
    const auto base = parse_base_group(b);
    const int n = 10;
    const auto lhs = w_multiply(testing_support::eval_g(b, "a"),
                                evaluate_word(build_lambda(n), GeneratorSet::subgroup_h(), base));
    Word rhs(Alphabet::G);
    rhs.append_power('x', n);
    rhs.append_power('a', 1 << n);
    CHECK(lhs == evaluate_word(rhs, base));
  }
}

TEST_CASE("witness words") {
  CHECK(witness_word(1, BaseGroupId::f2).to_string() == "xpQY");
  CHECK(witness_word(5, BaseGroupId::f2).length() == 2 * 5 + (1 << 6) - 2);
  CHECK(corner_word(2).to_string() == "AxxYYa");
  CHECK(corner_word(2).length() == 6);
  CHECK_THROWS_AS(witness_word(0, BaseGroupId::f2), InputError);
  CHECK_THROWS_AS(witness_word(2, BaseGroupId::z2), UnsupportedError);
  CHECK_NOTHROW(witness_word(3, BaseGroupId::zwrz));
}

TEST_CASE("witness identity checked by the lamplighter walk") {
  for (const std::string b : {"f2", "zwrz"}) {
    for (int n = 1; n <= 8; ++n) {
      const auto w = witness_word(n, parse_base_group(b)).to_string();
      CHECK(oracle::walk(b, w) == oracle::walk(b, corner_word(n).to_string()));
    }
  }
}

TEST_CASE("grid witness") {
  CHECK(grid_witness(7).length() == 28);
  CHECK(grid_witness(1).to_string() == "xpQY");
  for (int n : {1, 2, 16}) {
    CHECK(oracle::walk("z2", grid_witness(n).to_string()) == oracle::walk("z2", corner_word(n).to_string()));
  }
  CHECK_THROWS_AS(grid_witness(0), InputError);
}
