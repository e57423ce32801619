#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>

#include "wreathlab/dyadic.hpp"

using namespace wreathlab;
using boost::multiprecision::cpp_rational;

namespace {

cpp_rational as_rational(const Dyadic& d) {
  return cpp_rational(d.numerator()) / cpp_rational(BigInt(1) << static_cast<unsigned>(d.exponent()));
}

cpp_rational pow2(std::int64_t e) {
  const auto p = cpp_rational(BigInt(1) << static_cast<unsigned>(e < 0 ? -e : e));
  return e < 0 ? 1 / p : p;
}

}  // namespace

TEST_CASE("normalization") {
  const auto d = Dyadic::scaled(12, 4);
  CHECK(d.numerator() == 3);
  CHECK(d.exponent() == 2);
  CHECK(d.to_string() == "3/2^2");
  CHECK(Dyadic::scaled(0, 7).exponent() == 0);
  CHECK(Dyadic::scaled(3, -2) == Dyadic(12));
  CHECK(Dyadic(-5).to_string() == "-5");
  CHECK(Dyadic().to_string() == "0");
}

TEST_CASE("json output") {
  CHECK(Dyadic::scaled(-1, 3).to_json() == nlohmann::json{{"numerator", -1}, {"exponent", 3}});
  const auto big = Dyadic::scaled(BigInt(1) << 80, 0);
  CHECK(big.to_json()["numerator"].is_string());
  CHECK(big.to_json()["numerator"] == "1208925819614629174706176");
}

TEST_CASE("arithmetic agrees with rationals") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
  std::uniform_int_distribution<std::int64_t> sh(-20, 40);
  for (int t = 0; t < 2000; ++t) {
    const auto an = num(rng), as = sh(rng), bn = num(rng), bs = sh(rng);
    const auto a = Dyadic::scaled(an, as);
    const auto b = Dyadic::scaled(bn, bs);
    const auto ra = cpp_rational(an) / pow2(as);
    const auto rb = cpp_rational(bn) / pow2(bs);
    CHECK(as_rational(a) == ra);
    CHECK(as_rational(a + b) == ra + rb);
    CHECK(as_rational(a - b) == ra - rb);
    CHECK(as_rational(-a) == -ra);
    const auto p = sh(rng);
    CHECK(as_rational(a.times_pow2(p)) == ra * pow2(p));
    const auto s = a + b;
    CHECK((s.is_zero() ? s.exponent() == 0 : (s.exponent() == 0 || s.numerator() % 2 != 0)));
  }
}
