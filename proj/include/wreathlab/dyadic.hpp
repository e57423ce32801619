#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>

namespace wreathlab {

using BigInt = boost::multiprecision::cpp_int;

// Exact dyadic rational numerator / 2^exponent, kept normalized: the
// numerator is odd, or zero with exponent 0.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(std::int64_t value) : numerator_(value) {}  // NOLINT(google-explicit-constructor)
  // numerator * 2^-shift; shift may be negative.
  static Dyadic scaled(BigInt numerator, std::int64_t shift);

  const BigInt& numerator() const { return numerator_; }
  std::uint64_t exponent() const { return exponent_; }
  bool is_zero() const { return numerator_ == 0; }

  // this * 2^power
  Dyadic times_pow2(std::int64_t power) const;

  Dyadic operator-() const;
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  friend bool operator==(const Dyadic&, const Dyadic&) = default;

  // "0", "3", "-5/2^3", ...
  std::string to_string() const;
  // {"numerator": n, "exponent": e}; n is a JSON string when it does not
  // fit in 64 bits.
  nlohmann::json to_json() const;

 private:
  void normalize();

  BigInt numerator_ = 0;
  std::uint64_t exponent_ = 0;
};

}  // namespace wreathlab
