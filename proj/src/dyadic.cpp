#include "wreathlab/dyadic.hpp"

#include <limits>

namespace wreathlab {

Dyadic Dyadic::scaled(BigInt numerator, std::int64_t shift) {
  Dyadic d;
  if (shift >= 0) {
    d.numerator_ = std::move(numerator);
    d.exponent_ = static_cast<std::uint64_t>(shift);
  } else {
    d.numerator_ = std::move(numerator) << static_cast<unsigned>(-shift);
  }
  d.normalize();
  return d;
}

void Dyadic::normalize() {
  if (numerator_ == 0) {
    exponent_ = 0;
    return;
  }
  if (exponent_ == 0) return;
  const auto zeros = static_cast<std::uint64_t>(boost::multiprecision::lsb(abs(numerator_)));
  const auto drop = std::min(zeros, exponent_);
  numerator_ >>= static_cast<unsigned>(drop);
  exponent_ -= drop;
}

Dyadic Dyadic::times_pow2(std::int64_t power) const {
  return scaled(numerator_, static_cast<std::int64_t>(exponent_) - power);
}

Dyadic Dyadic::operator-() const {
  Dyadic d = *this;
  d.numerator_ = -d.numerator_;
  return d;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  const auto e = std::max(a.exponent_, b.exponent_);
  BigInt n = (a.numerator_ << static_cast<unsigned>(e - a.exponent_)) +
             (b.numerator_ << static_cast<unsigned>(e - b.exponent_));
  return Dyadic::scaled(std::move(n), static_cast<std::int64_t>(e));
}

std::string Dyadic::to_string() const {
  if (exponent_ == 0) return numerator_.str();
  return numerator_.str() + "/2^" + std::to_string(exponent_);
}

nlohmann::json Dyadic::to_json() const {
  nlohmann::json num;
  if (numerator_ >= std::numeric_limits<std::int64_t>::min() &&
      numerator_ <= std::numeric_limits<std::int64_t>::max()) {
    num = numerator_.convert_to<std::int64_t>();
  } else {
    num = numerator_.str();
  }
  return {{"numerator", num}, {"exponent", exponent_}};
}

}  // namespace wreathlab
