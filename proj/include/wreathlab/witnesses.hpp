#pragma once

#include <cstdint>

#include "wreathlab/wreath.hpp"

namespace wreathlab {

inline constexpr std::size_t kDefaultLetterBudget = std::size_t{1} << 25;

// lambda_n = x p x p^2 ... x p^(2^(n-1)) over the H alphabet (p = sigma).
Word build_lambda(std::int64_t n, std::size_t letter_budget = kDefaultLetterBudget);
// mu_n = y q y q^2 ... y q^(2^(n-1)) (q = tau).
Word build_mu(std::int64_t n, std::size_t letter_budget = kDefaultLetterBudget);

// a^-1 x^n y^-n a over the G alphabet; length 2n + 2.
Word corner_word(std::int64_t n);

// lambda_n mu_n^-1, checked to evaluate to a^-1 x^n y^-n a in Z wr K.
// Requires base f2 or zwrz; throws ConsistencyError if the identity fails.
Word witness_word(std::int64_t n, BaseGroupId base, std::size_t letter_budget = kDefaultLetterBudget);

// ((x p)(y q)^-1)^n, checked to evaluate to a^-1 x^n y^-n a in Z wr Z^2.
Word grid_witness(std::int64_t n);

}  // namespace wreathlab
