#include "wreathlab/witnesses.hpp"

#include "wreathlab/errors.hpp"

namespace wreathlab {

namespace {

Word doubling_word(char step, char move, std::int64_t n, std::size_t letter_budget) {
  if (n < 1) throw InputError("n must be at least 1");
  // n + 2^n - 1 letters.
  if (n > 62 || static_cast<std::size_t>(n) + (std::size_t{1} << n) - 1 > letter_budget) {
    throw ResourceError("word for n = " + std::to_string(n) + " exceeds the letter budget of " +
                        std::to_string(letter_budget));
  }
  Word w(Alphabet::H);
  for (std::int64_t i = 0; i < n; ++i) {
    w.push_back({step, 1});
    w.append_power(move, std::int64_t{1} << i);
  }
  return w;
}

void check_identity(const Word& witness, std::int64_t n, BaseGroupId base) {
  const auto lhs = evaluate_word(witness, GeneratorSet::subgroup_h(), base);
  const auto rhs = evaluate_word(corner_word(n), base);
  if (!(lhs == rhs)) {
    throw ConsistencyError("witness for n = " + std::to_string(n) + " does not evaluate to a^-1 x^n y^-n a over " +
                           std::string(base_group_name(base)));
  }
}

}  // namespace

Word build_lambda(std::int64_t n, std::size_t letter_budget) { return doubling_word('x', 'p', n, letter_budget); }

Word build_mu(std::int64_t n, std::size_t letter_budget) { return doubling_word('y', 'q', n, letter_budget); }

Word corner_word(std::int64_t n) {
  if (n < 0) throw InputError("n must be non-negative");
  Word w(Alphabet::G);
  w.push_back({'a', -1});
  w.append_power('x', n);
  w.append_power('y', -n);
  w.push_back({'a', 1});
  return w;
}

Word witness_word(std::int64_t n, BaseGroupId base, std::size_t letter_budget) {
  if (base == BaseGroupId::z2) {
    throw UnsupportedError("lambda/mu witnesses are stated for f2 and zwrz; use grid_witness for z2");
  }
  // Budget covers the whole word: 2n + 2^(n+1) - 2 letters.
  Word w = build_lambda(n, letter_budget / 2) + build_mu(n, letter_budget / 2).inverse();
  check_identity(w, n, base);
  return w;
}

Word grid_witness(std::int64_t n) {
  if (n < 1) throw InputError("n must be at least 1");
  Word block = parse_word("xpQY", Alphabet::H);
  Word w(Alphabet::H);
  for (std::int64_t i = 0; i < n; ++i) w += block;
  check_identity(w, n, BaseGroupId::z2);
  return w;
}

}  // namespace wreathlab
