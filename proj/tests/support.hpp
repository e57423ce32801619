#pragma once

#include <string>

#include "oracles.hpp"
#include "wreathlab/wreath.hpp"

namespace testing_support {

inline const char* const kBases[] = {"f2", "zwrz", "z2"};

inline wreathlab::WreathElement from_oracle(const std::string& base, const oracle::State& s) {
  return wreathlab::wreath_from_json(oracle::state_json(base, s));
}

// Library evaluation of a word that may mix a, x, y with p, q.
inline wreathlab::WreathElement eval_mixed(const std::string& base, const std::string& word) {
  using namespace wreathlab;
  const auto b = parse_base_group(base);
  WreathElement g = WreathElement::identity(b);
  for (char c : word) {
    const char lower = static_cast<char>(c | 0x20);
    const auto alphabet = (lower == 'p' || lower == 'q') ? Alphabet::H : Alphabet::G;
    g = w_multiply(g, lower == 'p' || lower == 'q'
                          ? evaluate_word(parse_word(std::string(1, c), alphabet), GeneratorSet::subgroup_h(), b)
                          : evaluate_word(parse_word(std::string(1, c), alphabet), b));
  }
  return g;
}

inline wreathlab::WreathElement eval_g(const std::string& base, const std::string& word) {
  return wreathlab::evaluate_word(wreathlab::parse_word(word, wreathlab::Alphabet::G),
                                  wreathlab::parse_base_group(base));
}

inline wreathlab::WreathElement eval_h(const std::string& base, const std::string& word) {
  return wreathlab::evaluate_word(wreathlab::parse_word(word, wreathlab::Alphabet::H),
                                  wreathlab::GeneratorSet::subgroup_h(), wreathlab::parse_base_group(base));
}

}  // namespace testing_support
