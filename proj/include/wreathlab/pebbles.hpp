#pragma once

#include <cstdint>
#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "wreathlab/wreath.hpp"

namespace wreathlab {

// Heightwise lamp totals restricted to the pebble set:
// p_i(f) = sum of f(g) over g in P_n with theta(g) = i, for i < n.
struct PebbleProfile {
  std::int64_t n = 1;
  // Heights window_lo .. n-1 are reported; everything below is zero.
  std::int64_t window_lo = -1;
  std::map<std::int64_t, std::int64_t> entries;  // nonzero entries only

  std::int64_t at(std::int64_t i) const;
  nlohmann::json to_json() const;
};

// Raises UnsupportedError on z2.
PebbleProfile pebble_profile(const WreathElement& g, std::int64_t n);

struct TransitionMismatch {
  std::size_t position = 0;  // letter index in the replayed word
  Letter letter;
  std::map<std::int64_t, std::int64_t> predicted;
  std::map<std::int64_t, std::int64_t> actual;
};

struct TransitionReport {
  std::int64_t n = 1;
  std::size_t transitions = 0;  // sigma/tau letters replayed
  std::vector<TransitionMismatch> mismatches;
  // Number of sigma/tau letters whose replay changed p_i.
  std::map<std::int64_t, std::int64_t> moves_per_height;
  PebbleProfile final_profile;

  bool passed() const { return mismatches.empty(); }
  std::int64_t moves_at(std::int64_t i) const;
  nlohmann::json to_json() const;
};

// Replays an H-word from `start`. At each sigma^{+-1} (tau^{+-1}) with the
// lamplighter at k, height i, the predicted profile change is
//   k in P_n:                          p_{i-1} -= s, p_i += 2s
//   k not in P_n, i = n, k d^-1 in P_n: p_{n-1} -= s
//   otherwise:                         nothing
// (d = x for sigma, y for tau; s the letter's sign). The actual change is
// recomputed from scratch and compared.
TransitionReport profile_transition_check(const Word& w, std::int64_t n, BaseGroupId base);
TransitionReport profile_transition_check(const Word& w, std::int64_t n, const WreathElement& start);

// Breadth-first ball in the Cayley graph of K over {x, y}, with distances,
// in discovery order.
std::vector<std::pair<BaseElement, std::int64_t>> base_ball(BaseGroupId base, std::int64_t radius);

struct PebbleAxiomReport {
  BaseGroupId base = BaseGroupId::f2;
  std::int64_t n = 1;
  std::int64_t radius = 0;
  std::size_t ball_size = 0;
  bool contains_x_pow_n_minus_1 = false;        // (i), first half
  bool excludes_corner = false;                 // (i), x^n y^-n not in P_n
  std::size_t axiom_ii_violations = 0;          // p in P_n but p x^-1 or p y^-1 outside
  std::size_t axiom_iii_violations = 0;         // entry into P_n from a height != n
  std::size_t power_violations = 0;             // x^i in P_n iff i < n, 0 <= i <= radius
  std::size_t members_in_ball = 0;
  std::vector<std::string> samples;             // first few violations, text form

  bool passed() const {
    return contains_x_pow_n_minus_1 && excludes_corner && axiom_ii_violations == 0 &&
           axiom_iii_violations == 0 && power_violations == 0;
  }
  nlohmann::json to_json() const;
};

// Exhaustive check of the pebble-set axioms on the radius ball of K.
// Raises UnsupportedError on z2.
PebbleAxiomReport verify_pebble_axioms(BaseGroupId base, std::int64_t n, std::int64_t radius);

}  // namespace wreathlab
