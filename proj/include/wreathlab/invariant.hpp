#pragma once

#include <cstdint>
#include <map>

#include "wreathlab/dyadic.hpp"
#include "wreathlab/wreath.hpp"

namespace wreathlab {

// Lamp settings summed per height: i -> sum of f(v) over theta(v) = i.
// Zero totals are omitted.
std::map<std::int64_t, std::int64_t> height_totals(const WreathElement& g);

// Phi(f, k) = sum_i 2^-i * (sum of f(v) over theta(v) = i), exactly.
Dyadic phi_invariant(const WreathElement& g);

struct Membership {
  bool in_h = false;
  Dyadic phi;
  // Phi vanishes on H but, for f2 and zwrz, also on some elements outside H.
  bool phi_zero = false;
  // False on z2: the kernel description of H is only established for f2 and zwrz.
  bool kernel_description_asserted = true;
};

Membership membership(const WreathElement& g);

// Exact membership in H = <x, y, sigma, tau>. The lamp part of H is spanned
// by the translates of 2[e] - [x^-1] and 2[e] - [y^-1]; on z2 that is the
// kernel of Phi, on f2 and zwrz it is decided by leaf stripping on a tree of
// site classes whose edges read [lower] = 2[upper].
bool is_in_H(const WreathElement& g);

}  // namespace wreathlab
