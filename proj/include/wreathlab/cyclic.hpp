#pragma once

// Cyclic subgroups <t> of Z wr K with t = (f, k), k of infinite order.
//
// The orbit sum F = sum over all i of k^i . f is k-invariant; it is either
// identically zero, in which case <t> is distorted like <(0, k)>, or it has
// infinite support and <t> is undistorted. The sum is observed through a
// finite window of powers -m..m, grown until it is stable on the inner
// region { k^i u : |i| <= m/2, u in supp f }.

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string_view>

#include "wreathlab/wreath.hpp"

namespace wreathlab {

enum class CyclicClass {
  orbit_sum_nonzero_undistorted,
  orbit_sum_zero_reduces_to_base_cyclic,
};

std::string_view cyclic_class_name(CyclicClass c);

struct CyclicAnalysis {
  WreathElement t;
  std::int64_t window = 1;             // m at which the analysis settled
  WreathElement::Support orbit_sum;    // F on the inner region, nonzero entries
  std::size_t inner_region_size = 0;
  CyclicClass classification = CyclicClass::orbit_sum_zero_reduces_to_base_cyclic;
  bool stable = false;                 // doubling m left F unchanged on the inner region
  bool k_invariant = false;            // F(k v) = F(v) wherever both are inside

  nlohmann::json to_json() const;
};

inline constexpr std::int64_t kDefaultWindowCap = 1 << 12;

// Raises InputError when k is the identity or sites and k live in different bases.
CyclicAnalysis cyclic_orbit_sum(const WreathElement::Support& f, const BaseElement& k, std::int64_t window,
                                std::int64_t window_cap = kDefaultWindowCap);

// sum_{i=lo}^{hi} k^i . f
WreathElement::Support translated_sum(const WreathElement::Support& f, const BaseElement& k, std::int64_t lo,
                                      std::int64_t hi);

}  // namespace wreathlab
