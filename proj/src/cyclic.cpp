#include "wreathlab/cyclic.hpp"

#include <algorithm>
#include <set>

#include "wreathlab/errors.hpp"

namespace wreathlab {

std::string_view cyclic_class_name(CyclicClass c) {
  switch (c) {
    case CyclicClass::orbit_sum_nonzero_undistorted: return "orbit_sum_nonzero_undistorted";
    case CyclicClass::orbit_sum_zero_reduces_to_base_cyclic: return "orbit_sum_zero_reduces_to_base_cyclic";
  }
  return "?";
}

nlohmann::json CyclicAnalysis::to_json() const {
  nlohmann::json sum = nlohmann::json::array();
  for (const auto& [site, v] : orbit_sum) sum.push_back({{"site", base_to_json(site)}, {"value", v}});
  return {{"t", wreathlab::to_json(t)},
          {"window", window},
          {"orbit_sum", sum},
          {"inner_region_size", inner_region_size},
          {"classification", cyclic_class_name(classification)},
          {"stable", stable},
          {"k_invariant", k_invariant}};
}

namespace {

BaseElement power(const BaseElement& k, std::int64_t i) {
  const BaseElement step = i < 0 ? base_invert(k) : k;
  BaseElement out = base_identity(base_group_of(k));
  for (std::int64_t j = 0; j < (i < 0 ? -i : i); ++j) out = base_multiply(out, step);
  return out;
}

std::set<BaseElement> region(const WreathElement::Support& f, const BaseElement& k, std::int64_t reach) {
  std::set<BaseElement> out;
  if (reach < 0) return out;
  BaseElement kp = power(k, -reach);
  for (std::int64_t i = -reach; i <= reach; ++i) {
    for (const auto& [u, v] : f) out.insert(base_multiply(kp, u));
    kp = base_multiply(kp, k);
  }
  return out;
}

std::int64_t value_at(const WreathElement::Support& s, const BaseElement& v) {
  auto it = s.find(v);
  return it == s.end() ? 0 : it->second;
}

}  // namespace

WreathElement::Support translated_sum(const WreathElement::Support& f, const BaseElement& k, std::int64_t lo,
                                      std::int64_t hi) {
  WreathElement out(base_group_of(k));
  BaseElement kp = power(k, lo);
  for (std::int64_t i = lo; i <= hi; ++i) {
    for (const auto& [u, v] : f) out.add_lamp(base_multiply(kp, u), v);
    kp = base_multiply(kp, k);
  }
  return out.support();
}

CyclicAnalysis cyclic_orbit_sum(const WreathElement::Support& f, const BaseElement& k, std::int64_t window,
                                std::int64_t window_cap) {
  if (window < 1) throw InputError("window must be at least 1");
  if (is_identity(k)) {
    throw InputError("k is the identity, so t lies in W; use the W-subgroup check instead");
  }
  const auto base = base_group_of(k);
  CyclicAnalysis a;
  a.t = WreathElement(base, f, k);

  std::int64_t m = window;
  WreathElement::Support sum;
  std::set<BaseElement> inner;
  while (true) {
    sum = translated_sum(f, k, -m, m);
    const auto wider = translated_sum(f, k, -2 * m, 2 * m);
    inner = region(f, k, m / 2);
    a.stable = std::all_of(inner.begin(), inner.end(),
                           [&](const BaseElement& v) { return value_at(sum, v) == value_at(wider, v); });
    if (a.stable || 2 * m > window_cap) break;
    m *= 2;
  }
  a.window = m;
  a.inner_region_size = inner.size();
  for (const auto& v : inner) {
    if (auto x = value_at(sum, v); x != 0) a.orbit_sum.emplace(v, x);
  }
  a.k_invariant = true;
  for (const auto& v : region(f, k, m / 2 - 1)) {
    if (value_at(sum, base_multiply(k, v)) != value_at(sum, v)) a.k_invariant = false;
  }
  a.classification = a.orbit_sum.empty() ? CyclicClass::orbit_sum_zero_reduces_to_base_cyclic
                                         : CyclicClass::orbit_sum_nonzero_undistorted;
  return a;
}

}  // namespace wreathlab
