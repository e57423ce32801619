#pragma once

// Small-scale checks for the elementary subgroups of G = W x| K:
// base subgroups keep their own distortion in G, and finitely generated
// subgroups of W are undistorted.

#include <cstdint>
#include <nlohmann/json.hpp>
#include <vector>

#include "wreathlab/search.hpp"

namespace wreathlab {

struct KSubgroupCheck {
  BaseElement k;
  GeodesicResult ambient;  // |(0, k)| over S_G
  GeodesicResult base;     // |k| over S_K
  bool exact() const { return ambient.exact() && base.exact(); }
  bool equal() const { return exact() && ambient.distance() == base.distance(); }
  nlohmann::json to_json() const;
};

KSubgroupCheck k_subgroup_distance_check(const BaseElement& k, std::size_t budget = kDefaultNodeBudget);

// Translated lamp generators a_v = v a v^-1 for v in sites, with symbols
// b, c, d, ... in order. At most 20 sites; duplicates are an InputError.
GeneratorSet lamp_generators(const std::vector<BaseElement>& sites);

struct WSample {
  WreathElement g;
  std::int64_t max_abs = 0;
  GeodesicResult ambient;   // over S_G
  GeodesicResult subgroup;  // over the translated lamp generators
};

struct WSubgroupCheck {
  std::vector<BaseElement> sites;
  std::int64_t radius = 0;
  std::vector<WSample> samples;
  // max over nonzero samples of max(d / max|f|, max|f| / d), both metrics
  double fitted_constant = 1.0;
  // |sites| + 2 * (sum of site word lengths): a tour visiting every site
  std::int64_t constant_bound = 1;
  bool all_exact = true;

  bool passed() const { return all_exact && fitted_constant <= static_cast<double>(constant_bound); }
  nlohmann::json to_json() const;
};

// Samples g = (f, e) supported on `sites` with max |f| <= radius: every such
// g when there are at most `sample_count` of them, otherwise the axis
// extremes plus seeded random draws.
WSubgroupCheck w_subgroup_distortion_check(const std::vector<BaseElement>& sites, std::int64_t radius,
                                           BaseGroupId base, std::size_t budget = kDefaultNodeBudget,
                                           std::uint64_t seed = 1, std::size_t sample_count = 200);

}  // namespace wreathlab
