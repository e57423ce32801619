#include "wreathlab/subgroups.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <set>

#include "wreathlab/errors.hpp"

namespace wreathlab {

namespace {

nlohmann::json result_json(const GeodesicResult& r) {
  nlohmann::json j{{"distance", r.distance()}, {"exact", r.exact()}, {"lower_bound", r.lower_bound},
                   {"witness", r.witness.to_string()}, {"nodes", r.nodes}};
  return j;
}

Word as_g_word(const Word& k_word) { return Word(Alphabet::G, k_word.letters()); }

}  // namespace

nlohmann::json KSubgroupCheck::to_json() const {
  return {{"k", base_to_json(k)},
          {"d_G", result_json(ambient)},
          {"d_K", result_json(base)},
          {"exact", exact()},
          {"equal", equal()}};
}

KSubgroupCheck k_subgroup_distance_check(const BaseElement& k, std::size_t budget) {
  const auto target = WreathElement::lift(k);
  return {k, geodesic_length(target, GeneratorSet::ambient(), budget),
          geodesic_length(target, GeneratorSet::base(), budget)};
}

GeneratorSet lamp_generators(const std::vector<BaseElement>& sites) {
  constexpr std::size_t kMaxSites = 20;
  if (sites.size() > kMaxSites) throw InputError("at most 20 sites are supported");
  std::set<BaseElement> distinct(sites.begin(), sites.end());
  if (distinct.size() != sites.size()) throw InputError("sites must be distinct");
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const Word path = as_g_word(base_word(sites[i]));
    gens.push_back({static_cast<char>('b' + i), path + parse_word("a", Alphabet::G) + path.inverse()});
  }
  return GeneratorSet("W_sites", Alphabet::Custom, std::move(gens));
}

nlohmann::json WSubgroupCheck::to_json() const {
  nlohmann::json ss = nlohmann::json::array();
  for (const auto& s : samples) {
    ss.push_back({{"g", wreathlab::to_json(s.g)},
                  {"max_abs", s.max_abs},
                  {"d_G", result_json(s.ambient)},
                  {"d_H", result_json(s.subgroup)}});
  }
  nlohmann::json st = nlohmann::json::array();
  for (const auto& v : sites) st.push_back(base_to_json(v));
  return {{"sites", st},
          {"radius", radius},
          {"fitted_constant", fitted_constant},
          {"constant_bound", constant_bound},
          {"all_exact", all_exact},
          {"passed", passed()},
          {"samples", ss}};
}

WSubgroupCheck w_subgroup_distortion_check(const std::vector<BaseElement>& sites, std::int64_t radius,
                                           BaseGroupId base, std::size_t budget, std::uint64_t seed,
                                           std::size_t sample_count) {
  if (radius < 0) throw InputError("radius must be non-negative");
  for (const auto& v : sites) {
    if (base_group_of(v) != base) throw InputError("site outside the chosen base group");
  }
  const auto gens = lamp_generators(sites);

  WSubgroupCheck check;
  check.sites = sites;
  check.radius = radius;
  check.constant_bound = static_cast<std::int64_t>(sites.size());
  for (const auto& v : sites) check.constant_bound += 2 * static_cast<std::int64_t>(base_word(v).length());
  check.constant_bound = std::max<std::int64_t>(check.constant_bound, 1);

  // Coefficient vectors to sample.
  std::vector<std::vector<std::int64_t>> coeffs;
  const auto s = sites.size();
  const auto span = static_cast<double>(2 * radius + 1);
  if (std::pow(span, static_cast<double>(s)) <= static_cast<double>(std::max<std::size_t>(sample_count, 1))) {
    std::vector<std::int64_t> c(s, -radius);
    coeffs.push_back(c);
    for (std::size_t i = 0; i < s;) {
      if (c[i] < radius) {
        ++c[i];
        std::fill(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(i), -radius);
        coeffs.push_back(c);
        i = 0;
      } else {
        ++i;
      }
    }
    if (s == 0) coeffs = {{}};
  } else {
    for (std::size_t i = 0; i < s; ++i) {
      for (std::int64_t sign : {-1, 1}) {
        std::vector<std::int64_t> c(s, 0);
        c[i] = sign * radius;
        coeffs.push_back(std::move(c));
      }
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(-radius, radius);
    while (coeffs.size() < sample_count) {
      std::vector<std::int64_t> c(s);
      for (auto& x : c) x = dist(rng);
      coeffs.push_back(std::move(c));
    }
  }

  for (const auto& c : coeffs) {
    WSample sample;
    sample.g = WreathElement(base);
    for (std::size_t i = 0; i < s; ++i) {
      sample.g.add_lamp(sites[i], c[i]);
      sample.max_abs = std::max(sample.max_abs, std::abs(c[i]));
    }
    sample.ambient = geodesic_length(sample.g, GeneratorSet::ambient(), budget, SearchStrategy::guided);
    sample.subgroup = geodesic_length(sample.g, gens, budget, SearchStrategy::guided);
    if (!sample.ambient.exact() || !sample.subgroup.exact()) check.all_exact = false;
    if (sample.max_abs > 0) {
      for (const auto* r : {&sample.ambient, &sample.subgroup}) {
        const auto d = static_cast<double>(r->distance());
        const auto m = static_cast<double>(sample.max_abs);
        check.fitted_constant = std::max({check.fitted_constant, d / m, d > 0 ? m / d : 1e300});
      }
    }
    check.samples.push_back(std::move(sample));
  }
  return check;
}

}  // namespace wreathlab
