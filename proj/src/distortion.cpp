#include "wreathlab/distortion.hpp"

#include <sstream>

#include "wreathlab/invariant.hpp"
#include "wreathlab/witnesses.hpp"

namespace wreathlab {

const DistortionRow* DistortionReport::row(std::int64_t n) const {
  for (const auto& r : rows) {
    if (r.n == n) return &r;
  }
  return nullptr;
}

std::string DistortionReport::to_csv() const {
  std::ostringstream out;
  out << "n,dist,exact,witness\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.dist << ',' << (r.exact ? "true" : "false") << ',' << r.witness.to_string() << '\n';
  }
  return out.str();
}

nlohmann::json DistortionReport::to_json() const {
  nlohmann::json rs = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j{{"n", r.n}, {"dist", r.dist}, {"exact", r.exact}, {"witness", r.witness.to_string()}};
    if (r.element) j["element"] = wreathlab::to_json(*r.element);
    rs.push_back(std::move(j));
  }
  return {{"base", base_group_name(base)},
          {"ambient_generators", ambient_generators},
          {"subgroup_generators", subgroup_generators},
          {"ball_radius", ball_radius},
          {"forward_radius", forward_radius},
          {"ball_size", ball_size},
          {"h_elements", h_elements},
          {"kernel_description_asserted", kernel_description_asserted},
          {"rows", rs}};
}

std::int64_t default_distortion_cap(BaseGroupId base) { return base == BaseGroupId::zwrz ? 7 : 8; }

DistortionReport distortion_table(std::int64_t max_n, BaseGroupId base, const DistortionOptions& options) {
  if (max_n < 0) throw InputError("max_n must be non-negative");
  const auto cap = options.cap.value_or(default_distortion_cap(base));
  const auto radius = std::min(max_n, cap);

  DistortionReport report;
  report.base = base;
  report.kernel_description_asserted = base != BaseGroupId::z2;

  const auto ball = enumerate_ball(GeneratorSet::ambient(), base, radius, options.node_budget);
  if (!ball.complete) {
    throw ResourceError("S_G ball of radius " + std::to_string(radius) + " exceeds the node budget of " +
                        std::to_string(options.node_budget));
  }
  report.ball_radius = ball.radius;
  report.ball_size = ball.entries.size();

  // Heaviest T_H element seen at each exact S_G distance.
  std::vector<DistortionRow> best(static_cast<std::size_t>(radius) + 1);
  for (std::int64_t n = 0; n <= radius; ++n) best[static_cast<std::size_t>(n)].n = n;
  best[0].element = WreathElement::identity(base);

  // A forward tree of radius r answers targets up to distance r directly and
  // shortens every backward search by r layers.
  const MetricOracle oracle(GeneratorSet::subgroup_h(), base, options.forward_budget, 4 * radius + 4);
  report.forward_radius = oracle.forward_radius();

  for (const auto& entry : ball.entries) {
    if (entry.dist == 0 || !is_in_H(entry.element)) continue;
    ++report.h_elements;
    const auto d = oracle.distance(entry.element, options.node_budget);
    auto& slot = best[static_cast<std::size_t>(entry.dist)];
    if (!slot.element || d.distance() > slot.dist) {
      slot.dist = d.distance();
      slot.witness = d.witness;
      slot.element = entry.element;
    }
    if (!d.exact()) slot.exact = false;
  }

  // Dist(n) is the running maximum over distances <= n; it is exact only if
  // every contributing distance is.
  DistortionRow running = best[0];
  for (std::int64_t n = 0; n <= radius; ++n) {
    const auto& slot = best[static_cast<std::size_t>(n)];
    const bool exact = running.exact && slot.exact;
    if (slot.element && slot.dist > running.dist) running = slot;
    running.exact = exact;
    running.n = n;
    report.rows.push_back(running);
  }

  if (max_n > cap) {
    // The doubling lower bound needs pebble sets, which z2 lacks.
    for (std::int64_t m = 1; base != BaseGroupId::z2 && 2 * m + 2 <= max_n; ++m) {
      if (2 * m + 2 <= cap) continue;
      DistortionRow r;
      r.n = 2 * m + 2;
      r.dist = (std::int64_t{1} << m) - 1;
      r.exact = false;
      r.witness = witness_word(m, base);
      report.rows.push_back(std::move(r));
    }
    throw DistortionCapError("max_n = " + std::to_string(max_n) + " exceeds the enumeration cap of " +
                                 std::to_string(cap) + " for " + std::string(base_group_name(base)),
                             std::move(report));
  }
  return report;
}

}  // namespace wreathlab
