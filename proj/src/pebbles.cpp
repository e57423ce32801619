#include "wreathlab/pebbles.hpp"

#include <algorithm>
#include <unordered_set>

#include "wreathlab/errors.hpp"

namespace wreathlab {

std::int64_t PebbleProfile::at(std::int64_t i) const {
  auto it = entries.find(i);
  return it == entries.end() ? 0 : it->second;
}

nlohmann::json PebbleProfile::to_json() const {
  nlohmann::json values = nlohmann::json::array();
  for (std::int64_t i = window_lo; i < n; ++i) values.push_back(at(i));
  return {{"n", n}, {"lowest_height", window_lo}, {"values", values}};
}

PebbleProfile pebble_profile(const WreathElement& g, std::int64_t n) {
  if (g.base() == BaseGroupId::z2) throw UnsupportedError("pebble sets unsupported for z2");
  if (n < 1) throw InputError("pebble sets P_n are defined for n >= 1");
  PebbleProfile p;
  p.n = n;
  std::int64_t lowest = 0;
  for (const auto& [site, v] : g.support()) {
    const auto h = height(site);
    lowest = std::min(lowest, h);
    if (in_pebble_set(site, n)) p.entries[h] += v;
  }
  p.window_lo = lowest - 1;
  std::erase_if(p.entries, [](const auto& kv) { return kv.second == 0; });
  return p;
}

std::int64_t TransitionReport::moves_at(std::int64_t i) const {
  auto it = moves_per_height.find(i);
  return it == moves_per_height.end() ? 0 : it->second;
}

namespace {

nlohmann::json delta_json(const std::map<std::int64_t, std::int64_t>& m) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [h, v] : m) j[std::to_string(h)] = v;
  return j;
}

std::map<std::int64_t, std::int64_t> profile_delta(const PebbleProfile& before, const PebbleProfile& after) {
  std::map<std::int64_t, std::int64_t> d = after.entries;
  for (const auto& [h, v] : before.entries) d[h] -= v;
  std::erase_if(d, [](const auto& kv) { return kv.second == 0; });
  return d;
}

}  // namespace

nlohmann::json TransitionReport::to_json() const {
  nlohmann::json mm = nlohmann::json::array();
  for (const auto& m : mismatches) {
    mm.push_back({{"position", m.position},
                  {"letter", std::string(1, m.letter.text())},
                  {"predicted", delta_json(m.predicted)},
                  {"actual", delta_json(m.actual)}});
  }
  return {{"n", n},
          {"transitions", transitions},
          {"passed", passed()},
          {"mismatches", mm},
          {"moves_per_height", delta_json(moves_per_height)},
          {"final_profile", final_profile.to_json()}};
}

TransitionReport profile_transition_check(const Word& w, std::int64_t n, BaseGroupId base) {
  return profile_transition_check(w, n, WreathElement::identity(base));
}

TransitionReport profile_transition_check(const Word& w, std::int64_t n, const WreathElement& start) {
  if (w.alphabet() != Alphabet::H) throw InputError("profile replay expects a word over the H alphabet");
  const auto gens = GeneratorSet::subgroup_h();
  TransitionReport report;
  report.n = n;
  WreathElement g = start;
  auto profile = pebble_profile(g, n);
  for (std::size_t pos = 0; pos < w.length(); ++pos) {
    const Letter l = w.letters()[pos];
    if (l.symbol == 'x' || l.symbol == 'y') {
      g.apply(l);
      continue;
    }
    ++report.transitions;
    const BaseElement k = g.cursor();
    const auto i = height(k);
    const std::int64_t s = l.sign;
    const Letter back{l.symbol == 'p' ? 'x' : 'y', -1};

    std::map<std::int64_t, std::int64_t> predicted;
    if (in_pebble_set(k, n)) {
      predicted[i - 1] -= s;
      predicted[i] += 2 * s;
    } else if (i == n && in_pebble_set(base_step(k, back), n)) {
      predicted[n - 1] -= s;
    }
    std::erase_if(predicted, [](const auto& kv) { return kv.second == 0; });

    const Word& e = gens.expansion(l.symbol);
    const Word expanded = s > 0 ? e : e.inverse();
    for (const auto& gl : expanded.letters()) g.apply(gl);
    auto next = pebble_profile(g, n);
    auto actual = profile_delta(profile, next);
    for (const auto& [h, v] : actual) ++report.moves_per_height[h];
    if (actual != predicted) report.mismatches.push_back({pos, l, predicted, actual});
    profile = std::move(next);
  }
  report.final_profile = std::move(profile);
  return report;
}

std::vector<std::pair<BaseElement, std::int64_t>> base_ball(BaseGroupId base, std::int64_t radius) {
  std::vector<std::pair<BaseElement, std::int64_t>> ball;
  std::unordered_set<std::string> seen;
  ball.emplace_back(base_identity(base), 0);
  seen.insert(base_key(ball.front().first));
  std::size_t layer_begin = 0;
  for (std::int64_t r = 1; r <= radius; ++r) {
    const std::size_t layer_end = ball.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (auto& [l, next] : base_neighbors(ball[i].first)) {
        if (seen.insert(base_key(next)).second) ball.emplace_back(std::move(next), r);
      }
    }
    layer_begin = layer_end;
  }
  return ball;
}

nlohmann::json PebbleAxiomReport::to_json() const {
  return {{"base", base_group_name(base)},
          {"n", n},
          {"radius", radius},
          {"ball_size", ball_size},
          {"members_in_ball", members_in_ball},
          {"contains_x_pow_n_minus_1", contains_x_pow_n_minus_1},
          {"excludes_corner", excludes_corner},
          {"axiom_ii_violations", axiom_ii_violations},
          {"axiom_iii_violations", axiom_iii_violations},
          {"power_violations", power_violations},
          {"samples", samples},
          {"passed", passed()}};
}

PebbleAxiomReport verify_pebble_axioms(BaseGroupId base, std::int64_t n, std::int64_t radius) {
  if (base == BaseGroupId::z2) throw UnsupportedError("pebble sets unsupported for z2");
  if (n < 1) throw InputError("pebble sets P_n are defined for n >= 1");
  if (radius < 0) throw InputError("radius must be non-negative");
  constexpr std::size_t kMaxSamples = 8;

  PebbleAxiomReport r;
  r.base = base;
  r.n = n;
  r.radius = radius;
  auto note = [&](const std::string& s) {
    if (r.samples.size() < kMaxSamples) r.samples.push_back(s);
  };

  Word w(Alphabet::K);
  w.append_power('x', n - 1);
  r.contains_x_pow_n_minus_1 = in_pebble_set(evaluate_base_word(base, w), n);
  w.append_power('x', 1);
  w.append_power('y', -n);
  r.excludes_corner = !in_pebble_set(evaluate_base_word(base, w), n);

  const auto ball = base_ball(base, radius);
  r.ball_size = ball.size();
  const Letter X{'x', -1};
  const Letter Y{'y', -1};
  for (const auto& [k, d] : ball) {
    const bool member = in_pebble_set(k, n);
    const bool down_x = in_pebble_set(base_step(k, X), n);
    const bool down_y = in_pebble_set(base_step(k, Y), n);
    if (member) {
      ++r.members_in_ball;
      if (!down_x || !down_y) {
        ++r.axiom_ii_violations;
        note("(ii) " + base_to_text(k));
      }
    } else if ((down_x || down_y) && height(k) != n) {
      ++r.axiom_iii_violations;
      note("(iii) " + base_to_text(k));
    }
  }

  BaseElement power = base_identity(base);
  for (std::int64_t i = 0; i <= radius; ++i) {
    if (in_pebble_set(power, n) != (i < n)) {
      ++r.power_violations;
      note("x^" + std::to_string(i));
    }
    power = base_step(power, {'x', 1});
  }
  return r;
}

}  // namespace wreathlab
