#include "wreathlab/invariant.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <vector>

namespace wreathlab {

namespace {

// Settings pushed towards the root: an upper child passes half its value to
// its parent (odd means outside H), a lower child passes twice its value.
template <typename Node>
bool strip_tree(std::map<Node, BigInt> values, const std::function<std::int64_t(const Node&)>& depth,
                const std::function<std::optional<std::pair<Node, bool>>(const Node&)>& parent) {
  std::map<std::int64_t, std::vector<Node>> by_depth;
  for (const auto& [node, v] : values) by_depth[depth(node)].push_back(node);
  while (!by_depth.empty()) {
    auto deepest = std::prev(by_depth.end());
    const auto nodes = std::move(deepest->second);
    by_depth.erase(deepest);
    for (const auto& node : nodes) {
      auto it = values.find(node);
      if (it == values.end()) continue;
      BigInt v = std::move(it->second);
      values.erase(it);
      const auto up = parent(node);
      if (!up) {
        if (v != 0) return false;
        continue;
      }
      const auto& [p, child_is_upper] = *up;
      if (child_is_upper) {
        if (v % 2 != 0) return false;
        v /= 2;
      } else {
        v *= 2;
      }
      auto [pit, fresh] = values.try_emplace(p, 0);
      pit->second += v;
      if (fresh) by_depth[depth(p)].push_back(p);
    }
  }
  return true;
}

// Tree rooted at e; the parent of a reduced word drops its last letter.
bool f2_member(const WreathElement& g) {
  std::map<std::string, BigInt> values;
  for (const auto& [site, v] : g.support()) values[std::get<FreeGroupElement>(site).reduced()] += v;
  return strip_tree<std::string>(
      std::move(values), [](const std::string& w) { return static_cast<std::int64_t>(w.size()); },
      [](const std::string& w) -> std::optional<std::pair<std::string, bool>> {
        if (w.empty()) return std::nullopt;
        const char last = w.back();
        return std::pair{w.substr(0, w.size() - 1), last == 'x' || last == 'y'};
      });
}

// Node (h, lamps at positions <= h); its parent is (h - 1, lamps at
// positions <= h - 1). Below every height and lamp position all nodes merge.
bool zwrz_member(const WreathElement& g) {
  using Node = std::pair<std::int64_t, std::map<std::int64_t, std::int64_t>>;
  std::int64_t root = std::numeric_limits<std::int64_t>::max();
  for (const auto& [site, v] : g.support()) {
    const auto& k = std::get<LamplighterElement>(site);
    root = std::min(root, k.cursor);
    if (!k.lamps.empty()) root = std::min(root, k.lamps.begin()->first - 1);
  }
  std::map<Node, BigInt> values;
  for (const auto& [site, v] : g.support()) {
    const auto& k = std::get<LamplighterElement>(site);
    auto lamps = k.lamps;
    lamps.erase(lamps.upper_bound(k.cursor), lamps.end());
    values[{k.cursor, std::move(lamps)}] += v;
  }
  return strip_tree<Node>(
      std::move(values), [](const Node& n) { return n.first; },
      [root](const Node& n) -> std::optional<std::pair<Node, bool>> {
        if (n.first <= root) return std::nullopt;
        auto lamps = n.second;
        lamps.erase(n.first);
        return std::pair{Node{n.first - 1, std::move(lamps)}, true};
      });
}

}  // namespace

std::map<std::int64_t, std::int64_t> height_totals(const WreathElement& g) {
  std::map<std::int64_t, std::int64_t> totals;
  for (const auto& [site, v] : g.support()) totals[height(site)] += v;
  std::erase_if(totals, [](const auto& kv) { return kv.second == 0; });
  return totals;
}

Dyadic phi_invariant(const WreathElement& g) {
  const auto totals = height_totals(g);
  if (totals.empty()) return Dyadic{};
  // Scale by 2^top so every term is an integer.
  const std::int64_t top = totals.rbegin()->first;
  BigInt sum = 0;
  for (const auto& [h, v] : totals) sum += BigInt(v) << static_cast<unsigned>(top - h);
  return Dyadic::scaled(std::move(sum), top);
}

Membership membership(const WreathElement& g) {
  Membership m;
  m.phi = phi_invariant(g);
  m.phi_zero = m.phi.is_zero();
  m.in_h = m.phi_zero && is_in_H(g);
  m.kernel_description_asserted = g.base() != BaseGroupId::z2;
  return m;
}

bool is_in_H(const WreathElement& g) {
  if (!phi_invariant(g).is_zero()) return false;
  switch (g.base()) {
    case BaseGroupId::f2:
      return f2_member(g);
    case BaseGroupId::zwrz:
      return zwrz_member(g);
    case BaseGroupId::z2:
      break;
  }
  return true;
}

}  // namespace wreathlab
