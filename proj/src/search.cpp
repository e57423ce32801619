#include "wreathlab/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <unordered_set>

#include "wreathlab/errors.hpp"
#include "wreathlab/invariant.hpp"

namespace wreathlab {

SearchTree::SearchTree(const WreathElement& root, const GeneratorSet& gens)
    : alphabet_(gens.alphabet()), root_(root), steps_(generator_elements(gens, root.base())) {
  auto [it, _] = index_.emplace(canonical_key(root), 0);
  nodes_.push_back({&it->first, 0, Letter{}, 0});
  frontier_.push_back(0);
}

WreathElement SearchTree::element(std::size_t node) const {
  WreathElement g = root_;
  const Word w = path(node);
  for (const auto& l : w.letters()) {
    for (const auto& [letter, step] : steps_) {
      if (letter == l) {
        g = w_multiply(g, step);
        break;
      }
    }
  }
  return g;
}

std::optional<std::vector<std::size_t>> SearchTree::expand_layer(std::size_t max_size) {
  if (broken_) return std::nullopt;
  std::vector<std::size_t> fresh;
  std::vector<std::uint32_t> next;
  std::string key;
  for (const auto node : frontier_) {
    const WreathElement here = element(node);
    for (const auto& [letter, step] : steps_) {
      WreathElement g = w_multiply(here, step);
      key.clear();
      append_canonical_key(key, g);
      if (index_.contains(key)) continue;
      if (nodes_.size() >= max_size) {
        broken_ = true;
        return std::nullopt;
      }
      const auto idx = static_cast<std::uint32_t>(nodes_.size());
      auto [it, _] = index_.emplace(key, idx);
      nodes_.push_back({&it->first, node, letter, static_cast<std::int32_t>(depth_ + 1)});
      next.push_back(idx);
      fresh.push_back(idx);
    }
  }
  frontier_ = std::move(next);
  ++depth_;
  return fresh;
}

std::optional<std::size_t> SearchTree::find(const std::string& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Word SearchTree::path(std::size_t node) const {
  std::vector<Letter> rev;
  while (node != 0) {
    rev.push_back(nodes_[node].via);
    node = nodes_[node].parent;
  }
  std::reverse(rev.begin(), rev.end());
  return Word(alphabet_, std::move(rev));
}

namespace {

void check_target(const WreathElement& target, const GeneratorSet& gens) {
  if (gens.alphabet() == Alphabet::H && !is_in_H(target)) {
    throw InputError("target is not in H (Phi = " + phi_invariant(target).to_string() + ", lamp lattice test)");
  }
  if (gens.alphabet() == Alphabet::K && !target.support().empty()) {
    throw InputError("target has lamps set, so it is not in K");
  }
}

// Picks the lexicographically least witness among equal-length candidates.
void offer(GeodesicResult& r, std::int64_t len, Word w) {
  if (!r.upper_bound || len < *r.upper_bound ||
      (len == *r.upper_bound && w.to_string() < r.witness.to_string())) {
    r.upper_bound = len;
    r.witness = std::move(w);
  }
}

GeodesicResult bidirectional(const WreathElement& target, const GeneratorSet& gens, std::size_t budget) {
  GeodesicResult r;
  r.witness = Word(gens.alphabet());
  if (target.is_identity()) {
    r.upper_bound = 0;
    r.nodes = 1;
    return r;
  }
  SearchTree fwd(WreathElement::identity(target.base()), gens);
  SearchTree bwd(target, gens);
  const auto meet_gap = [&]() { return fwd.depth() + bwd.depth() + 1; };

  while (true) {
    const bool use_fwd =
        !fwd.exhausted() && (bwd.exhausted() || fwd.frontier_size() <= bwd.frontier_size());
    if (fwd.exhausted() && bwd.exhausted()) {
      throw InputError("target is not in the subgroup generated by " + gens.name());
    }
    SearchTree& side = use_fwd ? fwd : bwd;
    SearchTree& other = use_fwd ? bwd : fwd;
    const std::size_t room = budget > other.size() ? budget - other.size() : 0;
    auto fresh = side.expand_layer(room);
    r.nodes = fwd.size() + bwd.size();
    if (!fresh) {
      // Completed layers only: any path of length <= depth sum would have met.
      r.lower_bound = meet_gap();
      return r;
    }
    for (auto idx : *fresh) {
      auto hit = other.find(side.key(idx));
      if (!hit) continue;
      const auto f_node = use_fwd ? idx : *hit;
      const auto b_node = use_fwd ? *hit : idx;
      const auto len = fwd.dist(f_node) + bwd.dist(b_node);
      offer(r, len, fwd.path(f_node) + bwd.path(b_node).inverse());
    }
    if (r.upper_bound) {
      r.lower_bound = *r.upper_bound;
      return r;
    }
  }
}

// Lipschitz data for the guided heuristic.
struct HeuristicShape {
  std::int64_t lamp_step = 0;    // max lamp mass one letter can move
  std::int64_t cursor_step = 0;  // max base distance one letter can move the cursor
  bool pure = true;              // no letter does both
};

HeuristicShape shape_of(const std::vector<std::pair<Letter, WreathElement>>& steps) {
  HeuristicShape s;
  for (const auto& [l, g] : steps) {
    std::int64_t mass = 0;
    for (const auto& [site, v] : g.support()) mass += std::abs(v);
    const auto move = static_cast<std::int64_t>(base_word(g.cursor()).length());
    s.lamp_step = std::max(s.lamp_step, mass);
    s.cursor_step = std::max(s.cursor_step, move);
    if (mass > 0 && move > 0) s.pure = false;
  }
  return s;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

constexpr std::int64_t kUnreachable = std::int64_t{1} << 60;

std::int64_t heuristic(const WreathElement& g, const WreathElement& target, const HeuristicShape& s) {
  std::int64_t mass = 0;
  auto it = g.support().begin();
  auto jt = target.support().begin();
  const auto end_g = g.support().end();
  const auto end_t = target.support().end();
  while (it != end_g || jt != end_t) {
    if (jt == end_t || (it != end_g && it->first < jt->first)) {
      mass += std::abs(it->second);
      ++it;
    } else if (it == end_g || jt->first < it->first) {
      mass += std::abs(jt->second);
      ++jt;
    } else {
      mass += std::abs(it->second - jt->second);
      ++it;
      ++jt;
    }
  }
  const auto lb = base_length_lower_bound(base_multiply(base_invert(g.cursor()), target.cursor()));
  if ((mass > 0 && s.lamp_step == 0) || (lb > 0 && s.cursor_step == 0)) return kUnreachable;
  const auto hm = mass == 0 ? 0 : ceil_div(mass, s.lamp_step);
  const auto hc = lb == 0 ? 0 : ceil_div(lb, s.cursor_step);
  return s.pure ? hm + hc : std::max(hm, hc);
}

GeodesicResult guided(const WreathElement& target, const GeneratorSet& gens, std::size_t budget) {
  GeodesicResult r;
  r.witness = Word(gens.alphabet());
  const auto steps = generator_elements(gens, target.base());
  const auto shape = shape_of(steps);

  struct Node {
    WreathElement element;
    std::uint32_t parent;
    Letter via;
    std::int64_t g;
  };
  std::vector<Node> nodes;
  std::unordered_map<std::string, std::uint32_t> best;
  // (f, -g, insertion order)
  using Entry = std::tuple<std::int64_t, std::int64_t, std::uint32_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;

  const auto start = WreathElement::identity(target.base());
  const auto h0 = heuristic(start, target, shape);
  if (h0 >= kUnreachable) throw InputError("target is not reachable over " + gens.name());
  nodes.push_back({start, 0, Letter{}, 0});
  best.emplace(canonical_key(start), 0);
  open.emplace(h0, 0, 0);
  const std::string goal = canonical_key(target);
  std::vector<bool> closed(1, false);

  while (!open.empty()) {
    [[maybe_unused]] const auto [f, neg_g, idx] = open.top();
    open.pop();
    if (closed[idx]) continue;
    closed[idx] = true;
    const auto g_cost = nodes[idx].g;
    const auto here = canonical_key(nodes[idx].element);
    if (best.at(here) != idx) continue;  // superseded by a cheaper copy
    if (here == goal) {
      std::vector<Letter> rev;
      for (auto n = idx; n != 0; n = nodes[n].parent) rev.push_back(nodes[n].via);
      std::reverse(rev.begin(), rev.end());
      r.upper_bound = g_cost;
      r.lower_bound = g_cost;
      r.witness = Word(gens.alphabet(), std::move(rev));
      r.nodes = nodes.size();
      return r;
    }
    for (const auto& [letter, step] : steps) {
      WreathElement next = w_multiply(nodes[idx].element, step);
      auto key = canonical_key(next);
      const auto cost = g_cost + 1;
      auto it = best.find(key);
      if (it != best.end() && nodes[it->second].g <= cost) continue;
      const auto h = heuristic(next, target, shape);
      if (h >= kUnreachable) continue;
      if (nodes.size() >= budget) {
        r.lower_bound = f;
        r.nodes = nodes.size();
        return r;
      }
      const auto n = static_cast<std::uint32_t>(nodes.size());
      nodes.push_back({std::move(next), idx, letter, cost});
      closed.push_back(false);
      best[std::move(key)] = n;
      open.emplace(cost + h, -cost, n);
    }
  }
  throw InputError("target is not in the subgroup generated by " + gens.name());
}

}  // namespace

GeodesicResult geodesic_length(const WreathElement& target, const GeneratorSet& gens, std::size_t budget,
                               SearchStrategy strategy) {
  check_target(target, gens);
  if (budget < 2) throw InputError("node budget must be at least 2");
  return strategy == SearchStrategy::guided ? guided(target, gens, budget) : bidirectional(target, gens, budget);
}

// ---------------------------------------------------------------------------

MetricOracle::MetricOracle(const GeneratorSet& gens, BaseGroupId base, std::size_t forward_budget,
                           std::int64_t max_forward_radius)
    : gens_(gens), forward_(WreathElement::identity(base), gens) {
  // A layer cut short by the budget keeps its nodes; they carry true
  // distances, so lookups stay exact.
  while (forward_.depth() < max_forward_radius && !forward_.exhausted()) {
    if (!forward_.expand_layer(forward_budget)) break;
  }
}

GeodesicResult MetricOracle::distance(const WreathElement& target, std::size_t budget) const {
  check_target(target, gens_);
  GeodesicResult r;
  r.witness = Word(gens_.alphabet());
  if (auto hit = forward_.find(canonical_key(target))) {
    r.upper_bound = forward_.dist(*hit);
    r.lower_bound = *r.upper_bound;
    r.witness = forward_.path(*hit);
    r.nodes = 1;
    return r;
  }
  if (forward_.exhausted()) throw InputError("target is not in the subgroup generated by " + gens_.name());
  SearchTree bwd(target, gens_);
  while (true) {
    auto fresh = bwd.expand_layer(budget);
    r.nodes = bwd.size();
    if (!fresh) {
      r.lower_bound = forward_.depth() + bwd.depth() + 1;
      return r;
    }
    for (auto idx : *fresh) {
      auto hit = forward_.find(bwd.key(idx));
      if (!hit) continue;
      offer(r, forward_.dist(*hit) + bwd.dist(idx), forward_.path(*hit) + bwd.path(idx).inverse());
    }
    if (r.upper_bound) {
      r.lower_bound = *r.upper_bound;
      return r;
    }
    if (bwd.exhausted()) throw InputError("target is not in the subgroup generated by " + gens_.name());
  }
}

// ---------------------------------------------------------------------------

Ball enumerate_ball(const GeneratorSet& gens, BaseGroupId base, std::int64_t radius, std::size_t budget) {
  Ball ball;
  const auto steps = generator_elements(gens, base);
  std::unordered_set<std::string> seen;
  ball.entries.push_back({WreathElement::identity(base), 0});
  seen.insert(canonical_key(ball.entries.front().element));
  std::size_t layer_begin = 0;
  for (std::int64_t r = 1; r <= radius; ++r) {
    const std::size_t layer_end = ball.entries.size();
    std::vector<BallEntry> layer;
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (const auto& [letter, step] : steps) {
        WreathElement g = w_multiply(ball.entries[i].element, step);
        if (!seen.insert(canonical_key(g)).second) continue;
        if (ball.entries.size() + layer.size() >= budget) {
          ball.complete = false;
          return ball;
        }
        layer.push_back({std::move(g), r});
      }
    }
    if (layer.empty()) {
      ball.radius = radius;
      return ball;
    }
    for (auto& e : layer) ball.entries.push_back(std::move(e));
    ball.radius = r;
    layer_begin = layer_end;
  }
  return ball;
}

}  // namespace wreathlab
