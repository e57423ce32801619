#pragma once

// Exact word-metric distances by search in Cayley graphs of Z wr K.
//
// Nodes are deduplicated by canonical_key. Distances are exact whenever the
// search finishes inside its node budget; otherwise the result carries a
// proven lower bound and, when a path was seen, an upper bound.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wreathlab/wreath.hpp"

namespace wreathlab {

inline constexpr std::size_t kDefaultNodeBudget = 10'000'000;

enum class SearchStrategy {
  // Breadth-first from both ends, meeting in the middle.
  bidirectional,
  // A* from the identity with an admissible lamp-mass plus base-distance
  // heuristic. Suited to generating sets whose letters either move the
  // cursor or touch lamps, such as S_G.
  guided,
};

struct GeodesicResult {
  std::int64_t lower_bound = 0;
  std::optional<std::int64_t> upper_bound;
  Word witness;  // over the generating set's alphabet; set with upper_bound
  std::size_t nodes = 0;

  bool exact() const { return upper_bound && *upper_bound == lower_bound; }
  std::int64_t distance() const { return upper_bound ? *upper_bound : lower_bound; }
};

// |target| over `gens`. Raises InputError when the target is provably
// outside the generated subgroup (nonzero Phi for T_H, lamps for S_K).
GeodesicResult geodesic_length(const WreathElement& target, const GeneratorSet& gens,
                               std::size_t budget = kDefaultNodeBudget,
                               SearchStrategy strategy = SearchStrategy::bidirectional);

// Breadth-first tree rooted at one element. Nodes keep only their key, parent
// and incoming letter; elements are rebuilt from the root when needed.
class SearchTree {
 public:
  SearchTree(const WreathElement& root, const GeneratorSet& gens);

  std::int64_t depth() const { return depth_; }
  std::size_t size() const { return nodes_.size(); }
  std::size_t frontier_size() const { return frontier_.size(); }
  bool exhausted() const { return frontier_.empty(); }

  // Expands the next layer. Returns the indices of new nodes, or nullopt if
  // the tree would grow beyond `max_size` (the tree is then unusable for
  // further expansion but lookups stay valid for completed layers).
  std::optional<std::vector<std::size_t>> expand_layer(std::size_t max_size);

  std::optional<std::size_t> find(const std::string& key) const;
  const std::string& key(std::size_t node) const { return *nodes_[node].key; }
  std::int64_t dist(std::size_t node) const { return nodes_[node].dist; }
  // Letters from the root to the node.
  Word path(std::size_t node) const;
  WreathElement element(std::size_t node) const;

 private:
  struct Node {
    const std::string* key;
    std::uint32_t parent;
    Letter via;
    std::int32_t dist;
  };
  Alphabet alphabet_;
  WreathElement root_;
  std::vector<std::pair<Letter, WreathElement>> steps_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<Node> nodes_;
  std::vector<std::uint32_t> frontier_;
  std::int64_t depth_ = 0;
  bool broken_ = false;
};

// Distance oracle with a forward tree from the identity grown once, queried
// for many targets by short backward searches.
class MetricOracle {
 public:
  MetricOracle(const GeneratorSet& gens, BaseGroupId base, std::size_t forward_budget,
               std::int64_t max_forward_radius);

  std::int64_t forward_radius() const { return forward_.depth(); }
  std::size_t forward_size() const { return forward_.size(); }

  GeodesicResult distance(const WreathElement& target, std::size_t budget) const;

 private:
  GeneratorSet gens_;
  SearchTree forward_;
};

struct BallEntry {
  WreathElement element;
  std::int64_t dist;
};

struct Ball {
  std::vector<BallEntry> entries;  // breadth-first order
  std::int64_t radius = 0;         // completed radius
  bool complete = true;            // false when the budget cut the enumeration short
};

// All elements within `radius` of the identity over `gens`, with exact distances.
Ball enumerate_ball(const GeneratorSet& gens, BaseGroupId base, std::int64_t radius,
                    std::size_t budget = kDefaultNodeBudget);

}  // namespace wreathlab
