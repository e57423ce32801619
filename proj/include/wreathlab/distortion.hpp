#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "wreathlab/errors.hpp"
#include "wreathlab/search.hpp"
#include "wreathlab/wreath.hpp"

namespace wreathlab {

// Dist(n) = max{ |g|_T : g in H, |g|_S <= n } with S = S_G and T = T_H.
struct DistortionRow {
  std::int64_t n = 0;
  std::int64_t dist = 0;
  bool exact = true;
  Word witness{Alphabet::H};              // T_H word for a maximizer
  std::optional<WreathElement> element;   // the maximizer, when enumerated
};

struct DistortionReport {
  BaseGroupId base = BaseGroupId::f2;
  std::string ambient_generators = "S_G";
  std::string subgroup_generators = "T_H";
  std::int64_t ball_radius = 0;      // S_G ball enumerated exhaustively
  std::int64_t forward_radius = 0;   // T_H tree shared by the distance queries
  std::size_t ball_size = 0;
  std::size_t h_elements = 0;        // ball elements in H
  bool kernel_description_asserted = true;
  std::vector<DistortionRow> rows;

  const DistortionRow* row(std::int64_t n) const;
  std::string to_csv() const;
  nlohmann::json to_json() const;
};

struct DistortionOptions {
  std::size_t node_budget = kDefaultNodeBudget;   // ball enumeration and each distance query
  std::size_t forward_budget = 1'000'000;         // shared T_H tree
  std::optional<std::int64_t> cap;                // defaults: f2 8, zwrz 7, z2 8
};

std::int64_t default_distortion_cap(BaseGroupId base);

// Raised when max_n exceeds the cap; carries the rows computed up to the cap
// followed by witness-based lower-bound rows Dist(2m+2) >= 2^m - 1.
class DistortionCapError : public ResourceError {
 public:
  DistortionCapError(const std::string& what, DistortionReport partial)
      : ResourceError(what), partial_(std::move(partial)) {}
  const DistortionReport& partial() const { return partial_; }

 private:
  DistortionReport partial_;
};

DistortionReport distortion_table(std::int64_t max_n, BaseGroupId base, const DistortionOptions& options = {});

}  // namespace wreathlab
