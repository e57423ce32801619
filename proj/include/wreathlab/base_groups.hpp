#pragma once

// The three torsion-free base groups K supported as the "city" of a wreath
// product Z wr K, all generated by x and y:
//
//   f2    free group F(x, y), elements stored as freely reduced words
//   zwrz  Z wr Z = <s, t>, with x = ts and y = t; (lamps, cursor)
//   z2    Z^2 = <x, y | [x, y]>, elements stored as exponent pairs
//
// Every base carries the height function theta: K -> Z with
// theta(x) = theta(y) = 1.

#include <compare>
#include <cstdint>
#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "wreathlab/word.hpp"

namespace wreathlab {

enum class BaseGroupId : std::uint8_t { f2, zwrz, z2 };

std::string_view base_group_name(BaseGroupId id);
BaseGroupId parse_base_group(std::string_view name);

class FreeGroupElement {
 public:
  FreeGroupElement() = default;

  // Reduced letters in text form: x, X (= x^-1), y, Y.
  const std::string& reduced() const { return reduced_; }
  std::size_t length() const { return reduced_.size(); }
  bool is_identity() const { return reduced_.empty(); }
  Word word() const;

  // Right-multiplies by a single generator letter in place.
  void append(char text_letter);

  friend bool operator==(const FreeGroupElement&, const FreeGroupElement&) = default;
  // Shortlex order.
  friend std::strong_ordering operator<=>(const FreeGroupElement& a, const FreeGroupElement& b);

 private:
  friend FreeGroupElement fg_reduce(const std::vector<Letter>& letters);
  std::string reduced_;
};

// Free reduction. Letters must be over {x, y}; anything else is an InputError.
FreeGroupElement fg_reduce(const std::vector<Letter>& letters);

struct LamplighterElement {
  std::map<std::int64_t, std::int64_t> lamps;  // no zero settings
  std::int64_t cursor = 0;

  friend bool operator==(const LamplighterElement&, const LamplighterElement&) = default;
  friend std::strong_ordering operator<=>(const LamplighterElement& a, const LamplighterElement& b);
};

struct GridElement {
  std::int64_t ex = 0;
  std::int64_t ey = 0;

  friend bool operator==(const GridElement&, const GridElement&) = default;
  friend auto operator<=>(const GridElement&, const GridElement&) = default;
};

using BaseElement = std::variant<FreeGroupElement, LamplighterElement, GridElement>;

BaseGroupId base_group_of(const BaseElement& k);
BaseElement base_identity(BaseGroupId id);
// The generator x^{+-1} or y^{+-1} of the chosen base.
BaseElement base_generator(BaseGroupId id, Letter letter);
bool is_identity(const BaseElement& k);

// Group law. Mixed bases raise InputError.
BaseElement base_multiply(const BaseElement& g, const BaseElement& h);
BaseElement base_invert(const BaseElement& g);
// g * letter, the Cayley-graph step.
BaseElement base_step(const BaseElement& g, Letter letter);

// theta(k): exponent sum for f2 and z2, cursor position for zwrz.
std::int64_t height(const BaseElement& k);

// Membership in the pebble set P_n.
//   f2:   every prefix of the reduced word has height < n
//   zwrz: height < n and lamps supported on positions <= n - 1
// z2 raises UnsupportedError; n < 1 raises InputError.
bool in_pebble_set(const BaseElement& k, std::int64_t n);

// The four products k x, k X, k y, k Y with their labels.
std::vector<std::pair<Letter, BaseElement>> base_neighbors(const BaseElement& k);

// Evaluates a word over the K alphabet.
BaseElement evaluate_base_word(BaseGroupId id, const Word& w);
// Some word over {x, y} representing k (not necessarily geodesic except on f2).
Word base_word(const BaseElement& k);

// Cheap lower bound on the word length |k|_{x,y}, 1-Lipschitz under steps.
// Exact on f2 and z2.
std::int64_t base_length_lower_bound(const BaseElement& k);

// Injective byte encoding; appended to `out`.
void append_base_key(std::string& out, const BaseElement& k);
std::string base_key(const BaseElement& k);

// Text forms: f2 as a reduced word string ("" is the identity; "e" is
// accepted on input), zwrz as {"lamps": {"<pos>": v}, "cursor": c}, z2 as
// [ex, ey].
nlohmann::json base_to_json(const BaseElement& k);
BaseElement base_from_json(BaseGroupId id, const nlohmann::json& j);
std::string base_to_text(const BaseElement& k);

}  // namespace wreathlab
