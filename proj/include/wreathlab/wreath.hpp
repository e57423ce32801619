#pragma once

// Elements of G = Z wr K as pairs (f, k): a finitely supported lamp
// configuration f: K -> Z and a cursor k in K.
//
// The product is (f, k)(g, l) = (f + k.g, kl) where (k.g)(v) = g(k^-1 v):
// the lamps of the right factor are carried to the sites seen from the
// left factor's cursor. The lamp generator a = (delta_e, e) bumps the lamp
// under the cursor; x and y move the cursor.

#include <cstdint>
#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "wreathlab/base_groups.hpp"
#include "wreathlab/word.hpp"

namespace wreathlab {

class WreathElement {
 public:
  using Support = std::map<BaseElement, std::int64_t>;

  explicit WreathElement(BaseGroupId base = BaseGroupId::f2);
  // Validates that every site and the cursor lie in `base`; zero entries are dropped.
  WreathElement(BaseGroupId base, Support support, BaseElement cursor);

  static WreathElement identity(BaseGroupId base) { return WreathElement(base); }
  // (0, k).
  static WreathElement lift(const BaseElement& k);

  BaseGroupId base() const { return base_; }
  const Support& support() const { return support_; }
  const BaseElement& cursor() const { return cursor_; }
  bool is_identity() const;

  std::int64_t lamp(const BaseElement& site) const;
  void add_lamp(const BaseElement& site, std::int64_t delta);

  // Right-multiplies in place by one letter of the G alphabet {a, x, y}.
  void apply(Letter letter);

  friend bool operator==(const WreathElement&, const WreathElement&) = default;
  friend WreathElement w_multiply(const WreathElement& g, const WreathElement& h);

 private:
  BaseGroupId base_;
  Support support_;
  BaseElement cursor_;
};

WreathElement w_multiply(const WreathElement& g, const WreathElement& h);
WreathElement w_invert(const WreathElement& g);

// Injective byte key: equal elements give equal keys and distinct elements
// distinct keys.
std::string canonical_key(const WreathElement& g);
void append_canonical_key(std::string& out, const WreathElement& g);

// {"base": "<id>", "support": [{"site": <base text>, "value": v}, ...],
//  "cursor": <base text>}; support listed in canonical site order.
nlohmann::json to_json(const WreathElement& g);
WreathElement wreath_from_json(const nlohmann::json& j);

// ---------------------------------------------------------------------------

struct Generator {
  char symbol;
  Word expansion;  // over the G alphabet
};

// A finite generating set with each symbol expanded into a G-word.
class GeneratorSet {
 public:
  GeneratorSet(std::string name, Alphabet alphabet, std::vector<Generator> generators);

  // S_G = {a, x, y}.
  static GeneratorSet ambient();
  // T_H = {x, y, p, q} with p = sigma = [x,a]a = x^-1 a^-1 x a^2 and
  // q = tau = [y,a]a.
  static GeneratorSet subgroup_h();
  // S_K = {x, y}.
  static GeneratorSet base();

  const std::string& name() const { return name_; }
  Alphabet alphabet() const { return alphabet_; }
  const std::vector<Generator>& generators() const { return generators_; }
  // Throws InputError for a symbol outside the set.
  const Word& expansion(char symbol) const;

  // Each generator and its inverse, in a fixed order (s1, S1, s2, S2, ...).
  std::vector<Letter> letters() const;

 private:
  std::string name_;
  Alphabet alphabet_;
  std::vector<Generator> generators_;
};

// Product of the letters' images left to right.
WreathElement evaluate_word(const Word& w, const GeneratorSet& gens, BaseGroupId base);
// Convenience for G-alphabet words.
WreathElement evaluate_word(const Word& w, BaseGroupId base);

// Image of each letter in gens.letters() order.
std::vector<std::pair<Letter, WreathElement>> generator_elements(const GeneratorSet& gens,
                                                                 BaseGroupId base);

// Rewrites a word over `gens` as a G-word.
Word expand_word(const Word& w, const GeneratorSet& gens);

}  // namespace wreathlab
