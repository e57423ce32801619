#include "wreathlab/wreath.hpp"

#include <algorithm>

#include "wreathlab/errors.hpp"
#include "wreathlab/keys.hpp"

namespace wreathlab {

namespace {

void check_site(BaseGroupId base, const BaseElement& k) {
  if (base_group_of(k) != base) {
    throw InputError("element of " + std::string(base_group_name(base_group_of(k))) +
                     " used in a wreath product over " + std::string(base_group_name(base)));
  }
}

}  // namespace

WreathElement::WreathElement(BaseGroupId base) : base_(base), cursor_(base_identity(base)) {}

WreathElement::WreathElement(BaseGroupId base, Support support, BaseElement cursor)
    : base_(base), cursor_(std::move(cursor)) {
  check_site(base_, cursor_);
  for (auto& [site, v] : support) {
    check_site(base_, site);
    if (v != 0) support_.emplace(site, v);
  }
}

WreathElement WreathElement::lift(const BaseElement& k) {
  return WreathElement(base_group_of(k), {}, k);
}

bool WreathElement::is_identity() const { return support_.empty() && wreathlab::is_identity(cursor_); }

std::int64_t WreathElement::lamp(const BaseElement& site) const {
  auto it = support_.find(site);
  return it == support_.end() ? 0 : it->second;
}

void WreathElement::add_lamp(const BaseElement& site, std::int64_t delta) {
  check_site(base_, site);
  if (delta == 0) return;
  auto [it, inserted] = support_.try_emplace(site, delta);
  if (!inserted) {
    it->second += delta;
    if (it->second == 0) support_.erase(it);
  }
}

void WreathElement::apply(Letter letter) {
  if (letter.symbol == 'a') {
    auto [it, inserted] = support_.try_emplace(cursor_, letter.sign);
    if (!inserted) {
      it->second += letter.sign;
      if (it->second == 0) support_.erase(it);
    }
    return;
  }
  cursor_ = base_step(cursor_, letter);
}

WreathElement w_multiply(const WreathElement& g, const WreathElement& h) {
  if (g.base() != h.base()) throw InputError("cannot multiply elements over different base groups");
  WreathElement out = g;
  for (const auto& [site, v] : h.support()) out.add_lamp(base_multiply(g.cursor(), site), v);
  out.cursor_ = base_multiply(g.cursor(), h.cursor());
  return out;
}

WreathElement w_invert(const WreathElement& g) {
  const BaseElement inv = base_invert(g.cursor());
  WreathElement::Support support;
  for (const auto& [site, v] : g.support()) support.emplace(base_multiply(inv, site), -v);
  return WreathElement(g.base(), std::move(support), inv);
}

void append_canonical_key(std::string& out, const WreathElement& g) {
  out.push_back(static_cast<char>(g.base()));
  append_base_key(out, g.cursor());
  keys::append_unsigned(out, g.support().size());
  for (const auto& [site, v] : g.support()) {
    append_base_key(out, site);
    keys::append_signed(out, v);
  }
}

std::string canonical_key(const WreathElement& g) {
  std::string out;
  append_canonical_key(out, g);
  return out;
}

nlohmann::json to_json(const WreathElement& g) {
  nlohmann::json support = nlohmann::json::array();
  for (const auto& [site, v] : g.support()) support.push_back({{"site", base_to_json(site)}, {"value", v}});
  return {{"base", base_group_name(g.base())}, {"support", support}, {"cursor", base_to_json(g.cursor())}};
}

WreathElement wreath_from_json(const nlohmann::json& j) {
  try {
    const auto base = parse_base_group(j.at("base").get<std::string>());
    WreathElement out(base, {}, base_from_json(base, j.at("cursor")));
    for (const auto& entry : j.at("support")) {
      out.add_lamp(base_from_json(base, entry.at("site")), entry.at("value").get<std::int64_t>());
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed wreath element: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

GeneratorSet::GeneratorSet(std::string name, Alphabet alphabet, std::vector<Generator> generators)
    : name_(std::move(name)), alphabet_(alphabet), generators_(std::move(generators)) {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].expansion.alphabet() != Alphabet::G) {
      throw InputError("generator expansions must be words over the G alphabet");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (generators_[j].symbol == generators_[i].symbol) {
        throw InputError(std::string("duplicate generator symbol '") + generators_[i].symbol + "'");
      }
    }
  }
}

GeneratorSet GeneratorSet::ambient() {
  return GeneratorSet("S_G", Alphabet::G,
                      {{'a', parse_word("a", Alphabet::G)},
                       {'x', parse_word("x", Alphabet::G)},
                       {'y', parse_word("y", Alphabet::G)}});
}

GeneratorSet GeneratorSet::subgroup_h() {
  return GeneratorSet("T_H", Alphabet::H,
                      {{'x', parse_word("x", Alphabet::G)},
                       {'y', parse_word("y", Alphabet::G)},
                       {'p', parse_word("XAxaa", Alphabet::G)},
                       {'q', parse_word("YAyaa", Alphabet::G)}});
}

GeneratorSet GeneratorSet::base() {
  return GeneratorSet("S_K", Alphabet::K,
                      {{'x', parse_word("x", Alphabet::G)}, {'y', parse_word("y", Alphabet::G)}});
}

const Word& GeneratorSet::expansion(char symbol) const {
  for (const auto& g : generators_) {
    if (g.symbol == symbol) return g.expansion;
  }
  throw InputError(std::string("symbol '") + symbol + "' is not a generator of " + name_);
}

std::vector<Letter> GeneratorSet::letters() const {
  std::vector<Letter> out;
  out.reserve(2 * generators_.size());
  for (const auto& g : generators_) {
    out.push_back({g.symbol, 1});
    out.push_back({g.symbol, -1});
  }
  return out;
}

namespace {

void check_compatible(const Word& w, const GeneratorSet& gens) {
  if (w.alphabet() != gens.alphabet()) {
    throw InputError("word over alphabet " + std::string(alphabet_name(w.alphabet())) +
                     " cannot be evaluated with generating set " + gens.name());
  }
}

}  // namespace

WreathElement evaluate_word(const Word& w, const GeneratorSet& gens, BaseGroupId base) {
  check_compatible(w, gens);
  struct Images {
    char symbol;
    std::vector<Letter> forward;
    std::vector<Letter> backward;
  };
  std::vector<Images> images;
  for (const auto& g : gens.generators()) {
    images.push_back({g.symbol, g.expansion.letters(), g.expansion.inverse().letters()});
  }
  WreathElement out(base);
  for (const auto& l : w.letters()) {
    auto it = std::find_if(images.begin(), images.end(), [&](const Images& im) { return im.symbol == l.symbol; });
    if (it == images.end()) {
      throw InputError(std::string("symbol '") + l.symbol + "' is not a generator of " + gens.name());
    }
    for (const auto& g : l.sign > 0 ? it->forward : it->backward) out.apply(g);
  }
  return out;
}

WreathElement evaluate_word(const Word& w, BaseGroupId base) {
  return evaluate_word(w, GeneratorSet::ambient(), base);
}

std::vector<std::pair<Letter, WreathElement>> generator_elements(const GeneratorSet& gens, BaseGroupId base) {
  std::vector<std::pair<Letter, WreathElement>> out;
  for (const auto& l : gens.letters()) {
    Word w(gens.alphabet());
    w.push_back(l);
    out.emplace_back(l, evaluate_word(w, gens, base));
  }
  return out;
}

Word expand_word(const Word& w, const GeneratorSet& gens) {
  check_compatible(w, gens);
  Word out(Alphabet::G);
  for (const auto& l : w.letters()) {
    const Word& e = gens.expansion(l.symbol);
    out += l.sign > 0 ? e : e.inverse();
  }
  return out;
}

}  // namespace wreathlab
