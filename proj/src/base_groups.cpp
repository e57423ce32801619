#include "wreathlab/base_groups.hpp"

#include <algorithm>
#include <cstdlib>

#include "wreathlab/errors.hpp"
#include "wreathlab/keys.hpp"

namespace wreathlab {

std::string_view base_group_name(BaseGroupId id) {
  switch (id) {
    case BaseGroupId::f2: return "f2";
    case BaseGroupId::zwrz: return "zwrz";
    case BaseGroupId::z2: return "z2";
  }
  return "?";
}

BaseGroupId parse_base_group(std::string_view name) {
  if (name == "f2") return BaseGroupId::f2;
  if (name == "zwrz") return BaseGroupId::zwrz;
  if (name == "z2") return BaseGroupId::z2;
  throw InputError("unknown base group '" + std::string(name) + "' (expected f2, zwrz or z2)");
}

// ---------------------------------------------------------------------------
// F2

namespace {

char flip_case(char c) { return c == 'x' ? 'X' : c == 'X' ? 'x' : c == 'y' ? 'Y' : 'y'; }

bool is_f2_text_letter(char c) { return c == 'x' || c == 'X' || c == 'y' || c == 'Y'; }

}  // namespace

void FreeGroupElement::append(char c) {
  if (!is_f2_text_letter(c)) throw InputError(std::string("unknown free group letter '") + c + "'");
  if (!reduced_.empty() && reduced_.back() == flip_case(c)) {
    reduced_.pop_back();
  } else {
    reduced_.push_back(c);
  }
}

Word FreeGroupElement::word() const {
  Word w(Alphabet::K);
  for (char c : reduced_) {
    w.push_back(Letter{static_cast<char>(c == 'X' ? 'x' : c == 'Y' ? 'y' : c),
                       static_cast<std::int8_t>(c == 'X' || c == 'Y' ? -1 : 1)});
  }
  return w;
}

std::strong_ordering operator<=>(const FreeGroupElement& a, const FreeGroupElement& b) {
  if (auto c = a.reduced_.size() <=> b.reduced_.size(); c != 0) return c;
  return a.reduced_.compare(b.reduced_) <=> 0;
}

FreeGroupElement fg_reduce(const std::vector<Letter>& letters) {
  FreeGroupElement out;
  for (const auto& l : letters) {
    if (l.symbol != 'x' && l.symbol != 'y') {
      throw InputError(std::string("unknown free group symbol '") + l.symbol + "'");
    }
    out.append(l.text());
  }
  return out;
}

std::strong_ordering operator<=>(const LamplighterElement& a, const LamplighterElement& b) {
  if (auto c = a.cursor <=> b.cursor; c != 0) return c;
  if (a.lamps == b.lamps) return std::strong_ordering::equal;
  return std::lexicographical_compare(a.lamps.begin(), a.lamps.end(), b.lamps.begin(), b.lamps.end())
             ? std::strong_ordering::less
             : std::strong_ordering::greater;
}

// ---------------------------------------------------------------------------
// Generic dispatch

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

void bump(std::map<std::int64_t, std::int64_t>& lamps, std::int64_t pos, std::int64_t delta) {
  if (delta == 0) return;
  auto [it, inserted] = lamps.try_emplace(pos, delta);
  if (!inserted) {
    it->second += delta;
    if (it->second == 0) lamps.erase(it);
  }
}

void check_letter(Letter l) {
  if ((l.symbol != 'x' && l.symbol != 'y') || (l.sign != 1 && l.sign != -1)) {
    throw InputError(std::string("base groups are generated by x and y, got '") + l.text() + "'");
  }
}

}  // namespace

BaseGroupId base_group_of(const BaseElement& k) { return static_cast<BaseGroupId>(k.index()); }

BaseElement base_identity(BaseGroupId id) {
  switch (id) {
    case BaseGroupId::f2: return FreeGroupElement{};
    case BaseGroupId::zwrz: return LamplighterElement{};
    case BaseGroupId::z2: return GridElement{};
  }
  throw InputError("unknown base group");
}

BaseElement base_generator(BaseGroupId id, Letter letter) { return base_step(base_identity(id), letter); }

bool is_identity(const BaseElement& k) {
  return std::visit(overloaded{
                        [](const FreeGroupElement& g) { return g.is_identity(); },
                        [](const LamplighterElement& g) { return g.cursor == 0 && g.lamps.empty(); },
                        [](const GridElement& g) { return g.ex == 0 && g.ey == 0; },
                    },
                    k);
}

BaseElement base_step(const BaseElement& g, Letter letter) {
  check_letter(letter);
  return std::visit(overloaded{
                        [&](FreeGroupElement e) -> BaseElement {
                          e.append(letter.text());
                          return e;
                        },
                        [&](LamplighterElement e) -> BaseElement {
                          // x = ts: move, then bump the lamp; x^-1 undoes it.
                          if (letter.symbol == 'x') {
                            if (letter.sign > 0) {
                              ++e.cursor;
                              bump(e.lamps, e.cursor, 1);
                            } else {
                              bump(e.lamps, e.cursor, -1);
                              --e.cursor;
                            }
                          } else {
                            e.cursor += letter.sign;
                          }
                          return e;
                        },
                        [&](GridElement e) -> BaseElement {
                          (letter.symbol == 'x' ? e.ex : e.ey) += letter.sign;
                          return e;
                        },
                    },
                    g);
}

BaseElement base_multiply(const BaseElement& g, const BaseElement& h) {
  if (g.index() != h.index()) throw InputError("cannot multiply elements of different base groups");
  switch (base_group_of(g)) {
    case BaseGroupId::f2: {
      FreeGroupElement out = std::get<FreeGroupElement>(g);
      for (char c : std::get<FreeGroupElement>(h).reduced()) out.append(c);
      return out;
    }
    case BaseGroupId::zwrz: {
      const auto& a = std::get<LamplighterElement>(g);
      const auto& b = std::get<LamplighterElement>(h);
      LamplighterElement out = a;
      for (const auto& [pos, v] : b.lamps) bump(out.lamps, a.cursor + pos, v);
      out.cursor = a.cursor + b.cursor;
      return out;
    }
    case BaseGroupId::z2: {
      const auto& a = std::get<GridElement>(g);
      const auto& b = std::get<GridElement>(h);
      return GridElement{a.ex + b.ex, a.ey + b.ey};
    }
  }
  throw InputError("unknown base group");
}

BaseElement base_invert(const BaseElement& g) {
  return std::visit(overloaded{
                        [](const FreeGroupElement& e) -> BaseElement {
                          FreeGroupElement out;
                          const auto& s = e.reduced();
                          for (auto it = s.rbegin(); it != s.rend(); ++it) out.append(flip_case(*it));
                          return out;
                        },
                        [](const LamplighterElement& e) -> BaseElement {
                          LamplighterElement out;
                          out.cursor = -e.cursor;
                          for (const auto& [pos, v] : e.lamps) out.lamps.emplace(pos - e.cursor, -v);
                          return out;
                        },
                        [](const GridElement& e) -> BaseElement { return GridElement{-e.ex, -e.ey}; },
                    },
                    g);
}

std::int64_t height(const BaseElement& k) {
  return std::visit(overloaded{
                        [](const FreeGroupElement& e) {
                          std::int64_t h = 0;
                          for (char c : e.reduced()) h += (c == 'x' || c == 'y') ? 1 : -1;
                          return h;
                        },
                        [](const LamplighterElement& e) { return e.cursor; },
                        [](const GridElement& e) { return e.ex + e.ey; },
                    },
                    k);
}

bool in_pebble_set(const BaseElement& k, std::int64_t n) {
  if (n < 1) throw InputError("pebble sets P_n are defined for n >= 1");
  switch (base_group_of(k)) {
    case BaseGroupId::f2: {
      std::int64_t h = 0;
      for (char c : std::get<FreeGroupElement>(k).reduced()) {
        h += (c == 'x' || c == 'y') ? 1 : -1;
        if (h >= n) return false;
      }
      return true;
    }
    case BaseGroupId::zwrz: {
      const auto& e = std::get<LamplighterElement>(k);
      if (e.cursor >= n) return false;
      return e.lamps.empty() || e.lamps.rbegin()->first <= n - 1;
    }
    case BaseGroupId::z2:
      throw UnsupportedError("pebble sets unsupported for z2");
  }
  throw InputError("unknown base group");
}

std::vector<std::pair<Letter, BaseElement>> base_neighbors(const BaseElement& k) {
  std::vector<std::pair<Letter, BaseElement>> out;
  out.reserve(4);
  for (Letter l : {Letter{'x', 1}, Letter{'x', -1}, Letter{'y', 1}, Letter{'y', -1}}) {
    out.emplace_back(l, base_step(k, l));
  }
  return out;
}

BaseElement evaluate_base_word(BaseGroupId id, const Word& w) {
  if (id == BaseGroupId::f2) return fg_reduce(w.letters());
  BaseElement k = base_identity(id);
  for (const auto& l : w.letters()) k = base_step(k, l);
  return k;
}

Word base_word(const BaseElement& k) {
  return std::visit(overloaded{
                        [](const FreeGroupElement& e) { return e.word(); },
                        [](const LamplighterElement& e) {
                          // t = y and s = y^-1 x.
                          Word w(Alphabet::K);
                          std::int64_t at = 0;
                          for (const auto& [pos, v] : e.lamps) {
                            w.append_power('y', pos - at);
                            at = pos;
                            for (std::int64_t i = 0; i < std::abs(v); ++i) {
                              if (v > 0) {
                                w.push_back({'y', -1});
                                w.push_back({'x', 1});
                              } else {
                                w.push_back({'x', -1});
                                w.push_back({'y', 1});
                              }
                            }
                          }
                          w.append_power('y', e.cursor - at);
                          return w;
                        },
                        [](const GridElement& e) {
                          Word w(Alphabet::K);
                          w.append_power('x', e.ex);
                          w.append_power('y', e.ey);
                          return w;
                        },
                    },
                    k);
}

std::int64_t base_length_lower_bound(const BaseElement& k) {
  return std::visit(overloaded{
                        [](const FreeGroupElement& e) { return static_cast<std::int64_t>(e.length()); },
                        [](const LamplighterElement& e) {
                          std::int64_t mass = 0;
                          for (const auto& [pos, v] : e.lamps) mass += std::abs(v);
                          return std::max(mass, std::abs(e.cursor));
                        },
                        [](const GridElement& e) { return std::abs(e.ex) + std::abs(e.ey); },
                    },
                    k);
}

void append_base_key(std::string& out, const BaseElement& k) {
  std::visit(overloaded{
                 [&](const FreeGroupElement& e) {
                   keys::append_unsigned(out, e.length());
                   out += e.reduced();
                 },
                 [&](const LamplighterElement& e) {
                   keys::append_signed(out, e.cursor);
                   keys::append_unsigned(out, e.lamps.size());
                   for (const auto& [pos, v] : e.lamps) {
                     keys::append_signed(out, pos);
                     keys::append_signed(out, v);
                   }
                 },
                 [&](const GridElement& e) {
                   keys::append_signed(out, e.ex);
                   keys::append_signed(out, e.ey);
                 },
             },
             k);
}

std::string base_key(const BaseElement& k) {
  std::string out;
  out.push_back(static_cast<char>(k.index()));
  append_base_key(out, k);
  return out;
}

nlohmann::json base_to_json(const BaseElement& k) {
  return std::visit(overloaded{
                        [](const FreeGroupElement& e) { return nlohmann::json(e.reduced()); },
                        [](const LamplighterElement& e) {
                          nlohmann::json lamps = nlohmann::json::object();
                          for (const auto& [pos, v] : e.lamps) lamps[std::to_string(pos)] = v;
                          return nlohmann::json{{"lamps", lamps}, {"cursor", e.cursor}};
                        },
                        [](const GridElement& e) { return nlohmann::json::array({e.ex, e.ey}); },
                    },
                    k);
}

BaseElement base_from_json(BaseGroupId id, const nlohmann::json& j) {
  try {
    switch (id) {
      case BaseGroupId::f2: {
        const auto s = j.get<std::string>();
        if (s == "e") return FreeGroupElement{};
        FreeGroupElement out;
        for (char c : s) out.append(c);
        return out;
      }
      case BaseGroupId::zwrz: {
        LamplighterElement out;
        out.cursor = j.at("cursor").get<std::int64_t>();
        for (const auto& [pos, v] : j.at("lamps").items()) {
          std::size_t used = 0;
          const auto p = std::stoll(pos, &used);
          if (used != pos.size()) throw InputError("bad lamp position '" + pos + "'");
          bump(out.lamps, p, v.get<std::int64_t>());
        }
        return out;
      }
      case BaseGroupId::z2: {
        if (!j.is_array() || j.size() != 2) throw InputError("z2 element must be [ex, ey]");
        return GridElement{j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed base element: ") + e.what());
  } catch (const std::logic_error& e) {
    throw InputError(std::string("malformed base element: ") + e.what());
  }
  throw InputError("unknown base group");
}

std::string base_to_text(const BaseElement& k) {
  if (const auto* f = std::get_if<FreeGroupElement>(&k)) return f->is_identity() ? "e" : f->reduced();
  return base_to_json(k).dump();
}

}  // namespace wreathlab
