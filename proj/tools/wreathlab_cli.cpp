// wreathlab: command-line front end.
//
// Machine-readable results go to stdout, one-line summaries and warnings to
// stderr. Exit codes: 0 ok, 1 verification failed, 2 bad input, 3 budget or
// cap exhausted.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wreathlab/cyclic.hpp"
#include "wreathlab/distortion.hpp"
#include "wreathlab/errors.hpp"
#include "wreathlab/invariant.hpp"
#include "wreathlab/pebbles.hpp"
#include "wreathlab/search.hpp"
#include "wreathlab/subgroups.hpp"
#include "wreathlab/witnesses.hpp"

using namespace wreathlab;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kInputError = 2;
constexpr int kResourceError = 3;

enum class Format { json, csv, text };

struct Config {
  std::string base = "f2";
  std::size_t budget = kDefaultNodeBudget;
  std::string format;
  std::uint64_t seed = 1;

  BaseGroupId base_id() const { return parse_base_group(base); }

  Format format_or(Format fallback) const {
    if (format.empty()) return fallback;
    if (format == "json") return Format::json;
    if (format == "csv") return Format::csv;
    if (format == "text") return Format::text;
    throw InputError("unknown format '" + format + "'");
  }
};

void emit(const nlohmann::json& j, Format f) {
  if (f == Format::csv) throw InputError("csv output is only available for dist");
  if (f == Format::json) {
    std::cout << j.dump() << '\n';
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

void note(const std::string& line) { std::cerr << line << '\n'; }

// "auto" picks H when the word uses p or q and G otherwise.
Alphabet pick_alphabet(const std::string& name, const std::string& word) {
  if (name != "auto") return parse_alphabet(name);
  const bool h = word.find_first_of("pPqQ") != std::string::npos;
  const bool g = word.find_first_of("aA") != std::string::npos;
  if (h && g) throw InputError("word mixes a with p/q; pass --alphabet");
  return h ? Alphabet::H : Alphabet::G;
}

WreathElement evaluate_in(const Word& w, BaseGroupId base) {
  switch (w.alphabet()) {
    case Alphabet::H:
      return evaluate_word(w, GeneratorSet::subgroup_h(), base);
    case Alphabet::K:
      return evaluate_word(w, GeneratorSet::base(), base);
    default:
      return evaluate_word(w, base);
  }
}

BaseElement parse_site(const std::string& text, BaseGroupId base) {
  if (text == "e") return base_identity(base);
  return evaluate_base_word(base, parse_word(text, Alphabet::K));
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

// "e:1,x:-1" -> {e: 1, x: -1}
WreathElement::Support parse_f_spec(const std::string& text, BaseGroupId base) {
  WreathElement::Support f;
  for (const auto& item : split(text, ',')) {
    const auto colon = item.rfind(':');
    if (colon == std::string::npos) throw InputError("f entry '" + item + "' is not site:value");
    std::int64_t v = 0;
    try {
      std::size_t used = 0;
      v = std::stoll(item.substr(colon + 1), &used);
      if (used != item.size() - colon - 1) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw InputError("bad lamp value in '" + item + "'");
    }
    f[parse_site(item.substr(0, colon), base)] += v;
  }
  std::erase_if(f, [](const auto& kv) { return kv.second == 0; });
  return f;
}

nlohmann::json geodesic_json(const GeodesicResult& r) {
  nlohmann::json j{{"distance", r.distance()},
                   {"exact", r.exact()},
                   {"lower_bound", r.lower_bound},
                   {"witness", r.witness.to_string()},
                   {"nodes", r.nodes}};
  j["upper_bound"] = r.upper_bound ? nlohmann::json(*r.upper_bound) : nlohmann::json(nullptr);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in Z wr K for K = F2, Z wr Z, Z^2"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--base", cfg.base, "base group")->check(CLI::IsMember({"f2", "zwrz", "z2"}));
  app.add_option("--budget", cfg.budget, "node budget per search")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", cfg.seed, "seed for sampled checks");

  std::string word;
  std::string alphabet = "auto";
  std::int64_t n = 1;
  std::int64_t max_n = 4;
  std::int64_t radius = 6;
  std::int64_t window = 8;
  std::string f_spec;
  std::string k_word = "x";
  std::string gens_name = "T_H";
  std::string strategy = "bidirectional";
  std::string sites_spec;
  std::size_t samples = 200;

  auto* eval = app.add_subcommand("eval", "evaluate a word");
  eval->add_option("word", word)->required();
  eval->add_option("--alphabet", alphabet, "G, H, K or auto");

  auto* member = app.add_subcommand("member", "H membership and the dyadic invariant");
  member->add_option("word", word);
  member->add_option("--alphabet", alphabet, "G, H, K or auto");

  auto* witness = app.add_subcommand("witness", "verified witness word for a^-1 x^n y^-n a");
  witness->add_option("--n", n)->check(CLI::PositiveNumber);

  auto* dist = app.add_subcommand("dist", "distortion table of H in G");
  dist->add_option("--max-n", max_n)->check(CLI::NonNegativeNumber);

  auto* pebbles = app.add_subcommand("pebbles", "verify the pebble-set axioms on a ball");
  pebbles->add_option("--n", n);
  pebbles->add_option("--radius", radius);

  auto* profile = app.add_subcommand("profile", "replay a word over x, y, p, q and check profile moves");
  profile->add_option("word", word);
  profile->add_option("--n", n);

  auto* cyclic = app.add_subcommand("cyclic", "orbit-sum analysis of <(f, k)>");
  cyclic->add_option("--f", f_spec, "lamps as site:value,...; site is a word in x, y or e");
  cyclic->add_option("--k", k_word, "word in x, y");
  cyclic->add_option("--window", window)->check(CLI::PositiveNumber);

  auto* geodesic = app.add_subcommand("geodesic", "word length of an element");
  geodesic->add_option("word", word);
  geodesic->add_option("--alphabet", alphabet, "G, H, K or auto");
  geodesic->add_option("--gens", gens_name)->check(CLI::IsMember({"S_G", "T_H", "S_K"}));
  geodesic->add_option("--strategy", strategy)->check(CLI::IsMember({"bidirectional", "guided"}));

  auto* kcheck = app.add_subcommand("kcheck", "compare |k| over S_G and over x, y");
  kcheck->add_option("--k", k_word, "word in x, y");

  auto* wcheck = app.add_subcommand("wcheck", "sampled check that a lamp subgroup is undistorted");
  wcheck->add_option("--sites", sites_spec, "comma-separated words in x, y (e for the identity)");
  wcheck->add_option("--radius", radius)->check(CLI::NonNegativeNumber);
  wcheck->add_option("--samples", samples)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    const auto base = cfg.base_id();

    if (*eval) {
      const auto w = parse_word(word, pick_alphabet(alphabet, word));
      const auto g = evaluate_in(w, base);
      const auto f = cfg.format_or(Format::json);
      if (f == Format::text) {
        std::cout << "cursor " << base_to_text(g.cursor()) << '\n';
        for (const auto& [site, v] : g.support()) std::cout << base_to_text(site) << ' ' << v << '\n';
      } else {
        emit(to_json(g), f);
      }
      note("eval: " + std::to_string(w.length()) + " letters, " + std::to_string(g.support().size()) +
           " lamps lit");
      return kOk;
    }

    if (*member) {
      const auto w = parse_word(word, pick_alphabet(alphabet, word));
      const auto m = membership(evaluate_in(w, base));
      const nlohmann::json j{{"in_H", m.in_h},
                             {"phi", m.phi.to_json()},
                             {"phi_zero", m.phi_zero},
                             {"kernel_description_asserted", m.kernel_description_asserted}};
      const auto f = cfg.format_or(Format::json);
      if (f == Format::text) {
        std::cout << (m.in_h ? "in H" : "not in H") << ", phi = " << m.phi.to_string() << '\n';
      } else {
        emit(j, f);
      }
      if (!m.kernel_description_asserted) note("warning: Phi = 0 membership on z2 is computed, not a proven description");
      if (m.phi_zero && !m.in_h) note("note: phi vanishes but the lamps are not in the lattice spanned by H");
      note(std::string("member: ") + (m.in_h ? "in H" : "not in H") + ", phi = " + m.phi.to_string());
      return kOk;
    }

    if (*witness) {
      const bool grid = base == BaseGroupId::z2;
      const auto w = grid ? grid_witness(n) : witness_word(n, base);
      const auto target = evaluate_word(corner_word(n), base);
      const bool verified = canonical_key(evaluate_word(w, GeneratorSet::subgroup_h(), base)) == canonical_key(target);
      const nlohmann::json j{{"base", cfg.base},
                             {"n", n},
                             {"word", w.to_string()},
                             {"length", w.length()},
                             {"target", corner_word(n).to_string()},
                             {"verified", verified}};
      emit(j, cfg.format_or(Format::json));
      note("witness: length " + std::to_string(w.length()) + (verified ? ", verified" : ", NOT verified"));
      return verified ? kOk : kVerificationFailed;
    }

    if (*dist) {
      DistortionOptions options;
      options.node_budget = cfg.budget;
      const auto f = cfg.format_or(Format::csv);
      auto print = [&](const DistortionReport& r) {
        if (f == Format::csv) {
          std::cout << r.to_csv();
        } else {
          emit(r.to_json(), f);
        }
      };
      try {
        const auto report = distortion_table(max_n, base, options);
        print(report);
        bool all_exact = true;
        for (const auto& r : report.rows) all_exact = all_exact && r.exact;
        note("dist: " + std::to_string(report.rows.size()) + " rows, ball " + std::to_string(report.ball_size) +
             ", " + std::to_string(report.h_elements) + " in H" + (all_exact ? "" : ", some rows inexact"));
      } catch (const DistortionCapError& e) {
        print(e.partial());
        throw;
      }
      return kOk;
    }

    if (*pebbles) {
      const auto r = verify_pebble_axioms(base, n, radius);
      emit(r.to_json(), cfg.format_or(Format::json));
      note("pebbles: " + std::to_string(r.ball_size) + " elements, " + (r.passed() ? "axioms hold" : "VIOLATIONS"));
      return r.passed() ? kOk : kVerificationFailed;
    }

    if (*profile) {
      const auto w = parse_word(word, Alphabet::H);
      const auto r = profile_transition_check(w, n, base);
      emit(r.to_json(), cfg.format_or(Format::json));
      note("profile: " + std::to_string(r.transitions) + " transitions, " + std::to_string(r.mismatches.size()) +
           " mismatches");
      return r.passed() ? kOk : kVerificationFailed;
    }

    if (*cyclic) {
      const auto f = parse_f_spec(f_spec, base);
      const auto k = parse_site(k_word, base);
      const auto a = cyclic_orbit_sum(f, k, window);
      emit(a.to_json(), cfg.format_or(Format::json));
      note("cyclic: " + std::string(cyclic_class_name(a.classification)) + " at window " +
           std::to_string(a.window) + (a.stable ? "" : " (not stable)"));
      return kOk;
    }

    if (*geodesic) {
      const auto w = parse_word(word, pick_alphabet(alphabet, word));
      const auto target = evaluate_in(w, base);
      const auto gens = gens_name == "S_G"   ? GeneratorSet::ambient()
                        : gens_name == "S_K" ? GeneratorSet::base()
                                             : GeneratorSet::subgroup_h();
      const auto s = strategy == "guided" ? SearchStrategy::guided : SearchStrategy::bidirectional;
      const auto r = geodesic_length(target, gens, cfg.budget, s);
      emit(geodesic_json(r), cfg.format_or(Format::json));
      note("geodesic: " + std::to_string(r.distance()) + (r.exact() ? " (exact)" : " (bound only)") + ", " +
           std::to_string(r.nodes) + " nodes");
      return r.exact() ? kOk : kResourceError;
    }

    if (*kcheck) {
      const auto r = k_subgroup_distance_check(parse_site(k_word, base), cfg.budget);
      emit(r.to_json(), cfg.format_or(Format::json));
      note("kcheck: d_G " + std::to_string(r.ambient.distance()) + ", d_K " + std::to_string(r.base.distance()));
      if (!r.exact()) return kResourceError;
      return r.equal() ? kOk : kVerificationFailed;
    }

    if (*wcheck) {
      std::vector<BaseElement> sites;
      for (const auto& s : split(sites_spec, ',')) sites.push_back(parse_site(s, base));
      const auto r = w_subgroup_distortion_check(sites, radius, base, cfg.budget, cfg.seed, samples);
      emit(r.to_json(), cfg.format_or(Format::json));
      note("wcheck: " + std::to_string(r.samples.size()) + " samples, fitted constant " +
           std::to_string(r.fitted_constant) + " (bound " + std::to_string(r.constant_bound) + ")");
      if (!r.all_exact) return kResourceError;
      return r.passed() ? kOk : kVerificationFailed;
    }
  } catch (const ResourceError& e) {
    note(std::string("error: ") + e.what());
    return kResourceError;
  } catch (const InputError& e) {
    note(std::string("error: ") + e.what());
    return kInputError;
  } catch (const UnsupportedError& e) {
    note(std::string("error: ") + e.what());
    return kInputError;
  } catch (const ConsistencyError& e) {
    note(std::string("error: ") + e.what());
    return kVerificationFailed;
  }
  return kOk;
}
