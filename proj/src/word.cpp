#include "wreathlab/word.hpp"

#include <cctype>

#include "wreathlab/errors.hpp"

namespace wreathlab {

char Letter::text() const {
  return sign > 0 ? symbol
                  : static_cast<char>(std::toupper(static_cast<unsigned char>(symbol)));
}

std::string_view alphabet_name(Alphabet a) {
  switch (a) {
    case Alphabet::G: return "G";
    case Alphabet::H: return "H";
    case Alphabet::K: return "K";
    case Alphabet::Custom: return "custom";
  }
  return "?";
}

Alphabet parse_alphabet(std::string_view name) {
  if (name == "G" || name == "g") return Alphabet::G;
  if (name == "H" || name == "h") return Alphabet::H;
  if (name == "K" || name == "k") return Alphabet::K;
  throw InputError("unknown alphabet '" + std::string(name) + "' (expected G, H or K)");
}

std::string_view alphabet_symbols(Alphabet a) {
  switch (a) {
    case Alphabet::G: return "axy";
    case Alphabet::H: return "xypq";
    case Alphabet::K: return "xy";
    case Alphabet::Custom: return "";
  }
  return "";
}

namespace {

void check_symbol(Alphabet alphabet, char symbol) {
  if (symbol < 'a' || symbol > 'z') {
    throw InputError(std::string("invalid symbol '") + symbol + "'");
  }
  auto allowed = alphabet_symbols(alphabet);
  if (alphabet != Alphabet::Custom && allowed.find(symbol) == std::string_view::npos) {
    throw InputError(std::string("symbol '") + symbol + "' is not in alphabet " +
                     std::string(alphabet_name(alphabet)));
  }
}

}  // namespace

Word::Word(Alphabet alphabet, std::vector<Letter> letters) : alphabet_(alphabet) {
  letters_.reserve(letters.size());
  for (const auto& l : letters) push_back(l);
}

void Word::push_back(Letter l) {
  check_symbol(alphabet_, l.symbol);
  if (l.sign != 1 && l.sign != -1) throw InputError("letter sign must be +1 or -1");
  letters_.push_back(l);
}

void Word::append_power(char symbol, std::int64_t exponent) {
  const Letter l{symbol, static_cast<std::int8_t>(exponent < 0 ? -1 : 1)};
  check_symbol(alphabet_, symbol);
  const auto count = exponent < 0 ? -exponent : exponent;
  letters_.insert(letters_.end(), static_cast<std::size_t>(count), l);
}

Word& Word::operator+=(const Word& other) {
  if (other.alphabet_ != alphabet_) {
    throw InputError("cannot concatenate words over different alphabets");
  }
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

Word Word::inverse() const {
  Word out(alphabet_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(it->inverse());
  return out;
}

std::string Word::to_string() const {
  std::string s;
  s.reserve(letters_.size());
  for (const auto& l : letters_) s.push_back(l.text());
  return s;
}

Word parse_word(std::string_view text, Alphabet alphabet) {
  Word w(alphabet);
  std::size_t i = 0;
  auto fail = [&](std::size_t col, const std::string& what) {
    throw InputError("parse error at column " + std::to_string(col + 1) + ": " + what);
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail(i, std::string("unexpected '") + c + "'");
    const char symbol = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    const std::int64_t base_sign = std::isupper(static_cast<unsigned char>(c)) ? -1 : 1;
    try {
      check_symbol(alphabet, symbol);
    } catch (const InputError& e) {
      fail(i, e.what());
    }
    const std::size_t letter_col = i;
    ++i;
    std::int64_t exponent = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::int64_t sign = 1;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        sign = text[i] == '-' ? -1 : 1;
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        fail(i, "expected exponent after '^'");
      }
      std::int64_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > (std::int64_t{1} << 32)) fail(letter_col, "exponent too large");
        ++i;
      }
      exponent = sign * value;
    }
    w.append_power(symbol, base_sign * exponent);
  }
  return w;
}

}  // namespace wreathlab
