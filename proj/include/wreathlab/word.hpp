#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wreathlab {

// A generator symbol with an exponent sign. Symbols are lowercase characters;
// in text form an uppercase character denotes the inverse.
struct Letter {
  char symbol = 'x';
  std::int8_t sign = 1;

  Letter inverse() const { return {symbol, static_cast<std::int8_t>(-sign)}; }
  char text() const;

  friend bool operator==(const Letter&, const Letter&) = default;
};

// Named alphabets. G = {a,x,y} (ambient group), H = {x,y,p,q} with p = sigma
// and q = tau, K = {x,y} (base group). Custom alphabets are used for
// generator sets built on the fly (translated lamp generators).
enum class Alphabet { G, H, K, Custom };

std::string_view alphabet_name(Alphabet a);
Alphabet parse_alphabet(std::string_view name);
// Symbols admitted by a named alphabet; empty for Custom (anything lowercase).
std::string_view alphabet_symbols(Alphabet a);

class Word {
 public:
  Word() = default;
  explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}
  Word(Alphabet alphabet, std::vector<Letter> letters);

  Alphabet alphabet() const { return alphabet_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void push_back(Letter l);
  // Appends symbol^exponent.
  void append_power(char symbol, std::int64_t exponent);
  Word& operator+=(const Word& other);
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  Word inverse() const;
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  Alphabet alphabet_ = Alphabet::G;
  std::vector<Letter> letters_;
};

// Parses case-inverse word syntax. Whitespace is ignored; "x^3" and "x^-2"
// expand to repeated letters (an uppercase base letter inverts the exponent).
// Throws InputError naming the offending column.
Word parse_word(std::string_view text, Alphabet alphabet);

}  // namespace wreathlab
