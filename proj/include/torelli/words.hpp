#pragma once

#include "torelli/bigint.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace torelli {

// Freely reduced word in a free group. Letters are numbered 0..n-1; an
// occurrence of letter l is stored as l+1, its inverse as -(l+1). For a
// genus g surface group the alphabet is x_1..x_g, y_1..y_g with
// x_i = i-1 and y_i = g+i-1; words in the x block alone double as words
// in the rank g free group used for braid longitudes.
struct Word {
  std::vector<std::int32_t> w;

  Word() = default;

  static Word letter(int l, int exp = 1);
  static Word from_unreduced(const std::vector<std::int32_t>& seq);

  bool empty() const { return w.empty(); }
  std::size_t length() const { return w.size(); }

  Word inverse() const;
  Word pow(int e) const;

  bool operator==(const Word&) const = default;

  // appends (reducing at the seam)
  void append(const Word& other);
  void append_letter(std::int32_t signed_letter);
};

Word operator*(const Word& a, const Word& b);
// c a c^-1
Word conjugate(const Word& a, const Word& c);
// a b a^-1 b^-1
Word group_commutator(const Word& a, const Word& b);

// exponent sum of each letter (image in the free abelianization)
std::vector<Int> exponent_sums(const Word& w, int nletters);

// w with every letter replaced by its image; images[l] for letter l.
Word substitute(const Word& w, const std::vector<Word>& images);

// Largest letter index mentioned, or -1 for the empty word.
int max_letter(const Word& w);

// Token syntax: whitespace separated x<i> / y<i>, optional ^<exp> with a
// nonzero integer exponent. g is the size of the x block; letters y<i> are
// rejected when nletters <= g. The empty string is the identity.
Word parse_word(const std::string& text, int g, int nletters);
std::string format_word(const Word& w, int g);

enum class Boundary { admissible, longitude };

std::string boundary_name(Boundary b);
Boundary boundary_from_name(const std::string& name);

// The two boundary words in the genus g surface group:
//   admissible: [x_1,y_1][x_2,y_2]...[x_g,y_g]
//   longitude:  (x_1...x_g)^-1 (y_1 x_1 y_1^-1)(y_2 x_2 y_2^-1)...(y_g x_g y_g^-1)
Word boundary_word(int g, Boundary b);

} // namespace torelli
