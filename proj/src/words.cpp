#include "torelli/words.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace torelli {

Word Word::letter(int l, int exp) {
  Word out;
  if (l < 0) throw error("word: negative letter index");
  std::int32_t s = (exp >= 0) ? (l + 1) : -(l + 1);
  for (int i = 0; i < std::abs(exp); ++i) out.w.push_back(s);
  return out;
}

Word Word::from_unreduced(const std::vector<std::int32_t>& seq) {
  Word out;
  out.w.reserve(seq.size());
  for (std::int32_t s : seq) out.append_letter(s);
  return out;
}

void Word::append_letter(std::int32_t s) {
  if (s == 0) throw error("word: zero letter");
  if (!w.empty() && w.back() == -s)
    w.pop_back();
  else
    w.push_back(s);
}

void Word::append(const Word& other) {
  for (std::int32_t s : other.w) append_letter(s);
}

Word Word::inverse() const {
  Word out;
  out.w.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.w.push_back(-*it);
  return out;
}

Word Word::pow(int e) const {
  Word out;
  const Word base = (e >= 0) ? *this : inverse();
  for (int i = 0; i < std::abs(e); ++i) out.append(base);
  return out;
}

Word operator*(const Word& a, const Word& b) {
  Word out = a;
  out.append(b);
  return out;
}

Word conjugate(const Word& a, const Word& c) {
  Word out = c;
  out.append(a);
  out.append(c.inverse());
  return out;
}

Word group_commutator(const Word& a, const Word& b) {
  Word out = a;
  out.append(b);
  out.append(a.inverse());
  out.append(b.inverse());
  return out;
}

std::vector<Int> exponent_sums(const Word& w, int nletters) {
  std::vector<Int> e(nletters);
  for (std::int32_t s : w.w) {
    int l = std::abs(s) - 1;
    if (l >= nletters) throw error("exponent_sums: letter out of range");
    e[l] += (s > 0) ? 1 : -1;
  }
  return e;
}

Word substitute(const Word& w, const std::vector<Word>& images) {
  Word out;
  std::vector<Word> inverses(images.size());
  std::vector<bool> have_inv(images.size(), false);
  for (std::int32_t s : w.w) {
    std::size_t l = static_cast<std::size_t>(std::abs(s)) - 1;
    if (l >= images.size()) throw error("substitute: letter out of range");
    if (s > 0) {
      out.append(images[l]);
    } else {
      if (!have_inv[l]) {
        inverses[l] = images[l].inverse();
        have_inv[l] = true;
      }
      out.append(inverses[l]);
    }
  }
  return out;
}

int max_letter(const Word& w) {
  int m = -1;
  for (std::int32_t s : w.w) m = std::max(m, std::abs(s) - 1);
  return m;
}

Word parse_word(const std::string& text, int g, int nletters) {
  Word out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'y'))
      throw error("parse_word: bad token '" + tok + "'");
    std::size_t p = 1;
    while (p < tok.size() && std::isdigit(static_cast<unsigned char>(tok[p]))) ++p;
    if (p == 1) throw error("parse_word: bad token '" + tok + "'");
    int idx = std::stoi(tok.substr(1, p - 1));
    int exp = 1;
    if (p < tok.size()) {
      if (tok[p] != '^' || p + 1 == tok.size())
        throw error("parse_word: bad token '" + tok + "'");
      exp = std::stoi(tok.substr(p + 1));
      if (exp == 0) throw error("parse_word: zero exponent in '" + tok + "'");
    }
    int l;
    if (tok[0] == 'x') {
      if (idx < 1 || idx > g) throw error("parse_word: index out of range in '" + tok + "'");
      l = idx - 1;
    } else {
      if (idx < 1 || g + idx - 1 >= nletters)
        throw error("parse_word: index out of range in '" + tok + "'");
      l = g + idx - 1;
    }
    out.append(Word::letter(l, exp));
  }
  return out;
}

std::string format_word(const Word& w, int g) {
  if (w.empty()) return "";
  std::ostringstream os;
  // coalesce runs of the same signed letter into one token with an exponent
  std::size_t i = 0;
  bool first = true;
  while (i < w.w.size()) {
    std::size_t j = i;
    while (j < w.w.size() && w.w[j] == w.w[i]) ++j;
    int l = std::abs(w.w[i]) - 1;
    int exp = static_cast<int>(j - i) * ((w.w[i] > 0) ? 1 : -1);
    if (!first) os << ' ';
    first = false;
    if (l < g)
      os << 'x' << (l + 1);
    else
      os << 'y' << (l - g + 1);
    if (exp != 1) os << '^' << exp;
    i = j;
  }
  return os.str();
}

std::string boundary_name(Boundary b) {
  return b == Boundary::admissible ? "admissible" : "longitude";
}

Boundary boundary_from_name(const std::string& name) {
  if (name == "admissible") return Boundary::admissible;
  if (name == "longitude") return Boundary::longitude;
  throw error("unknown boundary convention '" + name + "'");
}

Word boundary_word(int g, Boundary b) {
  if (g < 1) throw error("boundary_word: genus must be positive");
  Word out;
  if (b == Boundary::admissible) {
    for (int i = 0; i < g; ++i)
      out.append(group_commutator(Word::letter(i), Word::letter(g + i)));
  } else {
    Word prod;
    for (int i = 0; i < g; ++i) prod.append(Word::letter(i));
    out = prod.inverse();
    for (int i = 0; i < g; ++i)
      out.append(conjugate(Word::letter(i), Word::letter(g + i)));
  }
  return out;
}

} // namespace torelli
