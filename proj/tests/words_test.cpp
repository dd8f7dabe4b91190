#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torelli/util.hpp"
#include "torelli/words.hpp"

using namespace torelli;

namespace {

Word random_word(Rng& rng, int nletters, int len) {
  Word w;
  for (int i = 0; i < len; ++i) {
    int l = static_cast<int>(rng.below(static_cast<std::uint64_t>(nletters)));
    w.append_letter(rng.pick_sign() * (l + 1));
  }
  return w;
}

} // namespace

TEST_CASE("free reduction") {
  Word w = Word::letter(0) * Word::letter(0).inverse();
  CHECK(w.length() == 0);
  Word u = Word::from_unreduced({1, -1, 2, -2, 1});
  REQUIRE(u.length() == 1);
  CHECK(u == Word::letter(0));
  Word c = Word::letter(0) * Word::letter(1) * Word::letter(1).inverse() * Word::letter(0);
  CHECK(c == Word::letter(0).pow(2));
}

TEST_CASE("group identities") {
  Rng rng(3);
  for (int t = 0; t < 40; ++t) {
    Word a = random_word(rng, 4, 1 + static_cast<int>(rng.below(8)));
    Word b = random_word(rng, 4, 1 + static_cast<int>(rng.below(8)));
    CHECK((a * b).inverse() == b.inverse() * a.inverse());
    CHECK((a * a.inverse()).length() == 0);
    CHECK(a.pow(3) == a * a * a);
    CHECK(a.pow(-2) == (a * a).inverse());
    CHECK(group_commutator(a, b).inverse() == group_commutator(b, a));
    CHECK(conjugate(a, b) == b * a * b.inverse());
  }
}

TEST_CASE("exponent sums and substitution") {
  Word w = parse_word("x1 y1^-2 x2 x1", 2, 4);
  std::vector<Int> e = exponent_sums(w, 4);
  CHECK(e[0] == 2);
  CHECK(e[1] == 1);
  CHECK(e[2] == -2);
  CHECK(e[3] == 0);

  std::vector<Word> images = {Word::letter(1), Word::letter(0), Word::letter(2), Word::letter(3)};
  Word s = substitute(w, images);
  CHECK(s == parse_word("x2 y1^-2 x1 x2", 2, 4));
  CHECK(max_letter(w) == 2);
}

TEST_CASE("substitution is a homomorphism") {
  Rng rng(9);
  std::vector<Word> images;
  for (int l = 0; l < 3; ++l) images.push_back(random_word(rng, 3, 3));
  for (int t = 0; t < 20; ++t) {
    Word a = random_word(rng, 3, 5);
    Word b = random_word(rng, 3, 5);
    CHECK(substitute(a * b, images) == substitute(a, images) * substitute(b, images));
    CHECK(substitute(a.inverse(), images) == substitute(a, images).inverse());
  }
}

TEST_CASE("parse and format round trip") {
  Rng rng(7);
  for (int t = 0; t < 30; ++t) {
    Word w = random_word(rng, 6, static_cast<int>(rng.below(10)));
    CHECK(parse_word(format_word(w, 3), 3, 6) == w);
  }
  CHECK(format_word(Word(), 2) == "");
  CHECK(parse_word("", 2, 4).length() == 0);
  CHECK_THROWS_AS(parse_word("x9", 2, 4), error);
  CHECK_THROWS_AS(parse_word("q1", 2, 4), error);
}

TEST_CASE("boundary words") {
  Word adm1 = boundary_word(1, Boundary::admissible);
  CHECK(adm1 == Word::from_unreduced({1, 2, -1, -2}));
  Word adm2 = boundary_word(2, Boundary::admissible);
  CHECK(adm2 == Word::from_unreduced({1, 3, -1, -3, 2, 4, -2, -4}));

  Word lon1 = boundary_word(1, Boundary::longitude);
  CHECK(lon1 == Word::from_unreduced({-1, 2, 1, -2}));
  Word lon2 = boundary_word(2, Boundary::longitude);
  CHECK(lon2 == Word::from_unreduced({-2, -1, 3, 1, -3, 4, 2, -4}));

  CHECK(boundary_from_name("admissible") == Boundary::admissible);
  CHECK(boundary_from_name("longitude") == Boundary::longitude);
  CHECK(boundary_name(Boundary::longitude) == "longitude");
  CHECK_THROWS_AS(boundary_from_name("other"), error);
}
