#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torelli/magnus.hpp"
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

TEST_CASE("expansion of a single letter") {
  Series s = magnus_expand(Word::letter(0), 2, 3);
  CHECK(s.c[0] == std::vector<Int>{Int(1)});
  CHECK(s.c[1] == std::vector<Int>{Int(1), Int(0)});
  for (const Int& v : s.c[2]) CHECK(v == 0);
  for (const Int& v : s.c[3]) CHECK(v == 0);
}

TEST_CASE("expansion of an inverse letter is the geometric series") {
  Series s = magnus_expand(Word::letter(0).inverse(), 2, 3);
  CHECK(s.c[1][0] == -1);
  CHECK(s.c[1][1] == 0);
  // degree 2 cell indices: z0 z0 = 0, z0 z1 = 1, z1 z0 = 2, z1 z1 = 3
  CHECK(s.c[2][0] == 1);
  CHECK(s.c[2][1] == 0);
  CHECK(s.c[3][0] == -1);
  Series prod = series_mul(s, magnus_expand(Word::letter(0), 2, 3));
  CHECK(prod == Series::one(2, 3));
}

TEST_CASE("expansion is a homomorphism") {
  Rng rng(13);
  for (int t = 0; t < 15; ++t) {
    Word a = random_word(rng, 3, 4);
    Word b = random_word(rng, 3, 4);
    Series sa = magnus_expand(a, 3, 4);
    Series sb = magnus_expand(b, 3, 4);
    CHECK(magnus_expand(a * b, 3, 4) == series_mul(sa, sb));
  }
}

TEST_CASE("commutator coefficients") {
  Word c = group_commutator(Word::letter(0), Word::letter(1));
  Series s = magnus_expand(c, 2, 3);
  for (const Int& v : s.c[1]) CHECK(v == 0);
  CHECK(s.c[2][1] == 1);  // z0 z1
  CHECK(s.c[2][2] == -1); // z1 z0
  CHECK(s.c[2][0] == 0);
  CHECK(s.c[2][3] == 0);
}

TEST_CASE("word degrees") {
  CHECK(word_degree(Word(), 2, 4) == Degree{infinity_degree, true});
  CHECK(word_degree(Word::letter(1), 2, 4) == Degree{1, true});
  Word c = group_commutator(Word::letter(0), Word::letter(1));
  CHECK(word_degree(c, 2, 4) == Degree{2, true});
  Word cc = group_commutator(c, Word::letter(0));
  CHECK(word_degree(cc, 2, 4) == Degree{3, true});
  Word c4 = group_commutator(cc, Word::letter(1));
  CHECK(word_degree(c4, 2, 4) == Degree{4, true});
  // cutoff below the true degree gives only a bound
  CHECK(word_degree(c4, 2, 2) == Degree{3, false});
}

TEST_CASE("first nonzero degree") {
  CHECK(Series::one(2, 3).first_nonzero_degree() == -1);
  Word c = group_commutator(Word::letter(0), Word::letter(1));
  CHECK(magnus_expand(c, 2, 3).first_nonzero_degree() == 2);
}

TEST_CASE("cell budget guard") {
  std::size_t saved = series_cell_budget();
  set_series_cell_budget(10);
  CHECK_THROWS_AS(magnus_expand(Word::letter(0), 4, 5), budget_error);
  set_series_cell_budget(saved);
  CHECK_NOTHROW(magnus_expand(Word::letter(0), 4, 5));
}
