#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torelli/braid.hpp"
#include "torelli/exterior.hpp"
#include "torelli/lie.hpp"
#include "torelli/mcg.hpp"
#include "torelli/util.hpp"

using namespace torelli;

namespace {

PureBraid random_braid(Rng& rng, int g, int len) {
  PureBraid w = braid_identity(g);
  for (int s = 0; s < len; ++s) {
    int i = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(g - 1)));
    int j = i + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(g - i)));
    PureBraid a = artin_generator(g, i, j);
    if (rng.pick_sign() < 0) a = braid_inverse(a);
    w = braid_compose(w, a);
  }
  return w;
}

PureBraid alpha(int depth) {
  PureBraid a = braid_commutator(artin_generator(3, 1, 2), artin_generator(3, 1, 3));
  if (depth >= 3) a = braid_commutator(a, artin_generator(3, 2, 3));
  return a;
}

} // namespace

TEST_CASE("longitudes of the basic generator") {
  PureBraid a = artin_generator(2, 1, 2);
  CHECK(format_word(a.lam[0], 2) == "x2^-1");
  CHECK(format_word(a.lam[1], 2) == "x2^-1 x1^-1 x2");
  CHECK(a.framing == std::vector<Int>{Int(0), Int(0)});

  PureBraid b = artin_generator(3, 1, 3);
  CHECK(b.lam[1].length() == 0);
  IntMat lk = linking_matrix(b);
  IntMat expected(3, 3);
  expected.at(0, 2) = -1;
  expected.at(2, 0) = -1;
  CHECK(lk == expected);
}

TEST_CASE("longitude identity is enforced") {
  // lam1 = x2 does not satisfy the defining identity
  CHECK_THROWS_AS(make_pure_braid(2, {Word::letter(1), Word()}), error);
  CHECK_THROWS_AS(make_pure_braid(2, {Word::letter(1)}), error);
  // a y letter may not appear in a longitude
  CHECK_THROWS_AS(make_pure_braid(2, {Word::letter(2), Word()}), error);
  // the generator's own longitudes pass
  PureBraid a = artin_generator(2, 1, 2);
  CHECK_NOTHROW(make_pure_braid(2, a.lam, a.lam_inv, a.framing));
}

TEST_CASE("composition inverse and framings") {
  Rng rng(61);
  for (int t = 0; t < 10; ++t) {
    PureBraid w = random_braid(rng, 3, 3);
    PureBraid id = braid_compose(w, braid_inverse(w));
    for (const Word& l : id.lam) CHECK(l.length() == 0);
    for (const Int& s : id.framing) CHECK(s == 0);
  }
  PureBraid f = framing_twist(2, 1);
  CHECK(f.lam[0].length() == 0);
  CHECK(f.framing == std::vector<Int>{Int(1), Int(0)});
  IntMat lk = linking_matrix(braid_compose(f, f));
  CHECK(lk.at(0, 0) == 2);
  CHECK(lk.at(1, 1) == 0);
  CHECK(lk.at(0, 1) == 0);
}

TEST_CASE("linking matrices are symmetric and additive") {
  Rng rng(67);
  for (int t = 0; t < 10; ++t) {
    PureBraid a = random_braid(rng, 4, 2);
    PureBraid b = random_braid(rng, 4, 2);
    IntMat la = linking_matrix(a);
    CHECK(la == la.transposed());
    CHECK(linking_matrix(braid_compose(a, b)) == la + linking_matrix(b));
    CHECK((linking_matrix(braid_inverse(a)) + la).is_zero());
  }
}

TEST_CASE("braid action fixes the product of the x letters") {
  Rng rng(71);
  for (int t = 0; t < 8; ++t) {
    PureBraid a = random_braid(rng, 3, 4);
    Word prod;
    for (int i = 0; i < 3; ++i) prod.append(Word::letter(i));
    CHECK(braid_apply(a, prod) == prod);
  }
}

TEST_CASE("psi images of the basic generator") {
  PureBraid a = artin_generator(2, 1, 2);
  FreeEndo f = psi(a);
  CHECK(f.conv == Boundary::longitude);
  CHECK(format_word(f.image(0), 2) == "x2^-1 x1 x2");
  CHECK(format_word(f.image(2), 2) == "y1 x2");
  CHECK(format_word(f.image(1), 2) == "x2^-1 x1^-1 x2 x1 x2");
  CHECK(format_word(f.image(3), 2) == "y2 x2^-1 x1 x2");
}

TEST_CASE("psi and kappa are homomorphisms") {
  Rng rng(73);
  for (int t = 0; t < 6; ++t) {
    PureBraid a = random_braid(rng, 3, 2);
    PureBraid b = random_braid(rng, 3, 2);
    PureBraid ab = braid_compose(a, b);
    CHECK(psi(ab).im == endo_compose(psi(a), psi(b)).im);
    CHECK(kappa(ab).im == endo_compose(kappa(a), kappa(b)).im);
    CHECK(psi(braid_inverse(a)).im == endo_inverse(psi(a)).im);
  }
}

TEST_CASE("framing twists become meridian twists") {
  for (int g : {2, 3})
    for (int i = 1; i <= g; ++i) {
      CHECK(psi(framing_twist(g, i, 1)).im == meridian_twist(g, i, Boundary::longitude, -1).im);
      CHECK(psi(framing_twist(g, i, -1)).im == meridian_twist(g, i, Boundary::longitude, 1).im);
    }
}

TEST_CASE("weight degrees of braids") {
  PureBraid a12 = artin_generator(2, 1, 2);
  CHECK(braid_weight_degree(a12, 3) == Degree{1, true});
  CHECK(braid_weight_degree(braid_identity(3), 3) == Degree{infinity_degree, true});
  CHECK(braid_weight_degree(alpha(2), 3) == Degree{2, true});
  // framings count as weight one
  CHECK(braid_weight_degree(framing_twist(2, 1), 3) == Degree{1, true});
}

TEST_CASE("the braid invariant lifts tau of the psi image") {
  PureBraid a2 = alpha(2);
  std::vector<Int> jb = J_b(a2);
  bool nonzero = false;
  for (const Int& v : jb)
    if (v != 0) nonzero = true;
  CHECK(nonzero);

  std::vector<Int> tau = johnson_tau(psi(a2));
  std::vector<Int> embedded = mat_vec(wedge3_x_embed(3), jb);
  for (std::size_t i = 0; i < tau.size(); ++i) tau[i] += embedded[i];
  for (const Int& v : tau) CHECK(v == 0);
}

TEST_CASE("deeper commutators reach the johnson kernel") {
  CHECK_FALSE(in_johnson_kernel(psi(alpha(2))));
  CHECK(in_johnson_kernel(psi(alpha(3))));
  CHECK(in_johnson_kernel(kappa(artin_generator(3, 1, 2))));
}

TEST_CASE("delta doubles the handles") {
  Word d = delta_word(2, Word::letter(0));
  CHECK(d == Word::from_unreduced({1, 3, -1, -3}));
  CHECK(delta_word(2, Word::letter(0).inverse()) == d.inverse());
  Word dd = delta_word(2, Word::letter(0) * Word::letter(1));
  CHECK(dd == d * Word::from_unreduced({2, 4, -2, -4}));
}

TEST_CASE("layer ranks") {
  CHECK(rank_r(5, 2, false) == 10);
  CHECK(rank_r(4, 2, false) == 4);
  CHECK(rank_r(3, 2, false) == 1);
  CHECK(rank_r(3, 3, false) == 2);
  CHECK(rank_r(2, 1, true) == 3);
  CHECK(rank_r(2, 1, false) == 1);
  CHECK(rank_r(1, 4, false) == 0);
  CHECK(delta_star_rank(2, 1) == 2);
}

TEST_CASE("twist catalogs") {
  std::vector<NamedEndo> adm = twist_catalog(2, Boundary::admissible);
  std::vector<NamedEndo> lon = twist_catalog(2, Boundary::longitude);
  CHECK(adm.size() == lon.size());
  for (const NamedEndo& e : adm) {
    CHECK(e.f.conv == Boundary::admissible);
    CHECK(is_in_Lbar(e.f));
  }
  for (const NamedEndo& e : lon) CHECK(e.f.conv == Boundary::longitude);
}

TEST_CASE("braid words parse") {
  PureBraid p = parse_braid_word("A12 A13^-1", 3);
  PureBraid q = braid_compose(artin_generator(3, 1, 2), braid_inverse(artin_generator(3, 1, 3)));
  CHECK(p.lam == q.lam);
  CHECK(*p.lam_inv == *q.lam_inv);
  CHECK(parse_braid_word("A12^2", 2).lam ==
        braid_compose(artin_generator(2, 1, 2), artin_generator(2, 1, 2)).lam);
  CHECK_THROWS_AS(parse_braid_word("A11", 2), error);
  CHECK_THROWS_AS(parse_braid_word("B12", 2), error);
  CHECK_THROWS_AS(parse_braid_word("A13", 2), error);
}
