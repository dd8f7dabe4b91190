#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torelli/exterior.hpp"
#include "torelli/lie.hpp"
#include "torelli/util.hpp"
#include "torelli/words.hpp"

using namespace torelli;

namespace {

std::vector<Int> unit_wedge(int n, int a, int b, int c) {
  std::vector<Int> v(wedge3_dim(n));
  auto [idx, sign] = wedge3_sorted(n, a, b, c);
  REQUIRE(sign != 0);
  v[static_cast<std::size_t>(idx)] = sign;
  return v;
}

IntMat random_square(Rng& rng, std::size_t n) {
  IntMat m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m.at(r, c) = Int(static_cast<long long>(rng.below(5)) - 2);
  return m;
}

} // namespace

TEST_CASE("dimensions and index tables") {
  CHECK(pair_dim(6) == 15);
  CHECK(wedge3_dim(6) == 20);
  CHECK(wedge3_dim(2) == 0);
  CHECK(wedge3_dim(3) == 1);
  auto [i0, s0] = wedge3_sorted(4, 0, 1, 2);
  auto [i1, s1] = wedge3_sorted(4, 1, 0, 2);
  CHECK(i0 == i1);
  CHECK(s0 == 1);
  CHECK(s1 == -1);
  auto [i2, s2] = wedge3_sorted(4, 2, 0, 1);
  CHECK(i2 == i0);
  CHECK(s2 == 1);
  CHECK_THROWS_AS(wedge3_sorted(4, 0, 0, 1), error);

  // pair index covers all ordered pairs a < b
  std::vector<bool> seen(pair_dim(4), false);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      std::size_t p = pair_index(4, a, b);
      REQUIRE(p < seen.size());
      CHECK_FALSE(seen[p]);
      seen[p] = true;
    }
}

TEST_CASE("eta expands a wedge into tensors") {
  const int n = 3;
  IntMat eta = eta_matrix(n);
  REQUIRE(eta.cols == 1);
  REQUIRE(eta.rows == 3 * pair_dim(3));
  std::vector<Int> img = mat_vec(eta, std::vector<Int>{Int(1)});
  // e0 (x) e1^e2 - e1 (x) e0^e2 + e2 (x) e0^e1
  CHECK(img[0 * pair_dim(3) + pair_index(3, 1, 2)] == 1);
  CHECK(img[1 * pair_dim(3) + pair_index(3, 0, 2)] == -1);
  CHECK(img[2 * pair_dim(3) + pair_index(3, 0, 1)] == 1);
  Int sum = 0;
  for (const Int& v : img) sum += (v < 0 ? -v : v);
  CHECK(sum == 3);
}

TEST_CASE("theta sends tensors to bracketed lie elements") {
  const int n = 3;
  IntMat theta = theta_matrix(n);
  REQUIRE(theta.cols == 3 * pair_dim(3));
  REQUIRE(theta.rows == static_cast<std::size_t>(witt(3, 3)));
  // column of e0 (x) (e0 ^ e1) is [z0, [z0, z1]]
  std::vector<Int> v(theta.cols);
  v[0 * pair_dim(3) + pair_index(3, 0, 1)] = 1;
  LieVec direct = lie_class(
      group_commutator(Word::letter(0), group_commutator(Word::letter(0), Word::letter(1))), 3, 3);
  CHECK(mat_vec(theta, v) == direct.c);
}

TEST_CASE("theta after eta vanishes by jacobi") {
  for (int n : {3, 4}) {
    CHECK((theta_matrix(n) * eta_matrix(n)).is_zero());
    Lattice img = Lattice::image(eta_matrix(n));
    Lattice ker = Lattice::kernel(theta_matrix(n));
    CHECK(img == ker);
    CHECK(img.rank() == static_cast<std::size_t>(binom(n, 3)));
  }
}

TEST_CASE("intersection pairing and contraction") {
  const int g = 2;
  CHECK(pairing(g, 0, 2) == 1);
  CHECK(pairing(g, 2, 0) == -1);
  CHECK(pairing(g, 0, 1) == 0);
  CHECK(pairing(g, 0, 3) == 0);
  CHECK(pairing(g, 1, 3) == 1);

  IntMat c3 = contract3_matrix(g);
  REQUIRE(c3.rows == 4);
  REQUIRE(c3.cols == wedge3_dim(4));
  // sigma(x1 ^ x2 ^ y1) = (x1.x2) y1 + (x2.y1) x1 + (y1.x1) x2 = -x2
  std::vector<Int> v = unit_wedge(4, 0, 1, 2);
  std::vector<Int> img = mat_vec(c3, v);
  CHECK(img == std::vector<Int>{Int(0), Int(-1), Int(0), Int(0)});
  // sigma(x1 ^ y1 ^ y2) = y2
  std::vector<Int> u = unit_wedge(4, 0, 2, 3);
  CHECK(mat_vec(c3, u) == std::vector<Int>{Int(0), Int(0), Int(0), Int(1)});

  IntMat c2 = contract2_matrix(g);
  // x1 ^ y1 -> 1, x1 ^ x2 -> 0
  std::vector<Int> p(pair_dim(4));
  p[pair_index(4, 0, 2)] = 1;
  CHECK(mat_vec(c2, p) == std::vector<Int>{Int(1)});
}

TEST_CASE("projections") {
  const int g = 2;
  IntMat pl = projL_matrix(g);
  REQUIRE(pl.rows == 2);
  REQUIRE(pl.cols == 4);
  CHECK(mat_vec(pl, std::vector<Int>{Int(1), Int(2), Int(3), Int(4)}) ==
        std::vector<Int>{Int(3), Int(4)});

  IntMat pp = proj_p_matrix(3);
  REQUIRE(pp.rows == wedge3_dim(3));
  REQUIRE(pp.cols == wedge3_dim(6));
  // all-y wedges survive, anything with an x factor dies
  CHECK(mat_vec(pp, unit_wedge(6, 3, 4, 5)) == std::vector<Int>{Int(1)});
  CHECK(mat_vec(pp, unit_wedge(6, 0, 4, 5)) == std::vector<Int>{Int(0)});
}

TEST_CASE("symplectic tests and the block embedding") {
  const int g = 3;
  IntMat omega(2 * g, 2 * g);
  for (int i = 0; i < g; ++i) {
    omega.at(static_cast<std::size_t>(i), static_cast<std::size_t>(g + i)) = 1;
    omega.at(static_cast<std::size_t>(g + i), static_cast<std::size_t>(i)) = -1;
  }
  CHECK(is_symplectic(g, omega));
  CHECK(is_symplectic(g, IntMat::identity(2 * g)));
  CHECK_FALSE(is_Bg(g, omega));
  CHECK(is_Bg(g, IntMat::identity(2 * g)));

  IntMat a(3, 3);
  a.at(0, 1) = 1;
  a.at(1, 0) = 1;
  a.at(2, 2) = -2;
  IntMat s = Bg_embed(g, a);
  CHECK(is_symplectic(g, s));
  CHECK(is_Bg(g, s));

  IntMat bad(3, 3);
  bad.at(0, 1) = 1;
  CHECK_THROWS_AS(Bg_embed(g, bad), error);

  CHECK(symmetric_elementary(3).size() == 6);
  for (const IntMat& e : symmetric_elementary(3)) CHECK(is_Bg(g, Bg_embed(g, e)));
}

TEST_CASE("wedge cube functor is multiplicative") {
  Rng rng(53);
  CHECK(sp3_matrix(IntMat::identity(3)) == IntMat::identity(1));
  CHECK(sp3_matrix(IntMat::identity(4)) == IntMat::identity(4));
  for (int t = 0; t < 6; ++t) {
    IntMat s = random_square(rng, 4);
    IntMat u = random_square(rng, 4);
    CHECK(sp3_matrix(s * u) == sp3_matrix(s) * sp3_matrix(u));
  }
}

TEST_CASE("kernel lattice ranks") {
  CHECK(Km_lattice(3, 1).rank() == 19);
  CHECK(Km_lattice(3, 2).rank() == 10);
  CHECK(Km_lattice(3, 3).rank() == 1);
  CHECK(Km_lattice(3, 4).rank() == 0);
  CHECK(kernel_K(3).rank() == 16);
  CHECK(kernel_K(2) == Km_lattice(2, 2));
  CHECK(kernel_K(2).rank() == 2);
}

TEST_CASE("family generators span the kernel") {
  KGenReport kg = K_generators_check(3);
  CHECK(kg.members_ok);
  CHECK(kg.generates);
  CHECK(kg.kernel_rank == 16);
  CHECK(kg.family_rank == 16);
  CHECK(kg.family2_restricted_rank < kg.family2_rank);
}

TEST_CASE("filtration steps are generated by the symmetric moves") {
  for (int g : {2, 3})
    for (int m : {2, 3}) {
      KmGenReport r = Km_generation_check(g, m);
      CHECK(r.inclusion_ok);
      CHECK(r.generates);
    }
}

TEST_CASE("wedge strings") {
  std::vector<Int> v = unit_wedge(4, 0, 2, 3);
  CHECK(wedge3_str(v, 4, 2) == "x1^y1^y2");
  std::vector<Int> w(wedge3_dim(3));
  w[0] = -2;
  CHECK(wedge3_str(w, 3, 3) == "-2*e1^e2^e3");
  CHECK(wedge3_str(std::vector<Int>(wedge3_dim(4)), 4, 2) == "0");
}
