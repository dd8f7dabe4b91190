#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torelli/lie.hpp"
#include "torelli/util.hpp"
#include "torelli/words.hpp"

#include <algorithm>
#include <vector>

using namespace torelli;

namespace {

// independent Lyndon test: strictly smaller than all proper rotations
bool lyndon_by_rotation(const std::vector<std::uint8_t>& w) {
  for (std::size_t r = 1; r < w.size(); ++r) {
    std::vector<std::uint8_t> rot(w.begin() + static_cast<std::ptrdiff_t>(r), w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
    if (!(w < rot)) return false;
  }
  return true;
}

std::vector<std::vector<std::uint8_t>> all_words(int k, int m) {
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::uint8_t> cur(static_cast<std::size_t>(m));
  while (true) {
    out.push_back(cur);
    int p = m - 1;
    while (p >= 0 && cur[static_cast<std::size_t>(p)] == k - 1) {
      cur[static_cast<std::size_t>(p)] = 0;
      --p;
    }
    if (p < 0) break;
    ++cur[static_cast<std::size_t>(p)];
  }
  return out;
}

LieVec random_lie(Rng& rng, int k, int m) {
  LieVec v = lie_zero(k, m);
  for (Int& x : v.c) x = Int(static_cast<long long>(rng.below(7)) - 3);
  return v;
}

std::vector<Int> poly_to_dense(const Poly& p, int k, int m) {
  std::size_t cells = 1;
  for (int d = 0; d < m; ++d) cells *= static_cast<std::size_t>(k);
  std::vector<Int> out(cells);
  for (const auto& [code, coeff] : p) {
    std::vector<std::uint8_t> w = mono_unpack(code, m);
    std::size_t idx = 0;
    for (std::uint8_t l : w) idx = idx * static_cast<std::size_t>(k) + l;
    out[idx] = coeff;
  }
  return out;
}

} // namespace

TEST_CASE("witt numbers") {
  long long w2[] = {2, 1, 2, 3, 6, 9, 18, 30};
  for (int n = 1; n <= 8; ++n) CHECK(witt(2, n) == w2[n - 1]);
  CHECK(witt(3, 3) == 8);
  CHECK(witt(4, 4) == 60);
  CHECK(witt(6, 5) == 1554);
  CHECK(witt(6, 6) == 7735);
  CHECK(witt(6, 7) == 39990);
  CHECK(witt(4, 7) == 2340);
  CHECK(witt(1, 1) == 1);
  CHECK(witt(1, 2) == 0);
}

TEST_CASE("lyndon words match brute force enumeration") {
  for (auto [k, mt] : {std::pair{2, 6}, std::pair{3, 4}, std::pair{4, 3}}) {
    for (int m = 1; m <= mt; ++m) {
      const LyndonBasis& basis = lyndon_basis(k, m);
      std::vector<std::vector<std::uint8_t>> expected;
      for (const auto& w : all_words(k, m))
        if (lyndon_by_rotation(w)) expected.push_back(w);
      std::sort(expected.begin(), expected.end());
      REQUIRE(basis.size() == expected.size());
      CHECK(basis.size() == static_cast<std::size_t>(witt(k, m)));
      for (std::size_t i = 0; i < basis.size(); ++i) {
        CHECK(basis.word(i) == expected[i]);
        CHECK(basis.index_of(mono_pack(expected[i])) == static_cast<int>(i));
        CHECK(is_lyndon(expected[i]) == lyndon_by_rotation(expected[i]));
      }
    }
  }
}

TEST_CASE("standard factorization splits into lyndon halves") {
  const LyndonBasis& basis = lyndon_basis(3, 4);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& w = basis.word(i);
    int s = basis.split(i);
    REQUIRE(s > 0);
    std::vector<std::uint8_t> left(w.begin(), w.begin() + s);
    std::vector<std::uint8_t> right(w.begin() + s, w.end());
    CHECK(is_lyndon(left));
    CHECK(is_lyndon(right));
    CHECK(left < right);
  }
}

TEST_CASE("group commutator words realize the lyndon bracketings") {
  for (auto [k, mt] : {std::pair{2, 5}, std::pair{3, 4}, std::pair{6, 3}}) {
    for (int m = 1; m <= mt; ++m) {
      const LyndonBasis& basis = lyndon_basis(k, m);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        LieVec cls = lie_class(basis.bracket_word(i), k, m);
        LieVec e = lie_zero(k, m);
        e.c[i] = 1;
        CHECK(cls == e);
      }
    }
  }
}

TEST_CASE("dense and sparse reconstruction agree") {
  Rng rng(31);
  for (auto [k, m] : {std::pair{2, 5}, std::pair{3, 4}, std::pair{6, 3}}) {
    for (int t = 0; t < 5; ++t) {
      LieVec v = random_lie(rng, k, m);
      Poly p = lie_to_poly(v);
      CHECK(lie_from_poly(k, m, p) == v);
      CHECK(lie_from_dense(k, m, poly_to_dense(p, k, m)) == v);
    }
  }
  // a non Lie polynomial is rejected
  Poly bad;
  bad[mono_pack({0, 1})] = 1;
  CHECK_THROWS_AS(lie_from_poly(2, 2, bad), error);
}

TEST_CASE("bracket is antisymmetric and satisfies jacobi") {
  Rng rng(37);
  const int k = 3;
  for (int t = 0; t < 6; ++t) {
    LieVec a = random_lie(rng, k, 1);
    LieVec b = random_lie(rng, k, 2);
    LieVec c = random_lie(rng, k, 1);
    LieVec ab = lie_bracket(a, b);
    CHECK(lie_add(ab, lie_bracket(b, a)).is_zero());
    CHECK(lie_bracket(a, a).is_zero());
    LieVec jac = lie_add(lie_add(lie_bracket(a, lie_bracket(b, c)),
                                 lie_bracket(b, lie_bracket(c, a))),
                         lie_bracket(c, lie_bracket(a, b)));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("bracket matrix on the smallest case") {
  // [z0, z0] = 0, [z0, z1] = e, [z1, z0] = -e, [z1, z1] = 0
  IntMat m = bracket_matrix(2, 1);
  REQUIRE(m.rows == 1);
  REQUIRE(m.cols == 4);
  CHECK(m.at(0, 0) == 0);
  CHECK(m.at(0, 1) == 1);
  CHECK(m.at(0, 2) == -1);
  CHECK(m.at(0, 3) == 0);
}

TEST_CASE("bracket matrix columns match lie_bracket") {
  for (auto [k, m] : {std::pair{2, 3}, std::pair{3, 2}}) {
    IntMat bm = bracket_matrix(k, m);
    const std::size_t w = lyndon_basis(k, m).size();
    for (int h = 0; h < k; ++h)
      for (std::size_t u = 0; u < w; ++u) {
        LieVec e = lie_zero(k, m);
        e.c[u] = 1;
        LieVec br = lie_bracket(lie_letter(k, h), e);
        for (std::size_t r = 0; r < bm.rows; ++r)
          CHECK(bm.at(r, static_cast<std::size_t>(h) * w + u) == br.c[r]);
      }
  }
}

TEST_CASE("dense bracket accumulator matches lie_bracket") {
  Rng rng(41);
  const int k = 4, m = 2;
  for (int t = 0; t < 5; ++t) {
    LieVec v = random_lie(rng, k, m);
    std::vector<Int> slice = poly_to_dense(lie_to_poly(v), k, m);
    for (int l = 0; l < k; ++l) {
      std::size_t cells = 1;
      for (int d = 0; d < m + 1; ++d) cells *= static_cast<std::size_t>(k);
      std::vector<Int> acc(cells);
      dense_bracket_letter_acc(k, l, slice, 1, acc);
      CHECK(lie_from_dense(k, m + 1, acc) == lie_bracket(lie_letter(k, l), v));
    }
  }
}

TEST_CASE("functor matrix is functorial") {
  Rng rng(43);
  const int k = 2, m = 3;
  CHECK(lie_functor_matrix(k, m, IntMat::identity(2)) == IntMat::identity(2));
  for (int t = 0; t < 8; ++t) {
    IntMat s(2, 2), u(2, 2);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) {
        s.at(r, c) = Int(static_cast<long long>(rng.below(5)) - 2);
        u.at(r, c) = Int(static_cast<long long>(rng.below(5)) - 2);
      }
    CHECK(lie_functor_matrix(k, m, s * u) ==
          lie_functor_matrix(k, m, s) * lie_functor_matrix(k, m, u));
  }
}

TEST_CASE("functor matrix of a letter permutation matches substitution") {
  const int k = 2, m = 3;
  IntMat swap(2, 2);
  swap.at(0, 1) = 1;
  swap.at(1, 0) = 1;
  IntMat f = lie_functor_matrix(k, m, swap);
  const LyndonBasis& basis = lyndon_basis(k, m);
  std::vector<Word> images = {Word::letter(1), Word::letter(0)};
  for (std::size_t i = 0; i < basis.size(); ++i) {
    LieVec direct = lie_class(substitute(basis.bracket_word(i), images), k, m);
    std::vector<Int> e(basis.size());
    e[i] = 1;
    CHECK(mat_vec(f, e) == direct.c);
  }
}

TEST_CASE("tensor block operations") {
  const int k = 4, m = 2;
  const std::size_t w = lyndon_basis(k, m).size();
  HLieVec v = hlie_zero(k, m);
  REQUIRE(v.c.size() == static_cast<std::size_t>(k) * w);
  v.c[0 * w + 1] = 2; // z0 (x) u1
  v.c[3 * w + 0] = -1;
  CHECK(hlie_add(v, hlie_sub(hlie_zero(k, m), v)).is_zero());

  LieVec br = hlie_bracket(v);
  LieVec u1 = lie_zero(k, m);
  u1.c[1] = 1;
  LieVec u0 = lie_zero(k, m);
  u0.c[0] = 1;
  LieVec expected = lie_sub(lie_scale(Int(2), lie_bracket(lie_letter(k, 0), u1)),
                            lie_bracket(lie_letter(k, 3), u0));
  CHECK(br == expected);

  // identity substitution acts trivially
  CHECK(hlie_apply(IntMat::identity(4), v) == v);
}

TEST_CASE("hlie_apply matches per slot application") {
  Rng rng(47);
  const int k = 2, m = 2;
  const std::size_t w = lyndon_basis(k, m).size();
  IntMat s(2, 2);
  s.at(0, 0) = 1;
  s.at(0, 1) = 2;
  s.at(1, 0) = 0;
  s.at(1, 1) = 1;
  IntMat ls = lie_functor_matrix(k, m, s);
  for (int t = 0; t < 5; ++t) {
    HLieVec v = hlie_zero(k, m);
    for (Int& x : v.c) x = Int(static_cast<long long>(rng.below(5)) - 2);
    HLieVec got = hlie_apply(s, v);
    // apply Lie(s) in each slot, then mix slots by s
    std::vector<std::vector<Int>> slots(static_cast<std::size_t>(k), std::vector<Int>(w));
    for (int h = 0; h < k; ++h) {
      std::vector<Int> slot(v.c.begin() + static_cast<std::ptrdiff_t>(h * w),
                            v.c.begin() + static_cast<std::ptrdiff_t>((h + 1) * w));
      std::vector<Int> mapped = mat_vec(ls, slot);
      for (int hh = 0; hh < k; ++hh) {
        Int coeff = s.at(static_cast<std::size_t>(hh), static_cast<std::size_t>(h));
        for (std::size_t u = 0; u < w; ++u) slots[static_cast<std::size_t>(hh)][u] += coeff * mapped[u];
      }
    }
    HLieVec expected = hlie_zero(k, m);
    for (int h = 0; h < k; ++h)
      for (std::size_t u = 0; u < w; ++u)
        expected.c[static_cast<std::size_t>(h) * w + u] = slots[static_cast<std::size_t>(h)][u];
    CHECK(got == expected);
  }
}

TEST_CASE("x letter filtration lattices") {
  const int g = 2; // alphabet x1 x2 y1 y2
  Lattice l21 = lie_x_lattice(g, 2, 1);
  const LyndonBasis& basis = lyndon_basis(2 * g, 2);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::vector<Int> e(basis.size());
    e[i] = 1;
    CHECK(l21.contains(e) == (xcount(basis.word(i), g) >= 1));
  }

  Lattice hl = hl_x_lattice(g, 2, 1);
  const std::size_t w = basis.size();
  // x1 (x) [y1,y2] has an x letter in the H slot only
  int yy = basis.index_of(mono_pack({2, 3}));
  REQUIRE(yy >= 0);
  std::vector<Int> v(static_cast<std::size_t>(2 * g) * w);
  v[static_cast<std::size_t>(0) * w + static_cast<std::size_t>(yy)] = 1;
  CHECK(hl.contains(v));
  // y1 (x) [y1,y2] has none
  std::vector<Int> u(static_cast<std::size_t>(2 * g) * w);
  u[static_cast<std::size_t>(2) * w + static_cast<std::size_t>(yy)] = 1;
  CHECK_FALSE(hl.contains(u));
}

TEST_CASE("lie_class requires vanishing lower layers") {
  CHECK_THROWS_AS(lie_class(Word::letter(0), 2, 2), error);
  Word c = group_commutator(Word::letter(0), Word::letter(1));
  LieVec cls = lie_class(c, 2, 2);
  CHECK(lie_str(cls, 1) == "[x1,y1]");
}
