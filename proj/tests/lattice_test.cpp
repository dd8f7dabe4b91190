#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torelli/lattice.hpp"
#include "torelli/util.hpp"

using namespace torelli;

namespace {

Lattice span2(std::vector<std::vector<Int>> gens, std::size_t ambient) {
  return Lattice::from_vectors(ambient, gens);
}

std::vector<Int> row_of(const Lattice& l, std::size_t r) {
  std::vector<Int> v(l.ambient);
  for (std::size_t c = 0; c < l.ambient; ++c) v[c] = l.basis.at(r, c);
  return v;
}

Lattice random_lattice(Rng& rng, std::size_t ambient, std::size_t gens) {
  std::vector<std::vector<Int>> rows(gens, std::vector<Int>(ambient));
  for (auto& row : rows)
    for (Int& x : row) x = Int(static_cast<long long>(rng.below(7)) - 3);
  return Lattice::from_vectors(ambient, rows);
}

} // namespace

TEST_CASE("membership and equality") {
  Lattice a = span2({{Int(2), Int(0)}, {Int(0), Int(2)}, {Int(1), Int(1)}}, 2);
  CHECK(a.rank() == 2);
  CHECK(a.contains({Int(1), Int(1)}));
  CHECK(a.contains({Int(3), Int(1)}));
  CHECK_FALSE(a.contains({Int(1), Int(0)}));
  Lattice b = span2({{Int(1), Int(1)}, {Int(2), Int(0)}}, 2);
  CHECK(a == b);
  CHECK(Lattice::full(2).contains(a));
  CHECK(a.contains(Lattice::zero(2)));
}

TEST_CASE("sum and intersection") {
  Lattice a = span2({{Int(2), Int(0)}, {Int(0), Int(2)}}, 2);
  Lattice b = span2({{Int(1), Int(1)}}, 2);
  Lattice s = lattice_sum(a, b);
  CHECK(s.rank() == 2);
  CHECK(s.contains({Int(1), Int(1)}));
  CHECK_FALSE(s.contains({Int(1), Int(0)}));
  Lattice i = lattice_intersect(a, b);
  CHECK(i.rank() == 1);
  CHECK(i.contains({Int(2), Int(2)}));
  CHECK_FALSE(i.contains({Int(1), Int(1)}));
}

TEST_CASE("rank formula for sum and intersection") {
  Rng rng(23);
  for (int t = 0; t < 20; ++t) {
    Lattice a = random_lattice(rng, 3, 2);
    Lattice b = random_lattice(rng, 3, 2);
    Lattice s = lattice_sum(a, b);
    Lattice i = lattice_intersect(a, b);
    CHECK(a.contains(i));
    CHECK(b.contains(i));
    CHECK(s.contains(a));
    CHECK(s.contains(b));
    CHECK(a.rank() + b.rank() == s.rank() + i.rank());
    for (std::size_t r = 0; r < i.rank(); ++r) {
      CHECK(a.contains(row_of(i, r)));
      CHECK(b.contains(row_of(i, r)));
    }
  }
}

TEST_CASE("image and kernel of a matrix") {
  IntMat m(2, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  m.at(1, 2) = 2;
  Lattice img = Lattice::image(m);
  CHECK(img.ambient == 2);
  CHECK(img.rank() == 2);
  CHECK(img.contains({Int(1), Int(0)}));
  CHECK(img.contains({Int(0), Int(2)}));
  CHECK_FALSE(img.contains({Int(0), Int(1)}));
  Lattice ker = Lattice::kernel(m);
  CHECK(ker.ambient == 3);
  CHECK(ker.rank() == 1);
  CHECK(ker.contains({Int(1), Int(-1), Int(0)}));
}

TEST_CASE("quotient shapes") {
  Lattice two = span2({{Int(2), Int(0)}, {Int(0), Int(2)}}, 2);
  QuotientShape q = quotient_shape(Lattice::full(2), two);
  CHECK(q.free_rank == 0);
  REQUIRE(q.torsion.size() == 2);
  CHECK(q.torsion[0] == 2);
  CHECK(q.torsion[1] == 2);

  Lattice line = span2({{Int(1), Int(1)}}, 2);
  QuotientShape qf = quotient_shape(Lattice::full(2), line);
  CHECK(qf.free_rank == 1);
  CHECK(qf.torsion.empty());

  CHECK(quotient_shape(two, two).trivial());
}
