#pragma once

#include "torelli/matrix.hpp"

#include <vector>

namespace torelli {

// Subgroup of Z^ambient. The basis is kept in canonical HNF (rows), so two
// lattices are equal iff their representations are identical.
struct Lattice {
  std::size_t ambient = 0;
  IntMat basis;                     // rank() many nonzero rows, HNF canonical
  std::vector<std::size_t> pivots;  // pivot column of each basis row

  static Lattice zero(std::size_t ambient);
  static Lattice full(std::size_t ambient);
  static Lattice from_rows(std::size_t ambient, IntMat generators);
  static Lattice from_vectors(std::size_t ambient, const std::vector<std::vector<Int>>& gens);
  // span of the columns of m (the image of the linear map m)
  static Lattice image(const IntMat& m);
  // {v : m v = 0}
  static Lattice kernel(const IntMat& m);

  std::size_t rank() const { return basis.rows; }
  bool contains(const std::vector<Int>& v) const;
  bool contains(const Lattice& other) const;
  bool operator==(const Lattice& other) const;
};

Lattice lattice_sum(const Lattice& a, const Lattice& b);
Lattice lattice_intersect(const Lattice& a, const Lattice& b);

struct QuotientShape {
  std::size_t free_rank = 0;
  std::vector<Int> torsion; // invariant factors > 1, each dividing the next
  bool trivial() const { return free_rank == 0 && torsion.empty(); }
};

// Shape of a/b; requires b to be contained in a.
QuotientShape quotient_shape(const Lattice& a, const Lattice& b);

} // namespace torelli
