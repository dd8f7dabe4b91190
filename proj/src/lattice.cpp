#include "torelli/lattice.hpp"

namespace torelli {

Lattice Lattice::zero(std::size_t ambient) {
  Lattice l;
  l.ambient = ambient;
  l.basis = IntMat(0, ambient);
  return l;
}

Lattice Lattice::full(std::size_t ambient) {
  return from_rows(ambient, IntMat::identity(ambient));
}

Lattice Lattice::from_rows(std::size_t ambient, IntMat generators) {
  if (generators.rows > 0 && generators.cols != ambient)
    throw error("lattice: generator length differs from ambient dimension");
  Lattice l;
  l.ambient = ambient;
  if (generators.rows == 0) {
    l.basis = IntMat(0, ambient);
    return l;
  }
  l.pivots = hnf_rows(generators);
  IntMat b(l.pivots.size(), ambient);
  std::copy(generators.a.begin(),
            generators.a.begin() + static_cast<std::ptrdiff_t>(b.a.size()),
            b.a.begin());
  l.basis = std::move(b);
  return l;
}

Lattice Lattice::from_vectors(std::size_t ambient,
                              const std::vector<std::vector<Int>>& gens) {
  IntMat m(gens.size(), ambient);
  for (std::size_t r = 0; r < gens.size(); ++r) {
    if (gens[r].size() != ambient)
      throw error("lattice: generator length differs from ambient dimension");
    for (std::size_t c = 0; c < ambient; ++c) m.at(r, c) = gens[r][c];
  }
  return from_rows(ambient, std::move(m));
}

Lattice Lattice::image(const IntMat& m) {
  return from_rows(m.rows, m.transposed());
}

Lattice Lattice::kernel(const IntMat& m) {
  Lattice l;
  l.ambient = m.cols;
  IntMat k = kernel_basis(m);
  return from_rows(m.cols, std::move(k));
}

bool Lattice::contains(const std::vector<Int>& v) const {
  return hnf_member(basis, pivots, v);
}

bool Lattice::contains(const Lattice& other) const {
  if (ambient != other.ambient) return false;
  for (std::size_t r = 0; r < other.basis.rows; ++r) {
    std::vector<Int> v(ambient);
    for (std::size_t c = 0; c < ambient; ++c) v[c] = other.basis.at(r, c);
    if (!contains(v)) return false;
  }
  return true;
}

bool Lattice::operator==(const Lattice& other) const {
  return ambient == other.ambient && basis == other.basis;
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
  if (a.ambient != b.ambient) throw error("lattice sum: ambient mismatch");
  return Lattice::from_rows(a.ambient, vstack(a.basis, b.basis));
}

Lattice lattice_intersect(const Lattice& a, const Lattice& b) {
  if (a.ambient != b.ambient) throw error("lattice intersect: ambient mismatch");
  // Rows (u | u) for u in a and (v | 0) for v in b span pairs whose second
  // block lies in a; kernel-style elimination of the first block leaves rows
  // (0 | w) with w in both spans.
  const std::size_t n = a.ambient;
  const std::size_t ra = a.basis.rows, rb = b.basis.rows;
  IntMat aug(ra + rb, 2 * n);
  for (std::size_t r = 0; r < ra; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      aug.at(r, c) = a.basis.at(r, c);
      aug.at(r, n + c) = a.basis.at(r, c);
    }
  for (std::size_t r = 0; r < rb; ++r)
    for (std::size_t c = 0; c < n; ++c) aug.at(ra + r, c) = b.basis.at(r, c);
  hnf_rows(aug);
  std::vector<std::vector<Int>> gens;
  for (std::size_t r = 0; r < aug.rows; ++r) {
    bool left_zero = true;
    for (std::size_t c = 0; c < n && left_zero; ++c)
      if (aug.at(r, c) != 0) left_zero = false;
    if (!left_zero) continue;
    std::vector<Int> v(n);
    bool nonzero = false;
    for (std::size_t c = 0; c < n; ++c) {
      v[c] = aug.at(r, n + c);
      if (v[c] != 0) nonzero = true;
    }
    if (nonzero) gens.push_back(std::move(v));
  }
  return Lattice::from_vectors(n, gens);
}

QuotientShape quotient_shape(const Lattice& a, const Lattice& b) {
  if (!a.contains(b)) throw error("quotient_shape: second lattice not contained in first");
  IntMat rel(b.basis.rows, a.basis.rows);
  for (std::size_t r = 0; r < b.basis.rows; ++r) {
    std::vector<Int> v(a.ambient), coeffs;
    for (std::size_t c = 0; c < a.ambient; ++c) v[c] = b.basis.at(r, c);
    hnf_member(a.basis, a.pivots, v, &coeffs);
    for (std::size_t c = 0; c < coeffs.size(); ++c) rel.at(r, c) = coeffs[c];
  }
  SmithForm s = smith_form(std::move(rel));
  QuotientShape q;
  q.free_rank = a.basis.rows - s.rank;
  for (const Int& d : s.divisors)
    if (d != 1) q.torsion.push_back(d);
  return q;
}

} // namespace torelli
