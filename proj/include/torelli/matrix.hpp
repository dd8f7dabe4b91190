#pragma once

#include "torelli/bigint.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace torelli {

// Dense integer matrix. Linear maps use the column convention: a map
// Z^n -> Z^m is an m x n matrix applied as w = M v. Lattice generators,
// by contrast, are stored as rows (see lattice.hpp).
struct IntMat {
  std::size_t rows = 0, cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Int& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  static IntMat identity(std::size_t n);

  bool operator==(const IntMat&) const = default;
  bool is_zero() const;

  IntMat transposed() const;
  IntMat operator*(const IntMat& rhs) const;
  IntMat operator+(const IntMat& rhs) const;
  IntMat operator-(const IntMat& rhs) const;

  void swap_rows(std::size_t i, std::size_t j);
  // row[i] += c * row[j]
  void add_row(std::size_t i, std::size_t j, const Int& c);

  std::string str() const;
};

std::vector<Int> mat_vec(const IntMat& m, const std::vector<Int>& v);

// Stack b below a (same column count).
IntMat vstack(const IntMat& a, const IntMat& b);

// Row-style Hermite normal form, in place. Preserves the row span. On return
// the first pivots.size() rows are the canonical basis (pivot entries
// positive, entries above a pivot reduced into [0, pivot)) and the remaining
// rows are zero. Returns the pivot column of each nonzero row.
std::vector<std::size_t> hnf_rows(IntMat& m);

std::size_t rank_of(IntMat m);

// Is v in the row span of h, where h is already in HNF with the given pivot
// columns? When yes and coeffs != nullptr, *coeffs gets the coordinates of v
// with respect to the nonzero rows of h.
bool hnf_member(const IntMat& h, const std::vector<std::size_t>& pivots,
                std::vector<Int> v, std::vector<Int>* coeffs = nullptr);

// Basis of {v : m v = 0}, returned as the rows of the result (HNF canonical).
IntMat kernel_basis(const IntMat& m);

// Integer solution of m v = t. Returns false when t is not in the column
// span of m over Z.
bool solve_columns(const IntMat& m, const std::vector<Int>& t, std::vector<Int>& v);

struct SmithForm {
  std::vector<Int> divisors; // nonzero invariant factors, each dividing the next
  std::size_t rank = 0;
};

SmithForm smith_form(IntMat m);

} // namespace torelli
