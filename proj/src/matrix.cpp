#include "torelli/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace torelli {

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMat::is_zero() const {
  for (const Int& v : a)
    if (v != 0) return false;
  return true;
}

IntMat IntMat::transposed() const {
  IntMat t(cols, rows);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

IntMat IntMat::operator*(const IntMat& rhs) const {
  if (cols != rhs.rows) throw error("matrix product: shape mismatch");
  IntMat out(rows, rhs.cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t k = 0; k < cols; ++k) {
      const Int& v = at(r, k);
      if (v == 0) continue;
      for (std::size_t c = 0; c < rhs.cols; ++c) out.at(r, c) += v * rhs.at(k, c);
    }
  return out;
}

IntMat IntMat::operator+(const IntMat& rhs) const {
  if (rows != rhs.rows || cols != rhs.cols) throw error("matrix sum: shape mismatch");
  IntMat out(rows, cols);
  for (std::size_t i = 0; i < a.size(); ++i) out.a[i] = a[i] + rhs.a[i];
  return out;
}

IntMat IntMat::operator-(const IntMat& rhs) const {
  if (rows != rhs.rows || cols != rhs.cols) throw error("matrix difference: shape mismatch");
  IntMat out(rows, cols);
  for (std::size_t i = 0; i < a.size(); ++i) out.a[i] = a[i] - rhs.a[i];
  return out;
}

void IntMat::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
}

void IntMat::add_row(std::size_t i, std::size_t j, const Int& c) {
  if (c == 0) return;
  for (std::size_t k = 0; k < cols; ++k) at(i, k) += c * at(j, k);
}

std::string IntMat::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols; ++c) os << (c ? "," : "") << at(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

std::vector<Int> mat_vec(const IntMat& m, const std::vector<Int>& v) {
  if (v.size() != m.cols) throw error("apply: dimension mismatch");
  std::vector<Int> out(m.rows);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c)
      if (m.at(r, c) != 0 && v[c] != 0) out[r] += m.at(r, c) * v[c];
  return out;
}

IntMat vstack(const IntMat& a, const IntMat& b) {
  if (a.cols != b.cols && a.rows != 0 && b.rows != 0)
    throw error("vstack: column mismatch");
  IntMat out(a.rows + b.rows, a.rows ? a.cols : b.cols);
  std::copy(a.a.begin(), a.a.end(), out.a.begin());
  std::copy(b.a.begin(), b.a.end(), out.a.begin() + static_cast<std::ptrdiff_t>(a.a.size()));
  return out;
}

std::vector<std::size_t> hnf_rows(IntMat& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t j = 0; j < m.cols && r < m.rows; ++j) {
    // gcd-eliminate column j below row r down to a single nonzero entry
    while (true) {
      std::size_t best = m.rows;
      for (std::size_t i = r; i < m.rows; ++i) {
        if (m.at(i, j) == 0) continue;
        if (best == m.rows || abs(m.at(i, j)) < abs(m.at(best, j))) best = i;
      }
      if (best == m.rows) break; // column clear
      m.swap_rows(r, best);
      bool others = false;
      for (std::size_t i = r + 1; i < m.rows; ++i) {
        if (m.at(i, j) == 0) continue;
        Int q = floor_div(m.at(i, j), m.at(r, j));
        m.add_row(i, r, -q);
        if (m.at(i, j) != 0) others = true;
      }
      if (!others) break;
    }
    if (r < m.rows && m.at(r, j) != 0) {
      if (m.at(r, j) < 0)
        for (std::size_t c = 0; c < m.cols; ++c) m.at(r, c) = -m.at(r, c);
      for (std::size_t i = 0; i < r; ++i) {
        Int q = floor_div(m.at(i, j), m.at(r, j));
        m.add_row(i, r, -q);
      }
      pivots.push_back(j);
      ++r;
    }
  }
  return pivots;
}

std::size_t rank_of(IntMat m) { return hnf_rows(m).size(); }

bool hnf_member(const IntMat& h, const std::vector<std::size_t>& pivots,
                std::vector<Int> v, std::vector<Int>* coeffs) {
  if (v.size() != h.cols) throw error("hnf_member: dimension mismatch");
  if (coeffs) coeffs->assign(pivots.size(), 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const Int& c = v[pivots[r]];
    if (c == 0) continue;
    if (c % h.at(r, pivots[r]) != 0) return false;
    Int q = c / h.at(r, pivots[r]);
    for (std::size_t k = 0; k < h.cols; ++k) v[k] -= q * h.at(r, k);
    if (coeffs) (*coeffs)[r] = q;
  }
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

IntMat kernel_basis(const IntMat& m) {
  // Row-reduce [m^T | I]; rows whose left block vanish carry a kernel basis
  // in the right block.
  IntMat t = m.transposed();
  const std::size_t n = t.rows; // = m.cols
  IntMat aug(n, t.cols + n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < t.cols; ++c) aug.at(r, c) = t.at(r, c);
    aug.at(r, t.cols + r) = 1;
  }
  // Same elimination as hnf_rows but pivoting only on the left block.
  std::size_t r = 0;
  for (std::size_t j = 0; j < t.cols && r < n; ++j) {
    while (true) {
      std::size_t best = n;
      for (std::size_t i = r; i < n; ++i) {
        if (aug.at(i, j) == 0) continue;
        if (best == n || abs(aug.at(i, j)) < abs(aug.at(best, j))) best = i;
      }
      if (best == n) break;
      aug.swap_rows(r, best);
      bool others = false;
      for (std::size_t i = r + 1; i < n; ++i) {
        if (aug.at(i, j) == 0) continue;
        Int q = floor_div(aug.at(i, j), aug.at(r, j));
        aug.add_row(i, r, -q);
        if (aug.at(i, j) != 0) others = true;
      }
      if (!others) break;
    }
    if (r < n && aug.at(r, j) != 0) ++r;
  }
  IntMat ker(n - r, m.cols);
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t c = 0; c < n; ++c) ker.at(i - r, c) = aug.at(i, t.cols + c);
  hnf_rows(ker);
  return ker;
}

bool solve_columns(const IntMat& m, const std::vector<Int>& t, std::vector<Int>& v) {
  if (t.size() != m.rows) throw error("solve_columns: dimension mismatch");
  // HNF the rows of [m^T | I]; the right block then records each reduced row
  // as a combination of columns of m.
  IntMat mt = m.transposed();
  const std::size_t n = mt.rows; // = m.cols
  IntMat aug(n, mt.cols + n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < mt.cols; ++c) aug.at(r, c) = mt.at(r, c);
    aug.at(r, mt.cols + r) = 1;
  }
  std::vector<std::size_t> pivots = hnf_rows(aug);
  std::size_t r0 = 0;
  while (r0 < pivots.size() && pivots[r0] < mt.cols) ++r0;
  IntMat h(r0, mt.cols);
  for (std::size_t r = 0; r < r0; ++r)
    for (std::size_t c = 0; c < mt.cols; ++c) h.at(r, c) = aug.at(r, c);
  std::vector<std::size_t> hp(pivots.begin(), pivots.begin() + static_cast<std::ptrdiff_t>(r0));
  std::vector<Int> coeffs;
  if (!hnf_member(h, hp, t, &coeffs)) return false;
  v.assign(n, 0);
  for (std::size_t r = 0; r < r0; ++r) {
    if (coeffs[r] == 0) continue;
    for (std::size_t c = 0; c < n; ++c) v[c] += coeffs[r] * aug.at(r, mt.cols + c);
  }
  return true;
}

SmithForm smith_form(IntMat m) {
  SmithForm out;
  std::size_t t = 0;
  const std::size_t lim = std::min(m.rows, m.cols);
  while (t < lim) {
    // locate a minimal nonzero entry in the trailing block
    std::size_t pr = m.rows, pc = 0;
    for (std::size_t i = t; i < m.rows; ++i)
      for (std::size_t j = t; j < m.cols; ++j) {
        if (m.at(i, j) == 0) continue;
        if (pr == m.rows || abs(m.at(i, j)) < abs(m.at(pr, pc))) { pr = i; pc = j; }
      }
    if (pr == m.rows) break; // trailing block is zero
    m.swap_rows(t, pr);
    if (pc != t)
      for (std::size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, t), m.at(i, pc));

    bool dirty = false;
    for (std::size_t i = t + 1; i < m.rows; ++i) {
      if (m.at(i, t) == 0) continue;
      Int q = floor_div(m.at(i, t), m.at(t, t));
      m.add_row(i, t, -q);
      if (m.at(i, t) != 0) dirty = true;
    }
    for (std::size_t j = t + 1; j < m.cols; ++j) {
      if (m.at(t, j) == 0) continue;
      Int q = floor_div(m.at(t, j), m.at(t, t));
      for (std::size_t i = 0; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, t);
      if (m.at(t, j) != 0) dirty = true;
    }
    if (dirty) continue; // smaller remainders appeared; redo the pivot hunt

    // enforce divisibility of the remaining block by the pivot
    bool fixed = true;
    for (std::size_t i = t + 1; i < m.rows && fixed; ++i)
      for (std::size_t j = t + 1; j < m.cols && fixed; ++j)
        if (m.at(i, j) % m.at(t, t) != 0) {
          m.add_row(t, i, 1);
          fixed = false;
        }
    if (!fixed) continue;
    ++t;
  }
  out.rank = t;
  for (std::size_t i = 0; i < t; ++i) {
    Int d = m.at(i, i);
    out.divisors.push_back(d < 0 ? Int(-d) : d);
  }
  return out;
}

} // namespace torelli
