#include "torelli/exterior.hpp"

#include "torelli/lie.hpp"
#include "torelli/util.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>

namespace torelli {

namespace {

struct WedgeTables {
  std::vector<std::array<int, 2>> pairs;
  std::vector<std::array<int, 3>> triples;
  std::vector<int> triple_index; // dense n^3 lookup, -1 off the strict chain
};

const WedgeTables& tables(int n) {
  static std::map<int, WedgeTables> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n < 0 || n > 20) throw error("wedge tables: dimension out of range");
  WedgeTables t;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) t.pairs.push_back({a, b});
  t.triple_index.assign(static_cast<std::size_t>(n) * n * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        t.triple_index[(static_cast<std::size_t>(a) * n + b) * n + c] =
            static_cast<int>(t.triples.size());
        t.triples.push_back({a, b, c});
      }
  return cache.emplace(n, std::move(t)).first->second;
}

} // namespace

std::size_t pair_dim(int n) { return tables(n).pairs.size(); }
std::size_t wedge3_dim(int n) { return tables(n).triples.size(); }

const std::vector<std::array<int, 2>>& pair_basis(int n) { return tables(n).pairs; }
const std::vector<std::array<int, 3>>& wedge3_basis(int n) { return tables(n).triples; }

int pair_index(int n, int a, int b) {
  if (!(0 <= a && a < b && b < n)) throw error("pair_index: not a strict pair");
  return a * (2 * n - a - 1) / 2 + (b - a - 1);
}

int wedge3_index(int n, int a, int b, int c) {
  if (!(0 <= a && a < b && b < c && c < n)) throw error("wedge3_index: not a strict triple");
  return tables(n).triple_index[(static_cast<std::size_t>(a) * n + b) * n + c];
}

std::pair<int, int> wedge3_sorted(int n, int a, int b, int c) {
  int v[3] = {a, b, c};
  int sign = 1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2 - i; ++j)
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        sign = -sign;
      }
  if (v[0] == v[1] || v[1] == v[2]) throw error("wedge3_sorted: repeated index");
  return {wedge3_index(n, v[0], v[1], v[2]), sign};
}

IntMat eta_matrix(int n) {
  const auto& triples = wedge3_basis(n);
  const std::size_t p = pair_dim(n);
  IntMat out(static_cast<std::size_t>(n) * p, triples.size());
  for (std::size_t t = 0; t < triples.size(); ++t) {
    const auto [a, b, c] = triples[t];
    out.at(static_cast<std::size_t>(a) * p + pair_index(n, b, c), t) += 1;
    out.at(static_cast<std::size_t>(b) * p + pair_index(n, a, c), t) -= 1;
    out.at(static_cast<std::size_t>(c) * p + pair_index(n, a, b), t) += 1;
  }
  return out;
}

IntMat theta_matrix(int n) {
  const auto& pairs = pair_basis(n);
  const std::size_t p = pairs.size();
  const LyndonBasis& basis = lyndon_basis(n, 3);
  IntMat out(basis.size(), static_cast<std::size_t>(n) * p);
  for (int h = 0; h < n; ++h)
    for (std::size_t q = 0; q < p; ++q) {
      const auto [a, b] = pairs[q];
      // [h,[a,b]] = hab - hba - abh + bah
      Poly poly;
      const auto uh = static_cast<std::uint8_t>(h);
      const auto ua = static_cast<std::uint8_t>(a);
      const auto ub = static_cast<std::uint8_t>(b);
      poly[mono_pack({uh, ua, ub})] += 1;
      poly[mono_pack({uh, ub, ua})] -= 1;
      poly[mono_pack({ua, ub, uh})] -= 1;
      poly[mono_pack({ub, ua, uh})] += 1;
      LieVec v = lie_from_poly(n, 3, poly);
      for (std::size_t r = 0; r < basis.size(); ++r)
        out.at(r, static_cast<std::size_t>(h) * p + q) = v.c[r];
    }
  return out;
}

int pairing(int g, int a, int b) {
  if (a < g && b == a + g) return 1;
  if (a >= g && b == a - g) return -1;
  return 0;
}

IntMat contract3_matrix(int g) {
  const int n = 2 * g;
  const auto& triples = wedge3_basis(n);
  IntMat out(static_cast<std::size_t>(n), triples.size());
  for (std::size_t t = 0; t < triples.size(); ++t) {
    const auto [h1, h2, h3] = triples[t];
    out.at(static_cast<std::size_t>(h3), t) += pairing(g, h1, h2);
    out.at(static_cast<std::size_t>(h1), t) += pairing(g, h2, h3);
    out.at(static_cast<std::size_t>(h2), t) += pairing(g, h3, h1);
  }
  return out;
}

IntMat contract2_matrix(int g) {
  const int n = 2 * g;
  const auto& pairs = pair_basis(n);
  IntMat out(1, pairs.size());
  for (std::size_t q = 0; q < pairs.size(); ++q)
    out.at(0, q) = pairing(g, pairs[q][0], pairs[q][1]);
  return out;
}

IntMat projL_matrix(int g) {
  IntMat out(static_cast<std::size_t>(g), static_cast<std::size_t>(2 * g));
  for (int i = 0; i < g; ++i) out.at(i, g + i) = 1;
  return out;
}

IntMat proj_p_matrix(int g) {
  const int n = 2 * g;
  const auto& triples = wedge3_basis(n);
  IntMat out(wedge3_dim(g), triples.size());
  for (std::size_t t = 0; t < triples.size(); ++t) {
    const auto [a, b, c] = triples[t];
    if (a >= g) // b, c larger still, so the whole wedge is in the y block
      out.at(static_cast<std::size_t>(wedge3_index(g, a - g, b - g, c - g)), t) = 1;
  }
  return out;
}

Lattice Km_lattice(int g, int m) {
  const int n = 2 * g;
  const auto& triples = wedge3_basis(n);
  IntMat rows(0, triples.size());
  std::vector<std::vector<Int>> gens;
  for (std::size_t t = 0; t < triples.size(); ++t) {
    int xs = 0;
    for (int v : triples[t])
      if (v < g) ++xs;
    if (xs >= m) {
      std::vector<Int> e(triples.size());
      e[t] = 1;
      gens.push_back(std::move(e));
    }
  }
  return Lattice::from_vectors(triples.size(), gens);
}

Lattice kernel_K(int g) {
  IntMat top = proj_p_matrix(g);
  IntMat bottom = projL_matrix(g) * contract3_matrix(g);
  return Lattice::kernel(vstack(top, bottom));
}

std::vector<std::vector<Int>> K_family(int g, int fam) {
  const int n = 2 * g;
  const std::size_t dim = wedge3_dim(n);
  std::vector<std::vector<Int>> out;
  auto unit = [&](int idx, int sign) {
    std::vector<Int> e(dim);
    e[static_cast<std::size_t>(idx)] = sign;
    return e;
  };
  switch (fam) {
    case 1:
      for (int a = 0; a < g; ++a)
        for (int b = a + 1; b < g; ++b)
          for (int c = b + 1; c < g; ++c) out.push_back(unit(wedge3_index(n, a, b, c), 1));
      break;
    case 2:
      for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j)
          for (int k = 0; k < g; ++k) out.push_back(unit(wedge3_index(n, i, j, g + k), 1));
      break;
    case 3:
      for (int a = 0; a < g; ++a)
        for (int b = 0; b < g; ++b)
          for (int c = b + 1; c < g; ++c) {
            if (b == a || c == a) continue;
            out.push_back(unit(wedge3_index(n, a, g + b, g + c), 1));
          }
      break;
    case 4:
      for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
          for (int k = 0; k < g; ++k) {
            if (i == j || j == k || i == k) continue;
            std::vector<Int> v(dim);
            auto [t1, s1] = wedge3_sorted(n, g + i, i, g + k);
            auto [t2, s2] = wedge3_sorted(n, j, g + j, g + k);
            v[static_cast<std::size_t>(t1)] += s1;
            v[static_cast<std::size_t>(t2)] += s2;
            out.push_back(std::move(v));
          }
      break;
    default:
      throw error("K_family: family must be 1..4");
  }
  return out;
}

KGenReport K_generators_check(int g) {
  KGenReport rep;
  const Lattice K = kernel_K(g);
  rep.kernel_rank = K.rank();

  std::vector<std::vector<Int>> all;
  rep.members_ok = true;
  for (int fam = 1; fam <= 4; ++fam)
    for (auto& v : K_family(g, fam)) {
      if (!K.contains(v)) rep.members_ok = false;
      all.push_back(std::move(v));
    }
  const Lattice span = Lattice::from_vectors(wedge3_dim(2 * g), all);
  rep.family_rank = span.rank();
  rep.generates = rep.members_ok && span == K;

  rep.family2_rank = Lattice::from_vectors(wedge3_dim(2 * g), K_family(g, 2)).rank();
  std::vector<std::vector<Int>> restricted;
  {
    const int n = 2 * g;
    for (int i = 0; i < g; ++i)
      for (int j = i + 1; j < g; ++j)
        for (int k = 0; k < g; ++k) {
          if (k == j) continue;
          std::vector<Int> e(wedge3_dim(n));
          e[static_cast<std::size_t>(wedge3_index(n, i, j, g + k))] = 1;
          restricted.push_back(std::move(e));
        }
  }
  rep.family2_restricted_rank = Lattice::from_vectors(wedge3_dim(2 * g), restricted).rank();

  std::ostringstream os;
  os << "rank K = " << rep.kernel_rank << ", family span rank = " << rep.family_rank
     << ", family (2) rank = " << rep.family2_rank
     << " (restricted to k != j: " << rep.family2_restricted_rank << ")";
  rep.detail = os.str();
  return rep;
}

bool is_symplectic(int g, const IntMat& s) {
  const std::size_t n = static_cast<std::size_t>(2 * g);
  if (s.rows != n || s.cols != n) return false;
  IntMat omega(n, n);
  for (int i = 0; i < g; ++i) {
    omega.at(static_cast<std::size_t>(i), static_cast<std::size_t>(g + i)) = 1;
    omega.at(static_cast<std::size_t>(g + i), static_cast<std::size_t>(i)) = -1;
  }
  return s.transposed() * omega * s == omega;
}

bool is_Bg(int g, const IntMat& s) {
  if (!is_symplectic(g, s)) return false;
  for (int i = 0; i < g; ++i)
    for (int r = 0; r < 2 * g; ++r)
      if (s.at(static_cast<std::size_t>(r), static_cast<std::size_t>(i)) != (r == i ? 1 : 0))
        return false;
  return true;
}

IntMat Bg_embed(int g, const IntMat& a) {
  if (a.rows != static_cast<std::size_t>(g) || a.cols != static_cast<std::size_t>(g))
    throw error("Bg_embed: block must be g x g");
  if (a != a.transposed()) throw error("Bg_embed: block must be symmetric");
  IntMat s = IntMat::identity(static_cast<std::size_t>(2 * g));
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j)
      s.at(static_cast<std::size_t>(i), static_cast<std::size_t>(g + j)) =
          a.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  return s;
}

std::vector<IntMat> symmetric_elementary(int g) {
  std::vector<IntMat> out;
  for (int i = 0; i < g; ++i) {
    IntMat e(static_cast<std::size_t>(g), static_cast<std::size_t>(g));
    e.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = 1;
    out.push_back(std::move(e));
  }
  for (int i = 0; i < g; ++i)
    for (int j = i + 1; j < g; ++j) {
      IntMat e(static_cast<std::size_t>(g), static_cast<std::size_t>(g));
      e.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = 1;
      e.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = 1;
      out.push_back(std::move(e));
    }
  return out;
}

IntMat sp3_matrix(const IntMat& s) {
  if (s.rows != s.cols) throw error("sp3_matrix: square matrix required");
  const int n = static_cast<int>(s.rows);
  const auto& triples = wedge3_basis(n);
  IntMat out(triples.size(), triples.size());
  for (std::size_t col = 0; col < triples.size(); ++col) {
    const auto [a, b, c] = triples[col];
    for (std::size_t row = 0; row < triples.size(); ++row) {
      const auto [p, q, r] = triples[row];
      // coefficient of e_p^e_q^e_r in (S e_a)^(S e_b)^(S e_c): the 3x3 minor
      const Int& m00 = s.at(p, a);
      const Int& m01 = s.at(p, b);
      const Int& m02 = s.at(p, c);
      const Int& m10 = s.at(q, a);
      const Int& m11 = s.at(q, b);
      const Int& m12 = s.at(q, c);
      const Int& m20 = s.at(r, a);
      const Int& m21 = s.at(r, b);
      const Int& m22 = s.at(r, c);
      Int det = m00 * (m11 * m22 - m12 * m21) - m01 * (m10 * m22 - m12 * m20) +
                m02 * (m10 * m21 - m11 * m20);
      if (det != 0) out.at(row, col) = det;
    }
  }
  return out;
}

std::string wedge3_str(const std::vector<Int>& coords, int n, int g) {
  const auto& triples = wedge3_basis(n);
  if (coords.size() != triples.size()) throw error("wedge3_str: bad coordinate size");
  auto letter = [&](int l) {
    if (g == n) return "e" + std::to_string(l + 1);
    return l < g ? "x" + std::to_string(l + 1) : "y" + std::to_string(l - g + 1);
  };
  std::ostringstream os;
  bool first = true;
  for (std::size_t t = 0; t < triples.size(); ++t) {
    if (coords[t] == 0) continue;
    Int a = coords[t];
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (a != 1) os << a << "*";
    os << letter(triples[t][0]) << "^" << letter(triples[t][1]) << "^" << letter(triples[t][2]);
  }
  if (first) return "0";
  return os.str();
}

KmGenReport Km_generation_check(int g, int m) {
  if (m < 2 || m > 3) throw error("Km_generation_check: m must be 2 or 3");
  KmGenReport rep;
  const std::size_t dim = wedge3_dim(2 * g);
  const Lattice below = Km_lattice(g, m - 1);
  const Lattice target = Km_lattice(g, m);
  const Lattice above = Km_lattice(g, m + 1);

  std::vector<std::vector<Int>> moved;
  rep.inclusion_ok = true;
  for (const IntMat& a : symmetric_elementary(g)) {
    IntMat act = sp3_matrix(Bg_embed(g, a)) - IntMat::identity(dim);
    for (std::size_t r = 0; r < below.rank(); ++r) {
      std::vector<Int> w(dim);
      for (std::size_t c = 0; c < dim; ++c) w[c] = below.basis.at(r, c);
      std::vector<Int> img = mat_vec(act, w);
      if (!target.contains(img)) rep.inclusion_ok = false;
      moved.push_back(std::move(img));
    }
  }
  for (std::size_t r = 0; r < above.rank(); ++r) {
    std::vector<Int> w(dim);
    for (std::size_t c = 0; c < dim; ++c) w[c] = above.basis.at(r, c);
    moved.push_back(std::move(w));
  }
  const Lattice span = Lattice::from_vectors(dim, moved);
  rep.generates = rep.inclusion_ok && span == target;

  std::ostringstream os;
  os << "rank K_" << m - 1 << " = " << below.rank() << ", rank K_" << m << " = "
     << target.rank() << ", moved span rank = " << span.rank();
  rep.detail = os.str();
  return rep;
}

} // namespace torelli
