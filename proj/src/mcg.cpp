#include "torelli/mcg.hpp"

#include "torelli/exterior.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace torelli {

namespace {

std::size_t bracket_checks_ = 0;
std::size_t bracket_failures_ = 0;

void check_letter_range(int g, const Word& w) {
  if (max_letter(w) >= 2 * g) throw error("endomorphism image mentions a letter out of range");
}

} // namespace

FreeEndo make_endo(int g, Boundary conv, std::vector<Word> images,
                   std::optional<std::vector<Word>> inverse_images) {
  if (g < 1) throw error("make_endo: genus must be positive");
  if (images.size() != static_cast<std::size_t>(2 * g))
    throw error("make_endo: expected one image per generator");
  for (const Word& w : images) check_letter_range(g, w);

  const Word bd = boundary_word(g, conv);
  if (substitute(bd, images) != bd)
    throw error("make_endo: boundary word is not fixed");

  IntMat s(static_cast<std::size_t>(2 * g), static_cast<std::size_t>(2 * g));
  for (int z = 0; z < 2 * g; ++z) {
    std::vector<Int> col = exponent_sums(images[static_cast<std::size_t>(z)], 2 * g);
    for (int r = 0; r < 2 * g; ++r)
      s.at(static_cast<std::size_t>(r), static_cast<std::size_t>(z)) =
          col[static_cast<std::size_t>(r)];
  }
  SmithForm sf = smith_form(s);
  bool unimodular = sf.rank == static_cast<std::size_t>(2 * g);
  for (const Int& d : sf.divisors)
    if (d != 1) unimodular = false;
  if (!unimodular) throw error("make_endo: abelianized map is not invertible over Z");

  if (inverse_images) {
    if (inverse_images->size() != images.size())
      throw error("make_endo: inverse witness has the wrong arity");
    for (const Word& w : *inverse_images) check_letter_range(g, w);
    for (int z = 0; z < 2 * g; ++z) {
      const Word zl = Word::letter(z);
      if (substitute(images[static_cast<std::size_t>(z)], *inverse_images) != zl ||
          substitute((*inverse_images)[static_cast<std::size_t>(z)], images) != zl)
        throw error("make_endo: inverse witness does not invert the map");
    }
  }

  FreeEndo f;
  f.g = g;
  f.conv = conv;
  f.im = std::move(images);
  f.inv = std::move(inverse_images);
  return f;
}

FreeEndo endo_identity(int g, Boundary conv) {
  std::vector<Word> im;
  for (int z = 0; z < 2 * g; ++z) im.push_back(Word::letter(z));
  FreeEndo f;
  f.g = g;
  f.conv = conv;
  f.im = im;
  f.inv = std::move(im);
  return f;
}

FreeEndo endo_compose(const FreeEndo& f, const FreeEndo& h) {
  if (f.g != h.g) throw error("endo_compose: genus mismatch");
  if (f.conv != h.conv) throw error("endo_compose: boundary conventions differ");
  FreeEndo out;
  out.g = f.g;
  out.conv = f.conv;
  out.im.reserve(f.im.size());
  for (const Word& w : f.im) out.im.push_back(substitute(w, h.im));
  if (f.inv && h.inv) {
    std::vector<Word> inv;
    inv.reserve(h.inv->size());
    for (const Word& w : *h.inv) inv.push_back(substitute(w, *f.inv));
    out.inv = std::move(inv);
  }
  return out;
}

FreeEndo endo_inverse(const FreeEndo& f) {
  if (!f.inv) throw error("endo_inverse: no inverse witness");
  FreeEndo out;
  out.g = f.g;
  out.conv = f.conv;
  out.im = *f.inv;
  out.inv = f.im;
  return out;
}

FreeEndo endo_commutator(const FreeEndo& f, const FreeEndo& h) {
  FreeEndo a = endo_compose(endo_inverse(h), endo_inverse(f));
  a = endo_compose(a, h);
  return endo_compose(a, f);
}

FreeEndo endo_conjugate(const FreeEndo& f, const FreeEndo& c) {
  return endo_compose(endo_compose(endo_inverse(c), f), c);
}

Word endo_apply(const FreeEndo& f, const Word& w) { return substitute(w, f.im); }

IntMat symplectic_matrix(const FreeEndo& f) {
  const int n = 2 * f.g;
  IntMat s(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int z = 0; z < n; ++z) {
    std::vector<Int> col = exponent_sums(f.image(z), n);
    for (int r = 0; r < n; ++r)
      s.at(static_cast<std::size_t>(r), static_cast<std::size_t>(z)) =
          col[static_cast<std::size_t>(r)];
  }
  return s;
}

bool is_torelli(const FreeEndo& f) {
  return symplectic_matrix(f) == IntMat::identity(static_cast<std::size_t>(2 * f.g));
}

bool is_in_Lbar(const FreeEndo& f) { return is_Bg(f.g, symplectic_matrix(f)); }

Degree endo_weight_degree(const FreeEndo& f, int cutoff) {
  const int k = 2 * f.g;
  int exact_min = infinity_degree;
  int bound_min = infinity_degree;
  for (int z = 0; z < k; ++z) {
    Word w = Word::letter(z).inverse() * f.image(z);
    Degree d = word_degree(w, k, cutoff);
    if (d.exact)
      exact_min = std::min(exact_min, d.value);
    else
      bound_min = std::min(bound_min, d.value);
  }
  Degree out;
  if (exact_min <= bound_min) {
    out.value = exact_min;
    out.exact = true;
  } else {
    out.value = bound_min;
    out.exact = false;
  }
  if (out.value != infinity_degree) out.value -= 1;
  return out;
}

HLieVec johnson_morita(const FreeEndo& f, int n) {
  if (n < 1) throw error("johnson homomorphism: level must be positive");
  const int k = 2 * f.g;
  const int g = f.g;

  std::size_t acc_cells = 1;
  for (int i = 0; i < n + 2; ++i) acc_cells *= static_cast<std::size_t>(k);
  if (acc_cells > series_cell_budget())
    throw budget_error("johnson homomorphism: level exceeds the series budget");

  std::vector<std::vector<Int>> slice(static_cast<std::size_t>(k));
  for (int z = 0; z < k; ++z) {
    Word w = Word::letter(z).inverse() * f.image(z);
    Series s = magnus_expand(w, k, n + 1);
    for (int d = 1; d <= n; ++d)
      for (const Int& v : s.c[static_cast<std::size_t>(d)])
        if (v != 0) throw error("johnson homomorphism: map has weight below the level");
    slice[static_cast<std::size_t>(z)] = std::move(s.c[static_cast<std::size_t>(n + 1)]);
  }

  const std::size_t w = lyndon_basis(k, n + 1).size();
  HLieVec out = hlie_zero(k, n + 1);
  for (int i = 0; i < g; ++i) {
    LieVec ly = lie_from_dense(k, n + 1, slice[static_cast<std::size_t>(g + i)]);
    LieVec lx = lie_from_dense(k, n + 1, slice[static_cast<std::size_t>(i)]);
    for (std::size_t u = 0; u < w; ++u) {
      out.c[static_cast<std::size_t>(i) * w + u] += ly.c[u];
      out.c[static_cast<std::size_t>(g + i) * w + u] -= lx.c[u];
    }
  }

  // post-condition: the image brackets to zero in the next degree
  std::vector<Int> acc(acc_cells);
  for (int i = 0; i < g; ++i) {
    dense_bracket_letter_acc(k, i, slice[static_cast<std::size_t>(g + i)], 1, acc);
    dense_bracket_letter_acc(k, g + i, slice[static_cast<std::size_t>(i)], -1, acc);
  }
  ++bracket_checks_;
  for (const Int& v : acc)
    if (v != 0) {
      ++bracket_failures_;
      break;
    }

  return out;
}

std::size_t johnson_bracket_checks() { return bracket_checks_; }
std::size_t johnson_bracket_failures() { return bracket_failures_; }

std::vector<Int> johnson_tau(const FreeEndo& f) {
  if (!is_torelli(f)) throw error("johnson_tau: map does not act trivially on homology");
  HLieVec j = johnson_morita(f, 1);
  std::vector<Int> tau;
  if (!solve_columns(eta_matrix(2 * f.g), j.c, tau))
    throw error("johnson_tau: value is not in the image of eta");
  return tau;
}

bool in_johnson_kernel(const FreeEndo& f) {
  return is_torelli(f) && johnson_morita(f, 1).is_zero();
}

std::vector<LieVec> hat_J_x(const FreeEndo& f) {
  const int k = 2 * f.g;
  std::vector<LieVec> out;
  out.reserve(static_cast<std::size_t>(f.g));
  for (int i = 0; i < f.g; ++i) {
    Word w = Word::letter(i).inverse() * f.image(i);
    out.push_back(lie_class(w, k, 2));
  }
  return out;
}

bool CalJ::is_zero() const {
  for (const Int& v : wedge)
    if (v != 0) return false;
  for (const Int& v : omega)
    if (v != 0) return false;
  return true;
}

CalJ cal_J(const FreeEndo& f) {
  if (!is_in_Lbar(f)) throw error("cal_J: map does not act trivially on the x classes");
  const int g = f.g;
  const int n = 2 * g;
  std::vector<LieVec> hx = hat_J_x(f);

  const auto& pairs2g = pair_basis(n);
  const std::size_t pg = pair_dim(g);
  std::vector<Int> q(static_cast<std::size_t>(g) * pg);
  std::vector<Int> omega(static_cast<std::size_t>(g));
  const IntMat c2 = contract2_matrix(g);
  for (int i = 0; i < g; ++i) {
    // reduce hat J(f) x_i mod L: only y^y pairs survive
    for (std::size_t t = 0; t < pairs2g.size(); ++t) {
      const Int& v = hx[static_cast<std::size_t>(i)].c[t];
      if (v == 0) continue;
      const auto [a, b] = pairs2g[t];
      if (a >= g)
        q[static_cast<std::size_t>(i) * pg +
          static_cast<std::size_t>(pair_index(g, a - g, b - g))] -= v;
    }
    std::vector<Int> contracted = mat_vec(c2, hx[static_cast<std::size_t>(i)].c);
    omega[static_cast<std::size_t>(i)] = -contracted[0];
  }

  std::vector<Int> obstruction = mat_vec(theta_matrix(g), q);
  for (const Int& v : obstruction)
    if (v != 0) throw error("cal_J: value does not descend to the third exterior power");

  CalJ out;
  out.g = g;
  out.omega = std::move(omega);
  if (!solve_columns(eta_matrix(g), q, out.wedge))
    throw error("cal_J: value is not in the image of eta");
  return out;
}

bool commutator_rule_check(const FreeEndo& f, const FreeEndo& h, int n) {
  HLieVec lhs = johnson_morita(endo_commutator(f, h), n);
  HLieVec jh = johnson_morita(h, n);
  HLieVec rhs = hlie_sub(hlie_apply(symplectic_matrix(f), jh), jh);
  return lhs == rhs;
}

FreeEndo meridian_twist(int g, int i, Boundary conv, int sign) {
  if (i < 1 || i > g) throw error("meridian_twist: handle out of range");
  std::vector<Word> im, inv;
  for (int z = 0; z < 2 * g; ++z) {
    im.push_back(Word::letter(z));
    inv.push_back(Word::letter(z));
  }
  const int xi = i - 1, yi = g + i - 1;
  im[static_cast<std::size_t>(yi)] = Word::letter(yi) * Word::letter(xi, sign);
  inv[static_cast<std::size_t>(yi)] = Word::letter(yi) * Word::letter(xi, -sign);
  return make_endo(g, conv, std::move(im), std::move(inv));
}

FreeEndo longitude_twist(int g, int i, int sign) {
  if (i < 1 || i > g) throw error("longitude_twist: handle out of range");
  std::vector<Word> im, inv;
  for (int z = 0; z < 2 * g; ++z) {
    im.push_back(Word::letter(z));
    inv.push_back(Word::letter(z));
  }
  const int xi = i - 1, yi = g + i - 1;
  // x_i |-> m^sign x_i with m = (x1..x_{i-1})^-1 (y1 x1 y1^-1) ..
  // (y_{i-1} x_{i-1} y_{i-1}^-1) y_i. The class of m is y_i, and m is
  // exactly the prefix of the longitude word that separates x_i^-1 from
  // y_i x_i y_i^-1, which is what makes the substitution fix that word;
  // the plain y_i^sign x_i works only on the first handle.
  Word pre;
  for (int j = 0; j < i - 1; ++j) pre.append(Word::letter(j));
  Word m = pre.inverse();
  for (int j = 0; j < i - 1; ++j)
    m = m * Word::letter(g + j) * Word::letter(j) * Word::letter(g + j, -1);
  m = m * Word::letter(yi);
  im[static_cast<std::size_t>(xi)] = m.pow(sign) * Word::letter(xi);
  inv[static_cast<std::size_t>(xi)] = m.pow(-sign) * Word::letter(xi);
  return make_endo(g, Boundary::longitude, std::move(im), std::move(inv));
}

FreeEndo handle_rotation(int g, int i) {
  FreeEndo t = meridian_twist(g, i, Boundary::longitude);
  FreeEndo vinv = endo_inverse(longitude_twist(g, i));
  return endo_compose(endo_compose(t, vinv), t);
}

FreeEndo handle_half_turn(int g, int i) {
  if (i < 1 || i > g) throw error("handle_half_turn: handle out of range");
  std::vector<Word> im, inv;
  for (int z = 0; z < 2 * g; ++z) {
    im.push_back(Word::letter(z));
    inv.push_back(Word::letter(z));
  }
  const int xi = i - 1, yi = g + i - 1;
  const Word x = Word::letter(xi), y = Word::letter(yi);
  im[static_cast<std::size_t>(xi)] = y.inverse();
  im[static_cast<std::size_t>(yi)] = y * x * y.inverse();
  inv[static_cast<std::size_t>(xi)] = x * y * x.inverse();
  inv[static_cast<std::size_t>(yi)] = x.inverse();
  return make_endo(g, Boundary::admissible, std::move(im), std::move(inv));
}

} // namespace torelli
