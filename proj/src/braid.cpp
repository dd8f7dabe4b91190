#include "torelli/braid.hpp"

#include "torelli/exterior.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace torelli {

namespace {

constexpr std::size_t longitude_length_budget = 4'000'000;

void check_longitude_budget(const Word& w) {
  if (w.length() > longitude_length_budget)
    throw budget_error("braid longitude exceeds the word budget");
}

Word product_of_letters(int g) {
  Word w;
  for (int i = 0; i < g; ++i) w.append_letter(i + 1);
  return w;
}

Word longitude_identity_word(int g, const std::vector<Word>& lam) {
  Word w;
  for (int i = 0; i < g; ++i) {
    w.append(lam[static_cast<std::size_t>(i)]);
    w.append_letter(i + 1);
    w.append(lam[static_cast<std::size_t>(i)].inverse());
  }
  return w;
}

// images of x_1..x_g under one elementary crossing (1-based k < g)
std::vector<Word> sigma_images(int g, int k, bool inverse) {
  std::vector<Word> im;
  for (int z = 0; z < g; ++z) im.push_back(Word::letter(z));
  const int a = k - 1, b = k;
  const Word xa = Word::letter(a), xb = Word::letter(b);
  if (!inverse) {
    im[static_cast<std::size_t>(a)] = xb;
    im[static_cast<std::size_t>(b)] = xb.inverse() * xa * xb;
  } else {
    im[static_cast<std::size_t>(a)] = xa * xb * xa.inverse();
    im[static_cast<std::size_t>(b)] = xa;
  }
  return im;
}

// w = u x u^-1 freely reduced; returns u with the x exponent cancelled
Word extract_longitude(const Word& w, int g, int letter) {
  std::size_t lo = 0, hi = w.w.size();
  Word u;
  while (hi - lo > 1 && w.w[lo] == -w.w[hi - 1]) {
    u.append_letter(w.w[lo]);
    ++lo;
    --hi;
  }
  if (hi - lo != 1 || w.w[lo] != letter + 1)
    throw error("longitude extraction failed: image is not a conjugate of the generator");
  long long e = exponent_sums(u, g)[static_cast<std::size_t>(letter)].convert_to<long long>();
  u.append(Word::letter(letter, static_cast<int>(-e)));
  return u;
}

} // namespace

PureBraid make_pure_braid(int g, std::vector<Word> longitudes,
                          std::optional<std::vector<Word>> inverse_longitudes,
                          std::vector<Int> framing) {
  if (g < 1) throw error("make_pure_braid: strand count must be positive");
  if (longitudes.size() != static_cast<std::size_t>(g))
    throw error("make_pure_braid: expected one longitude per strand");
  for (const Word& w : longitudes)
    if (max_letter(w) >= g) throw error("make_pure_braid: longitude mentions a letter out of range");
  if (framing.empty()) framing.assign(static_cast<std::size_t>(g), Int(0));
  if (framing.size() != static_cast<std::size_t>(g))
    throw error("make_pure_braid: expected one framing per strand");

  if (longitude_identity_word(g, longitudes) != product_of_letters(g))
    throw error("make_pure_braid: longitudes do not satisfy the boundary identity");

  if (inverse_longitudes) {
    if (inverse_longitudes->size() != longitudes.size())
      throw error("make_pure_braid: inverse witness has the wrong arity");
    for (const Word& w : *inverse_longitudes)
      if (max_letter(w) >= g)
        throw error("make_pure_braid: inverse longitude mentions a letter out of range");
    std::vector<Word> fwd, bwd;
    for (int i = 0; i < g; ++i) {
      fwd.push_back(conjugate(Word::letter(i), longitudes[static_cast<std::size_t>(i)]));
      bwd.push_back(conjugate(Word::letter(i), (*inverse_longitudes)[static_cast<std::size_t>(i)]));
    }
    for (int i = 0; i < g; ++i) {
      Word a = substitute(longitudes[static_cast<std::size_t>(i)], bwd) *
               (*inverse_longitudes)[static_cast<std::size_t>(i)];
      Word b = substitute((*inverse_longitudes)[static_cast<std::size_t>(i)], fwd) *
               longitudes[static_cast<std::size_t>(i)];
      if (!a.empty() || !b.empty())
        throw error("make_pure_braid: inverse witness does not invert the braid");
    }
  }

  PureBraid out;
  out.g = g;
  out.lam = std::move(longitudes);
  out.lam_inv = std::move(inverse_longitudes);
  out.framing = std::move(framing);
  return out;
}

PureBraid braid_identity(int g) {
  return make_pure_braid(g, std::vector<Word>(static_cast<std::size_t>(g)),
                         std::vector<Word>(static_cast<std::size_t>(g)));
}

PureBraid artin_generator(int g, int i, int j) {
  if (!(1 <= i && i < j && j <= g)) throw error("artin_generator: need 1 <= i < j <= g");
  std::vector<std::pair<int, bool>> word;
  for (int k = j - 1; k > i; --k) word.emplace_back(k, false);
  word.emplace_back(i, false);
  word.emplace_back(i, false);
  for (int k = i + 1; k < j; ++k) word.emplace_back(k, true);

  auto run = [&](bool invert) {
    std::vector<Word> im;
    for (int z = 0; z < g; ++z) im.push_back(Word::letter(z));
    auto apply_one = [&](int k, bool inv) {
      std::vector<Word> s = sigma_images(g, k, inv);
      for (Word& w : im) w = substitute(w, s);
    };
    if (!invert) {
      for (const auto& [k, inv] : word) apply_one(k, inv);
    } else {
      for (auto it = word.rbegin(); it != word.rend(); ++it) apply_one(it->first, !it->second);
    }
    std::vector<Word> lam;
    for (int z = 0; z < g; ++z)
      lam.push_back(extract_longitude(im[static_cast<std::size_t>(z)], g, z));
    return lam;
  };

  return make_pure_braid(g, run(false), run(true));
}

PureBraid framing_twist(int g, int i, int s) {
  if (i < 1 || i > g) throw error("framing_twist: strand out of range");
  std::vector<Int> fr(static_cast<std::size_t>(g), Int(0));
  fr[static_cast<std::size_t>(i - 1)] = s;
  return make_pure_braid(g, std::vector<Word>(static_cast<std::size_t>(g)),
                         std::vector<Word>(static_cast<std::size_t>(g)), std::move(fr));
}

std::vector<Word> braid_images(const PureBraid& a) {
  std::vector<Word> im;
  im.reserve(a.lam.size());
  for (int i = 0; i < a.g; ++i)
    im.push_back(conjugate(Word::letter(i), a.lam[static_cast<std::size_t>(i)]));
  return im;
}

Word braid_apply(const PureBraid& a, const Word& w) { return substitute(w, braid_images(a)); }

PureBraid braid_compose(const PureBraid& a, const PureBraid& b) {
  if (a.g != b.g) throw error("braid_compose: strand count mismatch");
  PureBraid out;
  out.g = a.g;
  const std::vector<Word> bim = braid_images(b);
  for (int i = 0; i < a.g; ++i) {
    Word l = substitute(a.lam[static_cast<std::size_t>(i)], bim) * b.lam[static_cast<std::size_t>(i)];
    check_longitude_budget(l);
    out.lam.push_back(std::move(l));
  }
  if (a.lam_inv && b.lam_inv) {
    std::vector<Word> ainv_im;
    for (int i = 0; i < a.g; ++i)
      ainv_im.push_back(conjugate(Word::letter(i), (*a.lam_inv)[static_cast<std::size_t>(i)]));
    std::vector<Word> inv;
    for (int i = 0; i < a.g; ++i) {
      Word l = substitute((*b.lam_inv)[static_cast<std::size_t>(i)], ainv_im) *
               (*a.lam_inv)[static_cast<std::size_t>(i)];
      check_longitude_budget(l);
      inv.push_back(std::move(l));
    }
    out.lam_inv = std::move(inv);
  }
  out.framing.resize(static_cast<std::size_t>(a.g));
  for (int i = 0; i < a.g; ++i)
    out.framing[static_cast<std::size_t>(i)] =
        a.framing[static_cast<std::size_t>(i)] + b.framing[static_cast<std::size_t>(i)];
  return out;
}

PureBraid braid_inverse(const PureBraid& a) {
  if (!a.lam_inv) throw error("braid_inverse: no inverse witness");
  PureBraid out;
  out.g = a.g;
  out.lam = *a.lam_inv;
  out.lam_inv = a.lam;
  out.framing.reserve(a.framing.size());
  for (const Int& s : a.framing) out.framing.push_back(-s);
  return out;
}

PureBraid braid_commutator(const PureBraid& a, const PureBraid& b) {
  PureBraid w = braid_compose(a, b);
  w = braid_compose(w, braid_inverse(a));
  return braid_compose(w, braid_inverse(b));
}

IntMat linking_matrix(const PureBraid& a) {
  const int g = a.g;
  IntMat m(static_cast<std::size_t>(g), static_cast<std::size_t>(g));
  for (int i = 0; i < g; ++i) {
    std::vector<Int> e = exponent_sums(a.lam[static_cast<std::size_t>(i)], g);
    for (int j = 0; j < g; ++j)
      if (j != i) m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = e[static_cast<std::size_t>(j)];
    m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = a.framing[static_cast<std::size_t>(i)];
  }
  if (m != m.transposed()) throw error("linking_matrix: longitudes give an asymmetric matrix");
  return m;
}

Degree braid_weight_degree(const PureBraid& a, int cutoff) {
  int exact_min = infinity_degree;
  int bound_min = infinity_degree;
  for (const Word& l : a.lam) {
    Degree d = word_degree(l, a.g, cutoff);
    if (d.exact)
      exact_min = std::min(exact_min, d.value);
    else
      bound_min = std::min(bound_min, d.value);
  }
  for (const Int& s : a.framing)
    if (s != 0) exact_min = std::min(exact_min, 1);
  Degree out;
  if (exact_min <= bound_min) {
    out.value = exact_min;
    out.exact = true;
  } else {
    out.value = bound_min;
    out.exact = false;
  }
  return out;
}

namespace {

int framing_as_int(const Int& s) {
  if (s > 1000000 || s < -1000000) throw error("framing out of range");
  return static_cast<int>(s.convert_to<long long>());
}

} // namespace

FreeEndo psi(const PureBraid& a) {
  const int g = a.g;
  std::vector<Word> im;
  for (int i = 0; i < g; ++i)
    im.push_back(conjugate(Word::letter(i), a.lam[static_cast<std::size_t>(i)]));
  for (int i = 0; i < g; ++i) {
    // y_i x_i^-s lam_i^-1: the framing factor must sit before lam_i^-1,
    // or y_i x_i y_i^-1 is no longer fixed once lam_i and s_i are both
    // nontrivial
    Word w = Word::letter(g + i);
    w.append(Word::letter(i, -framing_as_int(a.framing[static_cast<std::size_t>(i)])));
    w.append(a.lam[static_cast<std::size_t>(i)].inverse());
    im.push_back(std::move(w));
  }
  std::optional<std::vector<Word>> inv;
  if (a.lam_inv) {
    std::vector<Word> iv;
    for (int i = 0; i < g; ++i)
      iv.push_back(conjugate(Word::letter(i), (*a.lam_inv)[static_cast<std::size_t>(i)]));
    for (int i = 0; i < g; ++i) {
      Word w = Word::letter(g + i);
      w.append(Word::letter(i, framing_as_int(a.framing[static_cast<std::size_t>(i)])));
      w.append((*a.lam_inv)[static_cast<std::size_t>(i)].inverse());
      iv.push_back(std::move(w));
    }
    inv = std::move(iv);
  }
  return make_endo(g, Boundary::longitude, std::move(im), std::move(inv));
}

FreeEndo kappa(const PureBraid& a) {
  const int g = a.g;
  auto images_from = [&](const std::vector<Word>& lam) {
    std::vector<Word> im(static_cast<std::size_t>(2 * g));
    for (int i = 0; i < g; ++i) {
      Word d = delta_word(g, lam[static_cast<std::size_t>(i)]);
      im[static_cast<std::size_t>(i)] = conjugate(Word::letter(i), d);
      im[static_cast<std::size_t>(g + i)] = conjugate(Word::letter(g + i), d);
    }
    return im;
  };
  std::optional<std::vector<Word>> inv;
  if (a.lam_inv) inv = images_from(*a.lam_inv);
  return make_endo(g, Boundary::admissible, images_from(a.lam), std::move(inv));
}

Word delta_word(int g, const Word& w) {
  if (max_letter(w) >= g) throw error("delta_word: word mentions a letter out of range");
  std::vector<Word> im;
  for (int i = 0; i < g; ++i)
    im.push_back(group_commutator(Word::letter(i), Word::letter(g + i)));
  return substitute(w, im);
}

std::vector<Int> J_b(const PureBraid& a) {
  const int g = a.g;
  for (const Int& s : a.framing)
    if (s != 0) throw error("J_b: braid has a nonzero framing");
  const std::size_t p = lyndon_basis(g, 2).size();
  std::vector<Int> q(static_cast<std::size_t>(g) * p);
  LieVec sigma_sum = lie_zero(g, 3);
  for (int i = 0; i < g; ++i) {
    LieVec l = lie_class(a.lam[static_cast<std::size_t>(i)], g, 2);
    for (std::size_t t = 0; t < p; ++t) q[static_cast<std::size_t>(i) * p + t] = l.c[t];
    sigma_sum = lie_add(sigma_sum, lie_bracket(lie_letter(g, i), l));
  }
  if (!sigma_sum.is_zero()) throw error("J_b: value does not lie in the kernel of the bracket");
  std::vector<Int> out;
  if (!solve_columns(eta_matrix(g), q, out)) throw error("J_b: value is not in the image of eta");
  return out;
}

IntMat wedge3_x_embed(int g) {
  const auto& small = wedge3_basis(g);
  IntMat out(wedge3_dim(2 * g), small.size());
  for (std::size_t t = 0; t < small.size(); ++t) {
    const auto [a, b, c] = small[t];
    out.at(static_cast<std::size_t>(wedge3_index(2 * g, a, b, c)), t) = 1;
  }
  return out;
}

bool in_L_tensor_LL(const HLieVec& v, int g) {
  if (v.k != 2 * g) throw error("in_L_tensor_LL: alphabet mismatch");
  const LyndonBasis& b = lyndon_basis(v.k, v.m);
  const std::size_t w = b.size();
  for (int h = 0; h < v.k; ++h)
    for (std::size_t u = 0; u < w; ++u) {
      if (v.c[static_cast<std::size_t>(h) * w + u] == 0) continue;
      if (h >= g) return false;
      if (xcount(b.word(u), g) != v.m) return false;
    }
  return true;
}

long long rank_r(int g, int n, bool framed) {
  if (g < 1 || n < 1) throw error("rank_r: arguments out of range");
  long long r = 0;
  for (int k = 1; k < g; ++k) r += witt(k, n);
  if (framed && n == 1) r += g;
  return r;
}

std::size_t delta_star_rank(int g, int n) {
  const LyndonBasis& basis = lyndon_basis(g, n);
  const std::size_t wn = lyndon_basis(2 * g, 2 * n).size();
  IntMat rows(basis.size(), wn);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Word w = delta_word(g, basis.bracket_word(i));
    LieVec v = lie_class(w, 2 * g, 2 * n);
    for (std::size_t c = 0; c < wn; ++c) rows.at(i, c) = v.c[c];
  }
  return rank_of(std::move(rows));
}

std::vector<NamedEndo> twist_catalog(int g, Boundary conv) {
  std::vector<NamedEndo> out;
  for (int i = 1; i <= g; ++i) {
    out.push_back({"T" + std::to_string(i), meridian_twist(g, i, conv, 1)});
    out.push_back({"T" + std::to_string(i) + "^-1", meridian_twist(g, i, conv, -1)});
  }
  for (int i = 1; i <= g; ++i)
    for (int j = i + 1; j <= g; ++j) {
      PureBraid a = artin_generator(g, i, j);
      std::string nm = "A" + std::to_string(i) + std::to_string(j);
      if (conv == Boundary::longitude) {
        out.push_back({"psi(" + nm + ")", psi(a)});
        out.push_back({"psi(" + nm + ")^-1", psi(braid_inverse(a))});
      } else {
        out.push_back({"kappa(" + nm + ")", kappa(a)});
        out.push_back({"kappa(" + nm + ")^-1", kappa(braid_inverse(a))});
      }
    }
  return out;
}

PureBraid parse_braid_word(const std::string& text, int g) {
  PureBraid out = braid_identity(g);
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    std::size_t caret = tok.find('^');
    std::string head = tok.substr(0, caret == std::string::npos ? tok.size() : caret);
    int exp = 1;
    if (caret != std::string::npos) {
      try {
        exp = std::stoi(tok.substr(caret + 1));
      } catch (const std::exception&) {
        throw error("parse_braid_word: bad exponent in '" + tok + "'");
      }
      if (exp == 0) throw error("parse_braid_word: zero exponent in '" + tok + "'");
    }
    if (head.size() != 3 || head[0] != 'A' || !std::isdigit(static_cast<unsigned char>(head[1])) ||
        !std::isdigit(static_cast<unsigned char>(head[2])))
      throw error("parse_braid_word: expected A<i><j> with single digit strands, got '" + tok + "'");
    int i = head[1] - '0', j = head[2] - '0';
    if (!(1 <= i && i < j && j <= g))
      throw error("parse_braid_word: strand pair out of range in '" + tok + "'");
    PureBraid a = artin_generator(g, i, j);
    if (exp < 0) a = braid_inverse(a);
    for (int e = 0; e < std::abs(exp); ++e) out = braid_compose(out, a);
  }
  return out;
}

} // namespace torelli
