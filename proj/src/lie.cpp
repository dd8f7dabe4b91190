#include "torelli/lie.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace torelli {

namespace {

int mobius(int n) {
  int m = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  if (n > 1) m = -m;
  return m;
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

} // namespace

long long witt(int k, int n) {
  if (n < 1) throw error("witt: degree must be positive");
  long long s = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) s += mobius(d) * ipow(k, n / d);
  return s / n;
}

Mono mono_pack(const std::vector<std::uint8_t>& word) {
  if (word.size() > 16) throw error("mono_pack: word too long");
  Mono m = 0;
  for (std::uint8_t l : word) {
    if (l > 15) throw error("mono_pack: letter out of range");
    m = (m << 4) | l;
  }
  return m;
}

std::vector<std::uint8_t> mono_unpack(Mono code, int len) {
  std::vector<std::uint8_t> w(len);
  for (int i = len - 1; i >= 0; --i) {
    w[i] = static_cast<std::uint8_t>(code & 0xf);
    code >>= 4;
  }
  return w;
}

bool is_lyndon(const std::vector<std::uint8_t>& w) {
  if (w.empty()) return false;
  for (std::size_t p = 1; p < w.size(); ++p)
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + p, w.end()))
      return false;
  return true;
}

LyndonBasis::LyndonBasis(int k, int m) : k_(k), m_(m) {
  if (k < 1 || k > 16) throw error("lyndon basis: alphabet size must be 1..16");
  if (m < 1 || m > 16) throw error("lyndon basis: degree must be 1..16");
  double cells = 1;
  for (int i = 0; i < m; ++i) cells *= k;
  if (cells > 2e7) throw budget_error("lyndon basis: degree too large for this alphabet");

  // Duval's algorithm: every word produced is Lyndon, in lex order, running
  // through all lengths up to m.
  std::vector<std::uint8_t> t{0};
  while (true) {
    if (static_cast<int>(t.size()) == m) words_.push_back(t);
    std::vector<std::uint8_t> s;
    s.reserve(m);
    for (int i = 0; i < m; ++i) s.push_back(t[i % t.size()]);
    while (!s.empty() && s.back() == k - 1) s.pop_back();
    if (s.empty()) break;
    ++s.back();
    t = std::move(s);
  }

  index_.reserve(words_.size() * 2);
  split_.resize(words_.size());
  expansion_.resize(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    index_[mono_pack(words_[i])] = static_cast<int>(i);
    const auto& w = words_[i];
    if (m == 1) {
      split_[i] = 0;
      continue;
    }
    // standard factorization: split before the lexicographically least
    // proper suffix (which is the longest proper Lyndon suffix)
    std::size_t best = 1;
    for (std::size_t p = 2; p < w.size(); ++p)
      if (std::lexicographical_compare(w.begin() + p, w.end(),
                                       w.begin() + best, w.end()))
        best = p;
    split_[i] = static_cast<int>(best);
  }
}

int LyndonBasis::index_of(Mono code) const {
  auto it = index_.find(code);
  return it == index_.end() ? -1 : it->second;
}

const Poly& LyndonBasis::expansion(std::size_t i) const {
  if (!expansion_[i]) {
    Poly p;
    if (m_ == 1) {
      p[mono_pack(words_[i])] = 1;
    } else {
      const int s = split_[i];
      std::vector<std::uint8_t> u(words_[i].begin(), words_[i].begin() + s);
      std::vector<std::uint8_t> v(words_[i].begin() + s, words_[i].end());
      const LyndonBasis& bu = lyndon_basis(k_, s);
      const LyndonBasis& bv = lyndon_basis(k_, m_ - s);
      const Poly& pu = bu.expansion(static_cast<std::size_t>(bu.index_of(mono_pack(u))));
      const Poly& pv = bv.expansion(static_cast<std::size_t>(bv.index_of(mono_pack(v))));
      const int lu = s, lv = m_ - s;
      for (const auto& [ma, ca] : pu)
        for (const auto& [mb, cb] : pv) {
          p[(ma << (4 * lv)) | mb] += ca * cb;
          p[(mb << (4 * lu)) | ma] -= ca * cb;
        }
      for (auto it = p.begin(); it != p.end();)
        it = (it->second == 0) ? p.erase(it) : std::next(it);
    }
    expansion_[i] = std::make_unique<Poly>(std::move(p));
  }
  return *expansion_[i];
}

Word LyndonBasis::bracket_word(std::size_t i) const {
  if (m_ == 1) return Word::letter(words_[i][0]);
  const int s = split_[i];
  std::vector<std::uint8_t> u(words_[i].begin(), words_[i].begin() + s);
  std::vector<std::uint8_t> v(words_[i].begin() + s, words_[i].end());
  const LyndonBasis& bu = lyndon_basis(k_, s);
  const LyndonBasis& bv = lyndon_basis(k_, m_ - s);
  Word wu = bu.bracket_word(static_cast<std::size_t>(bu.index_of(mono_pack(u))));
  Word wv = bv.bracket_word(static_cast<std::size_t>(bv.index_of(mono_pack(v))));
  return group_commutator(wu, wv);
}

const LyndonBasis& lyndon_basis(int k, int m) {
  static std::map<std::pair<int, int>, std::unique_ptr<LyndonBasis>> cache;
  auto key = std::make_pair(k, m);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<LyndonBasis>(k, m)).first;
  return *it->second;
}

bool LieVec::is_zero() const {
  for (const Int& v : c)
    if (v != 0) return false;
  return true;
}

LieVec lie_zero(int k, int m) {
  LieVec v;
  v.k = k;
  v.m = m;
  v.c.assign(lyndon_basis(k, m).size(), Int(0));
  return v;
}

LieVec lie_letter(int k, int l) {
  LieVec v = lie_zero(k, 1);
  if (l < 0 || l >= k) throw error("lie_letter: letter out of range");
  v.c[static_cast<std::size_t>(l)] = 1; // letters are the length 1 Lyndon words, in order
  return v;
}

LieVec lie_add(const LieVec& a, const LieVec& b) {
  if (a.k != b.k || a.m != b.m) throw error("lie_add: shape mismatch");
  LieVec out = a;
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] += b.c[i];
  return out;
}

LieVec lie_sub(const LieVec& a, const LieVec& b) {
  if (a.k != b.k || a.m != b.m) throw error("lie_sub: shape mismatch");
  LieVec out = a;
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] -= b.c[i];
  return out;
}

LieVec lie_scale(const Int& s, const LieVec& a) {
  LieVec out = a;
  for (Int& v : out.c) v *= s;
  return out;
}

Poly lie_to_poly(const LieVec& v) {
  const LyndonBasis& b = lyndon_basis(v.k, v.m);
  Poly p;
  for (std::size_t i = 0; i < v.c.size(); ++i) {
    if (v.c[i] == 0) continue;
    for (const auto& [mono, coef] : b.expansion(i)) {
      Int& dst = p[mono];
      dst += v.c[i] * coef;
      if (dst == 0) p.erase(mono);
    }
  }
  return p;
}

LieVec lie_from_poly(int k, int m, const Poly& poly) {
  const LyndonBasis& b = lyndon_basis(k, m);
  LieVec out = lie_zero(k, m);
  Poly p = poly;
  while (!p.empty()) {
    auto [mono, coef] = *p.begin();
    int idx = b.index_of(mono);
    if (idx < 0)
      throw error("lie_from_poly: leading monomial is not a Lyndon word; "
                  "the input is not a Lie element");
    out.c[static_cast<std::size_t>(idx)] += coef;
    for (const auto& [em, ec] : b.expansion(static_cast<std::size_t>(idx))) {
      Int& dst = p[em];
      dst -= coef * ec;
      if (dst == 0) p.erase(em);
    }
  }
  return out;
}

namespace {

std::size_t dense_size(int k, int m) {
  std::size_t s = 1;
  for (int i = 0; i < m; ++i) s *= static_cast<std::size_t>(k);
  return s;
}

std::vector<std::uint8_t> dense_word(std::size_t idx, int k, int m) {
  std::vector<std::uint8_t> w(m);
  for (int i = m - 1; i >= 0; --i) {
    w[i] = static_cast<std::uint8_t>(idx % static_cast<std::size_t>(k));
    idx /= static_cast<std::size_t>(k);
  }
  return w;
}

std::size_t dense_index(const std::vector<std::uint8_t>& w, int k) {
  std::size_t idx = 0;
  for (std::uint8_t l : w) idx = idx * static_cast<std::size_t>(k) + l;
  return idx;
}

} // namespace

LieVec lie_from_dense(int k, int m, const std::vector<Int>& slice) {
  if (slice.size() != dense_size(k, m)) throw error("lie_from_dense: bad slice size");
  const LyndonBasis& b = lyndon_basis(k, m);
  LieVec out = lie_zero(k, m);
  std::vector<Int> work = slice;
  // The expansion of a Lyndon bracketing has its Lyndon word as the least
  // monomial, with coefficient 1, so one ascending sweep eliminates.
  for (std::size_t i = 0; i < work.size(); ++i) {
    if (work[i] == 0) continue;
    std::vector<std::uint8_t> w = dense_word(i, k, m);
    int idx = b.index_of(mono_pack(w));
    if (idx < 0)
      throw error("lie_from_dense: leading monomial is not a Lyndon word; "
                  "the input is not a Lie element");
    Int coef = work[i];
    out.c[static_cast<std::size_t>(idx)] = coef;
    for (const auto& [em, ec] : b.expansion(static_cast<std::size_t>(idx)))
      work[dense_index(mono_unpack(em, m), k)] -= coef * ec;
  }
  return out;
}

LieVec lie_class(const Word& w, int k, int n) {
  Series s = magnus_expand(w, k, n);
  for (int d = 1; d < n; ++d)
    for (const Int& v : s.c[d])
      if (v != 0)
        throw error("lie_class: word has nonzero class below the requested degree");
  return lie_from_dense(k, n, s.c[n]);
}

std::string lie_str(const LieVec& v, int g) {
  const LyndonBasis& b = lyndon_basis(v.k, v.m);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.c.size(); ++i) {
    if (v.c[i] == 0) continue;
    Int a = v.c[i];
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (a != 1) os << a << "*";
    // print the bracketing shape
    std::string repr;
    std::function<std::string(const std::vector<std::uint8_t>&)> fmt =
        [&](const std::vector<std::uint8_t>& word) -> std::string {
      if (word.size() == 1) {
        int l = word[0];
        return (l < g ? "x" + std::to_string(l + 1) : "y" + std::to_string(l - g + 1));
      }
      // recompute the split
      std::size_t best = 1;
      for (std::size_t p = 2; p < word.size(); ++p)
        if (std::lexicographical_compare(word.begin() + p, word.end(),
                                         word.begin() + best, word.end()))
          best = p;
      std::vector<std::uint8_t> u(word.begin(), word.begin() + best);
      std::vector<std::uint8_t> vv(word.begin() + best, word.end());
      return "[" + fmt(u) + "," + fmt(vv) + "]";
    };
    os << fmt(b.word(i));
  }
  if (first) return "0";
  return os.str();
}

IntMat bracket_matrix(int k, int m) {
  const LyndonBasis& bm = lyndon_basis(k, m);
  const std::size_t wm = bm.size();
  const std::size_t wn = lyndon_basis(k, m + 1).size();
  IntMat out(wn, static_cast<std::size_t>(k) * wm);
  for (int h = 0; h < k; ++h) {
    LieVec zh = lie_letter(k, h);
    for (std::size_t u = 0; u < wm; ++u) {
      LieVec base = lie_zero(k, m);
      base.c[u] = 1;
      LieVec br = lie_bracket(zh, base);
      for (std::size_t r = 0; r < wn; ++r)
        out.at(r, static_cast<std::size_t>(h) * wm + u) = br.c[r];
    }
  }
  return out;
}

LieVec lie_bracket(const LieVec& a, const LieVec& b) {
  if (a.k != b.k) throw error("lie_bracket: alphabet mismatch");
  Poly pa = lie_to_poly(a), pb = lie_to_poly(b);
  Poly p;
  const int la = a.m, lb = b.m;
  for (const auto& [ma, ca] : pa)
    for (const auto& [mb, cb] : pb) {
      Int prod = ca * cb;
      Int& d1 = p[(ma << (4 * lb)) | mb];
      d1 += prod;
      if (d1 == 0) p.erase((ma << (4 * lb)) | mb);
      Int& d2 = p[(mb << (4 * la)) | ma];
      d2 -= prod;
      if (d2 == 0) p.erase((mb << (4 * la)) | ma);
    }
  return lie_from_poly(a.k, a.m + b.m, p);
}

IntMat lie_functor_matrix(int k, int m, const IntMat& s) {
  if (s.rows != static_cast<std::size_t>(k) || s.cols != static_cast<std::size_t>(k))
    throw error("lie_functor_matrix: substitution must be k x k");
  // image of each basis bracketing, recursively through the standard
  // factorization; memoized per degree
  std::map<std::pair<int, std::size_t>, LieVec> memo;
  std::function<const LieVec&(int, std::size_t)> image =
      [&](int deg, std::size_t idx) -> const LieVec& {
    auto key = std::make_pair(deg, idx);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const LyndonBasis& b = lyndon_basis(k, deg);
    LieVec v;
    if (deg == 1) {
      v = lie_zero(k, 1);
      for (int p = 0; p < k; ++p)
        v.c[static_cast<std::size_t>(p)] = s.at(static_cast<std::size_t>(p), idx);
    } else {
      const int sp = b.split(idx);
      const auto& w = b.word(idx);
      std::vector<std::uint8_t> u(w.begin(), w.begin() + sp);
      std::vector<std::uint8_t> t(w.begin() + sp, w.end());
      const LyndonBasis& bu = lyndon_basis(k, sp);
      const LyndonBasis& bt = lyndon_basis(k, deg - sp);
      const LieVec& iu = image(sp, static_cast<std::size_t>(bu.index_of(mono_pack(u))));
      const LieVec& it2 = image(deg - sp, static_cast<std::size_t>(bt.index_of(mono_pack(t))));
      v = lie_bracket(iu, it2);
    }
    return memo.emplace(key, std::move(v)).first->second;
  };
  const std::size_t w = lyndon_basis(k, m).size();
  IntMat out(w, w);
  for (std::size_t j = 0; j < w; ++j) {
    const LieVec& v = image(m, j);
    for (std::size_t r = 0; r < w; ++r) out.at(r, j) = v.c[r];
  }
  return out;
}

bool HLieVec::is_zero() const {
  for (const Int& v : c)
    if (v != 0) return false;
  return true;
}

HLieVec hlie_zero(int k, int m) {
  HLieVec v;
  v.k = k;
  v.m = m;
  v.c.assign(static_cast<std::size_t>(k) * lyndon_basis(k, m).size(), Int(0));
  return v;
}

HLieVec hlie_add(const HLieVec& a, const HLieVec& b) {
  if (a.k != b.k || a.m != b.m) throw error("hlie_add: shape mismatch");
  HLieVec out = a;
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] += b.c[i];
  return out;
}

HLieVec hlie_sub(const HLieVec& a, const HLieVec& b) {
  if (a.k != b.k || a.m != b.m) throw error("hlie_sub: shape mismatch");
  HLieVec out = a;
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] -= b.c[i];
  return out;
}

HLieVec hlie_apply(const IntMat& s, const HLieVec& v) {
  const std::size_t k = static_cast<std::size_t>(v.k);
  if (s.rows != k || s.cols != k) throw error("hlie_apply: shape mismatch");
  const IntMat lm = lie_functor_matrix(v.k, v.m, s);
  const std::size_t w = lm.rows;
  HLieVec out = hlie_zero(v.k, v.m);
  // first Lie(s) on each H slot, then s across slots
  std::vector<Int> mid(k * w);
  for (std::size_t h = 0; h < k; ++h)
    for (std::size_t r = 0; r < w; ++r) {
      Int acc = 0;
      for (std::size_t u = 0; u < w; ++u)
        if (lm.at(r, u) != 0 && v.c[h * w + u] != 0) acc += lm.at(r, u) * v.c[h * w + u];
      mid[h * w + r] = std::move(acc);
    }
  for (std::size_t h = 0; h < k; ++h)
    for (std::size_t hp = 0; hp < k; ++hp) {
      const Int& sv = s.at(h, hp);
      if (sv == 0) continue;
      for (std::size_t r = 0; r < w; ++r)
        if (mid[hp * w + r] != 0) out.c[h * w + r] += sv * mid[hp * w + r];
    }
  return out;
}

LieVec hlie_bracket(const HLieVec& v) {
  const std::size_t w = lyndon_basis(v.k, v.m).size();
  LieVec out = lie_zero(v.k, v.m + 1);
  for (int h = 0; h < v.k; ++h) {
    LieVec part = lie_zero(v.k, v.m);
    bool any = false;
    for (std::size_t u = 0; u < w; ++u) {
      part.c[u] = v.c[static_cast<std::size_t>(h) * w + u];
      if (part.c[u] != 0) any = true;
    }
    if (any) out = lie_add(out, lie_bracket(lie_letter(v.k, h), part));
  }
  return out;
}

std::string hlie_str(const HLieVec& v, int g) {
  const std::size_t w = lyndon_basis(v.k, v.m).size();
  std::ostringstream os;
  bool first = true;
  for (int h = 0; h < v.k; ++h) {
    LieVec part = lie_zero(v.k, v.m);
    bool any = false;
    for (std::size_t u = 0; u < w; ++u) {
      part.c[u] = v.c[static_cast<std::size_t>(h) * w + u];
      if (part.c[u] != 0) any = true;
    }
    if (!any) continue;
    std::string head = (h < g ? "x" + std::to_string(h + 1) : "y" + std::to_string(h - g + 1));
    os << (first ? "" : " + ") << head << "(x)(" << lie_str(part, g) << ")";
    first = false;
  }
  if (first) return "0";
  return os.str();
}

int xcount(const std::vector<std::uint8_t>& w, int g) {
  int c = 0;
  for (std::uint8_t l : w)
    if (l < g) ++c;
  return c;
}

void dense_bracket_letter_acc(int k, int l, const std::vector<Int>& slice,
                              int sign, std::vector<Int>& acc) {
  const std::size_t n = slice.size();
  if (acc.size() != n * static_cast<std::size_t>(k))
    throw error("dense_bracket_letter_acc: size mismatch");
  const std::size_t shift = static_cast<std::size_t>(l) * n;
  for (std::size_t i = 0; i < n; ++i) {
    if (slice[i] == 0) continue;
    if (sign > 0) {
      acc[shift + i] += slice[i];
      acc[i * static_cast<std::size_t>(k) + static_cast<std::size_t>(l)] -= slice[i];
    } else {
      acc[shift + i] -= slice[i];
      acc[i * static_cast<std::size_t>(k) + static_cast<std::size_t>(l)] += slice[i];
    }
  }
}

Lattice lie_x_lattice(int g, int m, int r) {
  const LyndonBasis& b = lyndon_basis(2 * g, m);
  std::vector<std::vector<Int>> gens;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (xcount(b.word(i), g) < r) continue;
    std::vector<Int> e(b.size());
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return Lattice::from_vectors(b.size(), gens);
}

Lattice hl_x_lattice(int g, int m, int r) {
  const LyndonBasis& b = lyndon_basis(2 * g, m);
  const std::size_t w = b.size();
  std::vector<std::vector<Int>> gens;
  for (int h = 0; h < 2 * g; ++h)
    for (std::size_t i = 0; i < w; ++i) {
      int xc = xcount(b.word(i), g);
      bool in = (xc >= r) || (h < g && xc >= r - 1);
      if (!in) continue;
      std::vector<Int> e(static_cast<std::size_t>(2 * g) * w);
      e[static_cast<std::size_t>(h) * w + i] = 1;
      gens.push_back(std::move(e));
    }
  return Lattice::from_vectors(static_cast<std::size_t>(2 * g) * w, gens);
}

} // namespace torelli
