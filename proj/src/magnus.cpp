#include "torelli/magnus.hpp"

#include <cstdlib>

namespace torelli {

namespace {

std::size_t g_cell_budget = 8'000'000;

std::size_t cells_needed(int k, int cutoff) {
  std::size_t total = 0, p = 1;
  for (int d = 0; d <= cutoff; ++d) {
    total += p;
    if (d < cutoff) p *= static_cast<std::size_t>(k);
  }
  return total;
}

} // namespace

void set_series_cell_budget(std::size_t cells) { g_cell_budget = cells; }
std::size_t series_cell_budget() { return g_cell_budget; }

Series Series::one(int k, int cutoff) {
  if (k < 1 || k > 16) throw error("series: alphabet size must be 1..16");
  if (cutoff < 0 || cutoff > 12) throw error("series: cutoff must be 0..12");
  if (cells_needed(k, cutoff) > g_cell_budget)
    throw budget_error("series: coefficient storage over budget");
  Series s;
  s.k = k;
  s.cutoff = cutoff;
  s.c.resize(cutoff + 1);
  std::size_t p = 1;
  for (int d = 0; d <= cutoff; ++d) {
    s.c[d].assign(p, Int(0));
    if (d < cutoff) p *= static_cast<std::size_t>(k);
  }
  s.c[0][0] = 1;
  return s;
}

int Series::first_nonzero_degree() const {
  for (int d = 1; d <= cutoff; ++d)
    for (const Int& v : c[d])
      if (v != 0) return d;
  return -1;
}

Series series_mul(const Series& a, const Series& b) {
  if (a.k != b.k || a.cutoff != b.cutoff) throw error("series_mul: shape mismatch");
  Series out = Series::one(a.k, a.cutoff);
  out.c[0][0] = 0;
  const std::size_t k = static_cast<std::size_t>(a.k);
  for (int da = 0; da <= a.cutoff; ++da) {
    for (int db = 0; da + db <= a.cutoff; ++db) {
      std::size_t nb = b.c[db].size();
      auto& dst = out.c[da + db];
      for (std::size_t ia = 0; ia < a.c[da].size(); ++ia) {
        const Int& va = a.c[da][ia];
        if (va == 0) continue;
        std::size_t base = ia * nb;
        for (std::size_t ib = 0; ib < nb; ++ib) {
          const Int& vb = b.c[db][ib];
          if (vb != 0) dst[base + ib] += va * vb;
        }
      }
    }
  }
  (void)k;
  return out;
}

namespace {

// Multiply s in place on the right by the expansion of letter l (sign +1)
// or of its inverse (sign -1). Appending j copies of letter l to a degree
// d monomial with index i gives index i*k^j + l*(k^j - 1)/(k - 1).
void mul_letter(Series& s, int l, int sign) {
  const std::size_t k = static_cast<std::size_t>(s.k);
  std::vector<std::size_t> kpow(s.cutoff + 1), rep(s.cutoff + 1);
  kpow[0] = 1;
  rep[0] = 0;
  for (int j = 1; j <= s.cutoff; ++j) {
    kpow[j] = kpow[j - 1] * k;
    rep[j] = rep[j - 1] * k + static_cast<std::size_t>(l);
  }
  // a letter expands as 1 + z, its inverse as the alternating series
  // 1 - z + z^2 - ... truncated at the cutoff
  const int jmax_by_sign = sign > 0 ? 1 : s.cutoff;
  for (int d = s.cutoff; d >= 0; --d) {
    auto& dst = s.c[d];
    const int jmax = d < jmax_by_sign ? d : jmax_by_sign;
    for (int j = 1; j <= jmax; ++j) {
      const auto& src = s.c[d - j];
      const bool negate = (sign < 0) && (j & 1);
      for (std::size_t i = 0; i < src.size(); ++i) {
        const Int& v = src[i];
        if (v == 0) continue;
        std::size_t idx = i * kpow[j] + rep[j];
        if (negate)
          dst[idx] -= v;
        else
          dst[idx] += v;
      }
    }
  }
}

} // namespace

Series magnus_expand(const Word& w, int k, int cutoff) {
  Series s = Series::one(k, cutoff);
  for (std::int32_t t : w.w) {
    int l = std::abs(t) - 1;
    if (l >= k) throw error("magnus_expand: letter out of alphabet");
    mul_letter(s, l, t > 0 ? 1 : -1);
  }
  return s;
}

Degree word_degree(const Word& w, int k, int cutoff) {
  if (w.empty()) return Degree{infinity_degree, true};
  Series s = magnus_expand(w, k, cutoff);
  int d = s.first_nonzero_degree();
  if (d < 0) return Degree{cutoff + 1, false};
  return Degree{d, true};
}

} // namespace torelli
