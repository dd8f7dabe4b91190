#pragma once

#include "torelli/bigint.hpp"
#include "torelli/words.hpp"

#include <cstdint>
#include <vector>

namespace torelli {

// Truncated series in k noncommuting variables Z_0..Z_{k-1} with integer
// coefficients, kept per degree as a dense vector. The monomial
// Z_{l_0} Z_{l_1} ... Z_{l_{d-1}} sits at index sum l_i * k^(d-1-i), so for
// fixed degree the index order is the lexicographic order on words.
struct Series {
  int k = 0;
  int cutoff = 0;
  std::vector<std::vector<Int>> c; // c[d] has k^d entries, d = 0..cutoff

  static Series one(int k, int cutoff);

  bool operator==(const Series&) const = default;

  // smallest d >= 1 with c[d] != 0, or -1 when all of 1..cutoff vanish
  int first_nonzero_degree() const;
};

// Cap on the total number of coefficient cells a single Series may hold,
// sum of k^d over d <= cutoff. Exceeding it throws budget_error.
void set_series_cell_budget(std::size_t cells);
std::size_t series_cell_budget();

Series series_mul(const Series& a, const Series& b);

// Magnus expansion: letter l maps to 1 + Z_l, its inverse to the alternating
// geometric series 1 - Z_l + Z_l^2 - ...
Series magnus_expand(const Word& w, int k, int cutoff);

// Degree of a word with respect to the lower central series, measured through
// the Magnus expansion up to the cutoff. value is exact when exact is set;
// otherwise only the bound degree >= value is known. The empty word reports
// value = infinity_degree, exact.
struct Degree {
  int value = 0;
  bool exact = false;
  bool operator==(const Degree&) const = default;
};

inline constexpr int infinity_degree = 1 << 30;

Degree word_degree(const Word& w, int k, int cutoff);

} // namespace torelli
