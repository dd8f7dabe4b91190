#pragma once

#include "torelli/lie.hpp"
#include "torelli/magnus.hpp"
#include "torelli/matrix.hpp"
#include "torelli/mcg.hpp"
#include "torelli/words.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torelli {

// Framed pure braid on g strands, stored by its longitudes: the braid
// automorphism sends x_i to lam_i x_i lam_i^-1, and the lam_i satisfy
//   lam_1 x_1 lam_1^-1 ... lam_g x_g lam_g^-1 = x_1 ... x_g.
// Longitudes of generators are normalized so that lam_i has x_i exponent
// sum zero; composites keep the exact words produced by the composition
// rule and are never re-extracted. The optional inverse longitudes play the
// same role as the inverse witness of a FreeEndo.
struct PureBraid {
  int g = 0;
  std::vector<Word> lam;
  std::optional<std::vector<Word>> lam_inv;
  std::vector<Int> framing;
};

// Validates the longitude identity, the inverse witness (when present) and
// the framing arity.
PureBraid make_pure_braid(int g, std::vector<Word> longitudes,
                          std::optional<std::vector<Word>> inverse_longitudes = std::nullopt,
                          std::vector<Int> framing = {});

PureBraid braid_identity(int g);

// Generator A_ij (1 <= i < j <= g): the strand pair (i, j) makes a full
// twist. Built from the elementary crossings and carrying its inverse.
PureBraid artin_generator(int g, int i, int j);

// Full twist of the framing on strand i.
PureBraid framing_twist(int g, int i, int s = 1);

// a followed by b; longitudes compose as lam_i = b(lam_i^a) lam_i^b.
PureBraid braid_compose(const PureBraid& a, const PureBraid& b);
PureBraid braid_inverse(const PureBraid& a);
// a b a^-1 b^-1
PureBraid braid_commutator(const PureBraid& a, const PureBraid& b);

// images of x_1..x_g under the braid automorphism
std::vector<Word> braid_images(const PureBraid& a);
Word braid_apply(const PureBraid& a, const Word& w);

// Symmetric g x g matrix: off the diagonal the x_j exponent sum of lam_i,
// on the diagonal the framings.
IntMat linking_matrix(const PureBraid& a);

// Largest n (up to the cutoff) with every longitude in the n-th lower
// central subgroup; nonzero framings cap the value at 1.
Degree braid_weight_degree(const PureBraid& a, int cutoff);

// The surface mapping class of a framed pure braid:
//   x_i -> lam_i x_i lam_i^-1,  y_i -> y_i lam_i^-1 x_i^{-s_i}.
// Fixes the longitude boundary word.
FreeEndo psi(const PureBraid& a);

// Handle-wise conjugation by delta(lam_i); fixes the admissible boundary
// word and acts trivially on homology. Framings are ignored.
FreeEndo kappa(const PureBraid& a);

// x_j -> [x_j, y_j] applied to a word in the x block
Word delta_word(int g, const Word& w);

// Braid Johnson invariant of a braid whose longitudes have weight >= 2,
// assembled as sum_i x_i (x) [lam_i] in L (x) Lambda^2 L and folded back
// into Lambda^3 L through eta.
std::vector<Int> J_b(const PureBraid& a);

// Lambda^3 L -> Lambda^3 H in coordinates (the x block keeps its indices).
IntMat wedge3_x_embed(int g);

// support check: coordinates only at h in the x block and basis words made
// of x letters
bool in_L_tensor_LL(const HLieVec& v, int g);

// Rank of the degree n layer of the braid group filtration image,
//   r(1, n) = 0,  r(g, n) = r(g-1, n) + witt(g-1, n),
// with g extra framing parameters at n = 1 in the framed variant.
long long rank_r(int g, int n, bool framed);

// Rank of the map induced by delta on the degree n layer (values taken in
// degree 2n over the full alphabet).
std::size_t delta_star_rank(int g, int n);

// Named generating set used by the sampling suites: meridian twists and,
// depending on the boundary convention, psi or kappa images of the braid
// generators. Every entry carries an inverse witness.
std::vector<NamedEndo> twist_catalog(int g, Boundary conv);

// Whitespace separated tokens A<i><j> with optional ^<exponent>, composed
// left to right, e.g. "A12 A13^-1". Single digit strand indices.
PureBraid parse_braid_word(const std::string& text, int g);

} // namespace torelli
