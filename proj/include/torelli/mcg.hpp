#pragma once

#include "torelli/lie.hpp"
#include "torelli/magnus.hpp"
#include "torelli/matrix.hpp"
#include "torelli/words.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torelli {

// Mapping class of a genus g surface with one boundary component, realized
// as an automorphism of the free group on x_1..x_g, y_1..y_g that fixes the
// chosen boundary word letter by letter. Images are stored per generator;
// the inverse images are optional and, when present, have been verified to
// invert the map. Operations that need the inverse refuse to run without
// the witness rather than search for one.
struct FreeEndo {
  int g = 0;
  Boundary conv = Boundary::admissible;
  std::vector<Word> im;                     // images of x_1..x_g, y_1..y_g
  std::optional<std::vector<Word>> inv;     // images under the inverse map

  const Word& image(int letter) const { return im[static_cast<std::size_t>(letter)]; }
};

struct NamedEndo {
  std::string name;
  FreeEndo f;
};

// Validates and packages an endomorphism: the boundary word must be fixed
// exactly, the abelianized map must be invertible over Z, and a supplied
// inverse witness must invert the images in both directions.
FreeEndo make_endo(int g, Boundary conv, std::vector<Word> images,
                   std::optional<std::vector<Word>> inverse_images = std::nullopt);

FreeEndo endo_identity(int g, Boundary conv);

// f followed by h (the composite map z -> h(f(z))). The boundary
// conventions must agree.
FreeEndo endo_compose(const FreeEndo& f, const FreeEndo& h);
FreeEndo endo_inverse(const FreeEndo& f);
// f h f^-1 h^-1, composing right to left as functions
FreeEndo endo_commutator(const FreeEndo& f, const FreeEndo& h);
// c f c^-1
FreeEndo endo_conjugate(const FreeEndo& f, const FreeEndo& c);

Word endo_apply(const FreeEndo& f, const Word& w);

// Action on H = Z^2g, columns indexed like the letters.
IntMat symplectic_matrix(const FreeEndo& f);

bool is_torelli(const FreeEndo& f);
// acts as the identity on the classes of x_1..x_g (equivalently, the
// symplectic matrix has the block shape (I A; 0 I) with A symmetric)
bool is_in_Lbar(const FreeEndo& f);

// Position of f in the weight filtration, measured through the Magnus
// expansion: value n means z^-1 f(z) has degree >= n+1 for every generator
// z. exact is set when the cutoff sufficed to pin the value; the identity
// reports infinity_degree.
Degree endo_weight_degree(const FreeEndo& f, int cutoff);

// Johnson homomorphism of level n: for f of weight >= n,
//   J_n(f) = sum_i x_i (x) [y_i^-1 f(y_i)] - y_i (x) [x_i^-1 f(x_i)]
// with the classes taken in degree n+1 of the free Lie ring. Throws when
// some generator moves in a degree <= n. Every value computed here is also
// run through the bracket contraction; see johnson_bracket_checks.
HLieVec johnson_morita(const FreeEndo& f, int n);

// Count of b(J_n) = 0 post-condition checks performed / failed since the
// process started. The failure count staying at zero is itself one of the
// verified claims, so the counters are global and monotone.
std::size_t johnson_bracket_checks();
std::size_t johnson_bracket_failures();

// First Johnson homomorphism of a Torelli map, folded back into Lambda^3 H
// through eta (h (x) a^b picks up the coordinates of J_1). Unique because
// eta is injective.
std::vector<Int> johnson_tau(const FreeEndo& f);

// tau = 0 (given Torelli); the Johnson kernel.
bool in_johnson_kernel(const FreeEndo& f);

// Classes of x_i^-1 f(x_i) in Lambda^2 H for f acting trivially on the x
// classes; entry i is the value of hat J(f) on x_i.
std::vector<LieVec> hat_J_x(const FreeEndo& f);

// Invariant of the Lagrangian complement: the pair
//   (eta-preimage of -sum_i e_i (x) (hat J(f) x_i mod L), -sum_i c(hat J(f) x_i) e_i)
// living in Lambda^3(H/L) and H/L. Defined on maps that fix the x classes.
struct CalJ {
  int g = 0;
  std::vector<Int> wedge;  // Lambda^3 (H/L) coordinates
  std::vector<Int> omega;  // H/L coordinates
  bool is_zero() const;
  bool operator==(const CalJ&) const = default;
};
CalJ cal_J(const FreeEndo& f);

// J_n([f,h]) == (f_* - 1) J_n(h), with f_* acting as S (x) Lie(S) for the
// symplectic matrix S of f. Requires h of weight >= n.
bool commutator_rule_check(const FreeEndo& f, const FreeEndo& h, int n);

// Dehn twist on the meridian of handle i: y_i -> y_i x_i^sign. Preserves
// both boundary conventions.
FreeEndo meridian_twist(int g, int i, Boundary conv, int sign = 1);
// Twist on the longitude of handle i: x_i -> y_i^sign x_i. Only fixes the
// longitude boundary word.
FreeEndo longitude_twist(int g, int i, int sign = 1);
// Per-handle quarter turn x_i -> -y_i, y_i -> x_i on homology; the
// composite T_i V_i^-1 T_i. Longitude convention.
FreeEndo handle_rotation(int g, int i);
// Order-consistent variant for the admissible convention:
// x_i -> y_i^-1, y_i -> y_i x_i y_i^-1.
FreeEndo handle_half_turn(int g, int i);

} // namespace torelli
