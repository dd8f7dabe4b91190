#pragma once

#include "torelli/lattice.hpp"
#include "torelli/matrix.hpp"

#include <array>
#include <vector>

namespace torelli {

// Index bookkeeping for Lambda^2 and Lambda^3 of Z^n with basis e_0..e_{n-1}.
// Wedges are enumerated lexicographically by their sorted index tuples; this
// matches the order of Lyndon words of length 2, so degree 2 Lie coordinates
// and Lambda^2 coordinates can be identified entrywise.
std::size_t pair_dim(int n);
std::size_t wedge3_dim(int n);
const std::vector<std::array<int, 2>>& pair_basis(int n);
const std::vector<std::array<int, 3>>& wedge3_basis(int n);
int pair_index(int n, int a, int b);    // requires a < b
int wedge3_index(int n, int a, int b, int c); // requires a < b < c

// index and sign of e_a ^ e_b ^ e_c for distinct unsorted a, b, c
std::pair<int, int> wedge3_sorted(int n, int a, int b, int c);

// eta: Lambda^3 V -> V (x) Lambda^2 V,
//   a^b^c |-> a(x)(b^c) - b(x)(a^c) + c(x)(a^b).
// Rows are indexed h * pair_dim + pair.
IntMat eta_matrix(int n);

// theta: V (x) Lambda^2 V -> free Lie ring degree 3, h(x)(a^b) |-> [h,[a,b]].
IntMat theta_matrix(int n);

// Intersection pairing on H = Z^{2g} with x block first: x_i . y_i = 1.
int pairing(int g, int a, int b);

// sigma, the threefold contraction against the pairing: Lambda^3 H -> H,
//   h1^h2^h3 |-> (h1.h2)h3 + (h2.h3)h1 + (h3.h1)h2.
IntMat contract3_matrix(int g);

// full contraction Lambda^2 H -> Z, a^b -> a.b
IntMat contract2_matrix(int g);

// H -> H/L, x_i -> 0, y_i -> e_i
IntMat projL_matrix(int g);

// p: Lambda^3 H -> Lambda^3 (H/L)
IntMat proj_p_matrix(int g);

// K_m: span of wedges with at least m factors from the x block.
Lattice Km_lattice(int g, int m);

// K = ker(p (+) (mod L . sigma)).
Lattice kernel_K(int g);

// The four generating families: (1) x_i^x_j^x_k, (2) x_i^x_j^y_k,
// (3) x_i^y_j^y_k with i,j,k distinct, (4) y_i^x_i^y_k + x_j^y_j^y_k with
// i,j,k distinct. Returned as vectors in Lambda^3 H coordinates.
std::vector<std::vector<Int>> K_family(int g, int fam);

struct KGenReport {
  bool members_ok = false;   // every family vector lies in K
  bool generates = false;    // the four families span K exactly
  std::size_t family_rank = 0;
  std::size_t kernel_rank = 0;
  std::size_t family2_rank = 0;            // family (2) alone
  std::size_t family2_restricted_rank = 0; // family (2) restricted to k != j
  std::string detail;
};
KGenReport K_generators_check(int g);

bool is_symplectic(int g, const IntMat& s);
// symplectic and the identity on every x_i
bool is_Bg(int g, const IntMat& s);
// block matrix (I A; 0 I) from a symmetric A
IntMat Bg_embed(int g, const IntMat& a);
// elementary symmetric matrices E_ii and E_ij + E_ji
std::vector<IntMat> symmetric_elementary(int g);

// third exterior power of a square matrix
IntMat sp3_matrix(const IntMat& s);

struct KmGenReport {
  bool inclusion_ok = false;  // (S-1) K_{m-1} contained in K_m for all gens
  bool generates = false;     // {(S-1)w} + K_{m+1} spans K_m
  std::string detail;
};
KmGenReport Km_generation_check(int g, int m);

// pretty form such as "x1^x2^y3 - 2*y1^y2^y3"; n letters, the first g of
// them printed as x's (pass g = n to print plain e's)
std::string wedge3_str(const std::vector<Int>& coords, int n, int g);

} // namespace torelli
