#pragma once

#include "torelli/bigint.hpp"
#include "torelli/lattice.hpp"
#include "torelli/magnus.hpp"
#include "torelli/words.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

namespace torelli {

// Number of Lyndon words of length n over k letters (the rank of the degree n
// part of the free Lie ring on k generators).
long long witt(int k, int n);

// Packed monomial over an alphabet of at most 16 letters: 4 bits per letter,
// first letter in the most significant occupied nibble, so that packed values
// of equal length compare like the words themselves.
using Mono = std::uint64_t;

Mono mono_pack(const std::vector<std::uint8_t>& word);
std::vector<std::uint8_t> mono_unpack(Mono code, int len);

// Homogeneous polynomial in noncommuting variables; degree is implicit.
using Poly = std::map<Mono, Int>;

bool is_lyndon(const std::vector<std::uint8_t>& w);

// Lyndon words of length m over k letters in lex order, together with the
// standard (right) factorization and, on demand, the monomial expansion of
// the associated bracketing.
class LyndonBasis {
public:
  LyndonBasis(int k, int m);

  int k() const { return k_; }
  int m() const { return m_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<std::uint8_t>& word(std::size_t i) const { return words_[i]; }
  // -1 when the monomial is not a Lyndon word of this length
  int index_of(Mono code) const;
  // split position of the standard factorization w = w[:s) w[s:); 0 for letters
  int split(std::size_t i) const { return split_[i]; }
  const Poly& expansion(std::size_t i) const;
  // the bracketing realized as a group word (iterated commutator)
  Word bracket_word(std::size_t i) const;

private:
  int k_, m_;
  std::vector<std::vector<std::uint8_t>> words_;
  std::unordered_map<Mono, int> index_;
  std::vector<int> split_;
  mutable std::vector<std::unique_ptr<Poly>> expansion_;
};

// cached per (k, m)
const LyndonBasis& lyndon_basis(int k, int m);

// Element of the degree m part of the free Lie ring on k generators, in
// coordinates with respect to the Lyndon basis.
struct LieVec {
  int k = 0, m = 0;
  std::vector<Int> c;

  bool is_zero() const;
  bool operator==(const LieVec&) const = default;
};

LieVec lie_zero(int k, int m);
LieVec lie_letter(int k, int l);

LieVec lie_add(const LieVec& a, const LieVec& b);
LieVec lie_sub(const LieVec& a, const LieVec& b);
LieVec lie_scale(const Int& s, const LieVec& a);
LieVec lie_bracket(const LieVec& a, const LieVec& b);

Poly lie_to_poly(const LieVec& v);
// Triangular elimination against bracketing expansions; throws when the input
// is not a Lie element.
LieVec lie_from_poly(int k, int m, const Poly& p);
LieVec lie_from_dense(int k, int m, const std::vector<Int>& slice);

// Class of w in the degree n layer of the lower central series, extracted
// from the degree n part of the Magnus expansion. Requires the classes in
// layers below n to vanish.
LieVec lie_class(const Word& w, int k, int n);

// Pretty form such as [x1,[x1,y2]]; g is the size of the x block.
std::string lie_str(const LieVec& v, int g);

// Matrix of h (x) u -> [h, u] from H (x) L_m to L_{m+1}, where H = Z^k with
// the letter basis. Column order: h * W_m(k) + u.
IntMat bracket_matrix(int k, int m);

// Matrix, in Lyndon coordinates, of the degree m part of the Lie ring
// endomorphism induced by the letter substitution s (k x k, column
// convention).
IntMat lie_functor_matrix(int k, int m, const IntMat& s);

// Element of H (x) L_m with H = Z^k; coordinate h * W_m(k) + u as above.
struct HLieVec {
  int k = 0, m = 0;
  std::vector<Int> c;

  bool is_zero() const;
  bool operator==(const HLieVec&) const = default;
};

HLieVec hlie_zero(int k, int m);
HLieVec hlie_add(const HLieVec& a, const HLieVec& b);
HLieVec hlie_sub(const HLieVec& a, const HLieVec& b);
// s (x) Lie(s) acting on H (x) L_m
HLieVec hlie_apply(const IntMat& s, const HLieVec& v);
// h (x) u -> [h, u]
LieVec hlie_bracket(const HLieVec& v);
std::string hlie_str(const HLieVec& v, int g);

// acc (dense, degree m+1) += sign * [z_l, p] for a dense degree m polynomial p
void dense_bracket_letter_acc(int k, int l, const std::vector<Int>& slice,
                              int sign, std::vector<Int>& acc);

// number of letters from the x block (letters < g) in a word
int xcount(const std::vector<std::uint8_t>& w, int g);

// Sublattice of the degree m part spanned by Lyndon basis elements with at
// least r x-letters (alphabet size 2g).
Lattice lie_x_lattice(int g, int m, int r);

// Sublattice of H (x) L_m given by L (x) (x-count >= r-1) + H (x) (x-count >= r).
Lattice hl_x_lattice(int g, int m, int r);

} // namespace torelli
