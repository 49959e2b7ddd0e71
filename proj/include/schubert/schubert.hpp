// Schubert polynomials by two independent routes, plus expansion of
// arbitrary polynomials in the Schubert basis.
//
// Route one walks divided differences down from the staircase monomial
// x1^{n-1} x2^{n-2} ... x_{n-1} attached to the longest element: if i is
// the largest ascent of w then S_w = d_i S_{w s_i}, and the recursion is
// memoized globally.
//
// Route two sums over reduced pipe dreams: fillings of the staircase
// region {(i,j) : i+j <= n} with crosses and elbows such that the strand
// entering row i from the west exits the top at column w(i), no two
// strands crossing twice.  Each dream contributes the product of x_row
// over its crosses.  Agreement of the two routes is a deep fact and a
// prime correctness check, so both are kept deliberately independent.
//
// Expansion in the basis peels the lex-minimal term: the smallest
// monomial of S_w is x^{code(w)} with coefficient 1, so subtracting
// coeff * S_{perm(code)} strictly raises the minimum and terminates.
//
// coeff_exact multiplies and expands; coeff_ps evaluates the alternating
// triple sum over S_n built from coefficient extractions
// K_{w,a} = [x^a] S_w, calibrated so both agree.

#ifndef SCHUBERT_SCHUBERT_HPP
#define SCHUBERT_SCHUBERT_HPP

#include "schubert/polyring.hpp"
#include "schubert/weyl.hpp"

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace schubert {

struct PipeDream {
  int size = 1;                                // staircase parameter n
  std::set<std::pair<int, int>> crosses;       // cells with row+col <= size

  bool operator==(const PipeDream& o) const {
    return size == o.size && crosses == o.crosses;
  }
};

// Strand wiring of the filling: entry k on the west edge of row k, exits
// read along the top edge.  Returns the permutation sending entry row to
// exit column, together with the unordered pairs of strands meeting at
// each cross (for reducedness checks).  Throws std::invalid_argument if a
// cross lies outside the staircase.
struct Wiring {
  Permutation permutation;
  // One (strand, strand) pair per cross cell, strand ids as entry rows.
  std::vector<std::pair<int, int>> crossings;
};
Wiring trace_pipes(const PipeDream& d);

// True when no two strands cross twice.
bool is_reduced(const PipeDream& d);

// Product of x_row over the crosses.
Monomial weight_monomial(const PipeDream& d);

// All reduced fillings wired to w, on the staircase of its trimmed size.
std::vector<PipeDream> reduced_pipe_dreams(const Permutation& w);

// Schubert polynomial via divided differences (memoized).
IntPolynomial schubert_poly_dd(const Permutation& w);

// Schubert polynomial as the generating function of reduced pipe dreams.
IntPolynomial schubert_poly_pd(const Permutation& w);

// Coefficient of x^alpha in S_w (alpha padded with zeros as needed).
BigInt kostka(const Permutation& w, const std::vector<int>& alpha);

using SchubertExpansion = std::map<Permutation, BigInt>;

// Unique integral expansion f = sum c_w S_w; empty for f = 0.
SchubertExpansion expand_in_schubert_basis(const IntPolynomial& f);

// Expansion of S_u * S_v (cached per unordered pair).
SchubertExpansion product_expansion(const Permutation& u, const Permutation& v);

// Structure constant <S_u * S_v, S_w> by multiply-and-expand.
BigInt coeff_exact(const Permutation& u, const Permutation& v, const Permutation& w);

// The alternating triple sum at ambient rank n:
//   sum over sigma in S_n of sign(sigma) *
//   sum over a+b+g = sigma.(n-1,...,1,0) of K_{u,a} K_{v,b} K_{t,g}.
// Evaluates to the structure constant attached to the complement of t;
// exposed raw so the calibration is testable.
BigInt coeff_ps_raw(const Permutation& u, const Permutation& v, const Permutation& t, int n);

// Calibrated orientation: coeff_ps(u,v,w) = coeff_ps_raw(u, v, w0 * w)
// at the common ambient rank, agreeing with coeff_exact.
BigInt coeff_ps(const Permutation& u, const Permutation& v, const Permutation& w);

}  // namespace schubert

#endif  // SCHUBERT_SCHUBERT_HPP
