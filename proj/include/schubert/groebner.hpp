// Groebner bases over a prime field, used to count the solutions of a
// specialized lifted system.
//
// The intended pipeline: draw one random value per parameter of a
// lifted system, reduce every equation to a polynomial in the variables
// alone over F_p (expanding any determinant node along the way), run
// Buchberger to a reduced basis in graded reverse lexicographic order,
// and read off the number of standard monomials.  When the specialized
// ideal is zero-dimensional that number is the solution count over the
// algebraic closure, with multiplicity; when it is not, counting
// returns nothing rather than a wrong answer.
//
// Sizes are guarded, not trusted: Buchberger stops with SizeGuardError
// after a fixed budget of S-polynomial reductions, determinant
// expansion refuses large matrices, and the standard-monomial walk
// refuses oversized boxes.

#ifndef SCHUBERT_GROEBNER_HPP
#define SCHUBERT_GROEBNER_HPP

#include "schubert/lifted.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace schubert {

// Graded reverse lexicographic order, as "a comes before b" for a map
// that keeps the leading monomial at begin(): higher total degree
// first; on ties the monomial whose trailing difference is negative is
// the larger one.
struct DegRevLexGreater {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Sparse polynomial over F_p in a fixed number of variables; exponent
// vectors are dense of length nvars.  terms.begin() is the leading
// term.
struct FpPoly {
  int nvars = 0;
  std::uint64_t p = 0;
  std::map<std::vector<int>, std::uint64_t, DegRevLexGreater> terms;

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const;
  int degree() const;

  // Accumulates c on the exponent vector, dropping the term if the sum
  // vanishes.
  void add(const std::vector<int>& exps, std::uint64_t c);

  bool operator==(const FpPoly& o) const { return nvars == o.nvars && terms == o.terms; }
};

FpPoly fp_add(const FpPoly& a, const FpPoly& b);
// a - c * x^shift * b.
FpPoly fp_sub_scaled(const FpPoly& a, std::uint64_t c, const std::vector<int>& shift,
                     const FpPoly& b);
FpPoly fp_monic(const FpPoly& a);

// Full normal form of f against basis (all members monic, nonzero).
// When budget is given, every elimination drains it by the number of
// terms touched (the sizes of the running polynomial and the reducer),
// and exhausting it throws SizeGuardError, so a reduction whose
// intermediates balloon fails fast instead of grinding.
FpPoly fp_reduce(FpPoly f, const std::vector<FpPoly>& basis, long long* budget = nullptr);

// Substitutes one uniformly random value per parameter (drawn from a
// generator seeded with `seed`, in declared parameter order), reduces
// every equation mod p, and appends the expanded determinant conditions.
// Zero polynomials are dropped.  The modulus must be an odd prime below
// 2^62.  Throws SizeGuardError if a determinant node is too large to
// expand.
std::vector<FpPoly> specialize(const LiftedSystem& s, std::uint64_t p, std::uint64_t seed);

// Buchberger with the product and chain criteria and normal selection;
// returns the reduced basis (monic, mutually reduced, deterministic
// order).  The budget is a shared pool of work units: every round of
// pair selection drains it by the size of the pair queue, forming an
// S-polynomial drains it by the sizes of the two generators involved,
// and every elimination inside the reductions drains it by the terms
// it touches, so total work and memory stay proportional to the pool.
// A fixed desk-scale cap of 200000 S-polynomial reductions applies on
// top of the pool.  Exceeding either throws SizeGuardError.
std::vector<FpPoly> buchberger(std::vector<FpPoly> gens, long long budget = 2000000000);

// Number of standard monomials of the ideal spanned by the leading
// terms of a reduced basis: the solution count (with multiplicity over
// the algebraic closure) when the ideal is zero-dimensional.  Returns
// nullopt when some variable has no pure power among the leading terms
// (positive-dimensional or empty input with variables).  A basis
// containing a nonzero constant counts zero; nvars == 0 counts one.
std::optional<long long> solution_count(const std::vector<FpPoly>& gb, int nvars);

}  // namespace schubert

#endif  // SCHUBERT_GROEBNER_HPP
