// Polynomial systems whose solvability over the closure of a rational
// function field decides whether a Schubert structure constant vanishes.
//
// Two formulations are built, in all four classical families:
//
//   Cell:  a Stiefel chart of the cell of the third element, with flag
//          membership imposed through auxiliary linear-combination
//          variables against two parameter flags.  In the symplectic and
//          orthogonal families the chart matrix additionally satisfies
//          the defining form identity g J g^T = J, the two parameter
//          flags come from Cayley transforms of parametric matrices in
//          the Lie algebra, and the even orthogonal family carries one
//          determinant-one condition that is kept as a structured node
//          rather than expanded (naive expansion is exponential).
//
//   Borel: a factorization formulation with six triangular matrices,
//          avoiding charts entirely: P1 u' Q1 = pi P2 v' Q2 and
//          P1 u' Q1 = rho P3 t' Q3 for t = w0 w, with pi, rho generic
//          group elements (parametric in the general linear family,
//          Cayley-constrained otherwise).
//
// Systems carry named variables and named parameters; the distinction
// matters because solution counting happens over the closure of the
// field generated by the parameters.  Monomials in the stored equations
// refer to symbols by index: variables occupy ids 1..V in declared
// order, parameters V+1..V+P.
//
// Naming scheme: chart cells x1, x2, ...; combination variables
// a<i>_<j> and b<i>_<j> (negative indices rendered with an m prefix,
// e.g. a2_m1); group-element entries p<i>_<j>, r<i>_<j>; triangular
// factors P1_<i>_<j>, ..., Q3_<i>_<j> with auxiliary inverses P1_b,
// ..., Q3_b in the general linear family.  Parameters are y../z..:
// matrix-indexed in the general linear family, flat y1..yt otherwise.

#ifndef SCHUBERT_LIFTED_HPP
#define SCHUBERT_LIFTED_HPP

#include "schubert/polyring.hpp"
#include "schubert/weyl.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace schubert {

// Raised when an operation would blow up combinatorially (determinant
// expansion of a large matrix, oversized enumeration); callers treat it
// as "refused", not as failure.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Formulation { Cell, Borel };

const char* formulation_name(Formulation f);
Formulation parse_formulation(const std::string& text);

enum class CellTag { One, Zero, Var };

struct PatternCell {
  CellTag tag = CellTag::Zero;
  int var = 0;  // variable id when tag == Var
  bool operator==(const PatternCell&) const = default;
};

// Matrix chart of a Schubert cell: a 1 in row w(j) of column j, zeros
// above each 1 and to the right of each 1, free cells elsewhere.  Free
// cells are numbered 1, 2, ... going down each column, left to right.
struct StiefelPattern {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<PatternCell>> cells;  // [row][col], 0-based
  int var_count = 0;
};

StiefelPattern stiefel_pattern(const Permutation& w, int rows, int cols);

// A determinant condition det(matrix) = equals, kept unexpanded.  Every
// matrix entry is a single term (a constant or one variable).
struct DetEquation {
  std::vector<std::vector<IntPolynomial>> matrix;
  long long equals = 1;
  bool operator==(const DetEquation&) const = default;
};

struct LiftedSystem {
  std::string lie_type;  // "A", "B", "C", "D"
  Formulation formulation = Formulation::Cell;
  std::vector<int> u, v, t;  // one-line windows, signed outside type A
  std::vector<std::string> variables;   // symbol ids 1..V
  std::vector<std::string> parameters;  // symbol ids V+1..V+P
  std::vector<IntPolynomial> equations;  // each understood as "= 0"
  std::vector<DetEquation> det_equations;

  // Display name of a symbol id (variable or parameter).
  const std::string& symbol_name(int id) const;
  // Id of a declared symbol name, 0 if unknown.
  int symbol_id(const std::string& name) const;

  bool operator==(const LiftedSystem&) const = default;
};

// Cell formulation.  The third argument is the cell element itself;
// compose with the longest element first when testing a coefficient
// (coefficient_system does exactly that).
LiftedSystem build_type_a(const Permutation& u, const Permutation& v, const Permutation& t);
LiftedSystem build_type_b(const SignedPermutation& u, const SignedPermutation& v,
                          const SignedPermutation& t);
LiftedSystem build_type_c(const SignedPermutation& u, const SignedPermutation& v,
                          const SignedPermutation& t);
LiftedSystem build_type_d(const SignedPermutation& u, const SignedPermutation& v,
                          const SignedPermutation& t);

// Borel-factorization formulation; takes w itself and composes with the
// longest element internally.
LiftedSystem build_uniform(const Permutation& u, const Permutation& v, const Permutation& w,
                           const LieType& t);
LiftedSystem build_uniform(const SignedPermutation& u, const SignedPermutation& v,
                           const SignedPermutation& w, const LieType& t);

// System whose solvability over the parameter-field closure is
// equivalent to c_{u,v}^w != 0 in the given type.
LiftedSystem coefficient_system(const Permutation& u, const Permutation& v,
                                const Permutation& w, const LieType& t, Formulation form);
LiftedSystem coefficient_system(const SignedPermutation& u, const SignedPermutation& v,
                                const SignedPermutation& w, const LieType& t, Formulation form);

// Cofactor expansion; guarded, refuses matrices larger than 6x6.
IntPolynomial expand_determinant(const std::vector<std::vector<IntPolynomial>>& m);

enum class SerialFormat { Json, Text };

std::string serialize(const LiftedSystem& s, SerialFormat format);
LiftedSystem deserialize(const std::string& data, SerialFormat format);

}  // namespace schubert

#endif  // SCHUBERT_LIFTED_HPP
