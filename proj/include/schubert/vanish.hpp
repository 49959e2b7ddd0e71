// Randomized vanishing certification for structure constants in all four
// classical families.
//
// The matrix model: G preserves the bilinear form J of the family (types
// B, C, D; type A is the general linear group), n = g intersect strictly
// upper triangular is the nilradical of the Borel, and to each Weyl
// element w belongs the space
//
//     Z_w = n  intersect  w b_- w^{-1},      dim Z_w = length(w),
//
// computed here exactly over the rationals.  The test: c_{u,v}^w is
// nonzero exactly when, for generic unipotent rho, omega, tau,
//
//     rho Z_u rho^{-1} + omega Z_v omega^{-1} + tau Z_t tau^{-1} = n,
//
// with t the complement w0 w.  Our representatives act by e_j -> e_{w(j)};
// under that convention the criterion takes the subspaces of the inverse
// elements, Z_{u^-1}, Z_{v^-1}, Z_{t^-1} (verified exhaustively against
// the exact expansion in low rank).  The criterion needs the lengths to
// balance, length(u) + length(v) = length(w).  When they do not, the
// coefficient vanishes for graded reasons and the test certifies that
// directly (the spanning criterion alone would misreport, e.g.
// u = v = w0, w = id).  Genericity is sampled over F_p through Cayley
// parametrization; a full-rank witness proves nonvanishing, while T
// failures make vanishing overwhelmingly likely but uncertified.

#ifndef SCHUBERT_VANISH_HPP
#define SCHUBERT_VANISH_HPP

#include "schubert/fp.hpp"
#include "schubert/weyl.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace schubert {

// Basis data for the nilradical and opposite Borel subalgebra.
struct NilpotentData {
  LieType type;
  int ambient = 0;
  // Basis of n; element k is determined by its entry at free_cells[k].
  std::vector<IntMatrix> upper;
  std::vector<std::pair<int, int>> free_cells;  // 1-based (row, col)
  // Basis of b_-: mirrored lower part plus the torus.
  std::vector<IntMatrix> lower;
};

NilpotentData nilpotent_data(const LieType& t);

// Exact basis of Z_w = n intersect Ad(w) b_-, integral primitive vectors.
std::vector<IntMatrix> z_subspace(const Permutation& w, const LieType& t);
std::vector<IntMatrix> z_subspace(const SignedPermutation& w, const LieType& t);

// Random unipotent element of the group over F_p via the Cayley transform
// of a random nilradical element.
FpMatrix random_unipotent(const LieType& t, std::uint64_t p, std::mt19937_64& rng);

enum class VanishTag { ZeroCertified, NonzeroCertified, ZeroWhp };

struct VanishVerdict {
  VanishTag tag = VanishTag::ZeroWhp;
  std::string reason;      // which precheck fired, or the sampling summary
  int trials = 0;          // random trials actually run
  std::uint64_t prime = 0; // 0 when no sampling happened
};

struct VanishOptions {
  std::uint64_t prime = (1ull << 31) - 1;
  int trials = 3;
  std::uint64_t seed = 0;
};

VanishVerdict vanish_test(const Permutation& u, const Permutation& v, const Permutation& w,
                          const LieType& t, const VanishOptions& opt = {});
VanishVerdict vanish_test(const SignedPermutation& u, const SignedPermutation& v,
                          const SignedPermutation& w, const LieType& t,
                          const VanishOptions& opt = {});

const char* vanish_tag_name(VanishTag tag);

}  // namespace schubert

#endif  // SCHUBERT_VANISH_HPP
