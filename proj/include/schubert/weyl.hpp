// Permutations, signed permutations, and the classical Weyl groups.
//
// A Permutation is stored in one-line notation and treated as an element of
// S_infinity: w(i) = i for every i beyond the stored window, so the same
// object can be used at any sufficiently large rank.  Signed permutations
// (hyperoctahedral elements) store the values on positive positions only;
// the value at -i is always -w(i).
//
// Conventions used throughout:
//   * composition acts as (w*u)(i) = w(u(i));
//   * the Lehmer code of w is c_i = #{j > i : w(j) < w(i)};
//   * Bruhat order is decided by rank-table dominance,
//       k_w(i,j) = #{r <= i : w(r) > j},  u <= w  iff  k_u <= k_w cellwise;
//   * the diagram of w is {(w(j), i) : i < j, w(i) > w(j)} and zeta(w) is
//     the number of distinct first coordinates appearing in it.

#ifndef SCHUBERT_WEYL_HPP
#define SCHUBERT_WEYL_HPP

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace schubert {

class Permutation {
public:
  // Identity (empty window).
  Permutation() = default;

  // From one-line notation; throws std::invalid_argument unless `window`
  // is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> window);

  static Permutation identity(int n);

  // Size of the stored window.
  int size() const { return static_cast<int>(window_.size()); }

  // Image of i (1-based); fixed beyond the window.
  int operator()(int i) const;

  const std::vector<int>& window() const { return window_; }

  // Same permutation on a window of size n >= size().
  Permutation padded(int n) const;

  // Smallest window representing the same element of S_infinity.
  Permutation trimmed() const;

  Permutation inverse() const;

  // (w*u)(i) = w(u(i)); operands may have different window sizes.
  Permutation operator*(const Permutation& u) const;

  // Equality as elements of S_infinity (windows are trimmed first).
  bool operator==(const Permutation& o) const;
  bool operator!=(const Permutation& o) const { return !(*this == o); }

  // Total order for use as a map key: by trimmed size, then lexicographic.
  bool operator<(const Permutation& o) const;

  // "1432" when every value is a single digit, "12,3,4,..." otherwise.
  std::string to_string() const;

  // Inverse of to_string; accepts both forms.
  static Permutation parse(const std::string& text);

private:
  std::vector<int> window_;
};

int inversions(const Permutation& w);

// Positions i with w(i) > w(i+1), within the trimmed window.
std::vector<int> descent_set(const Permutation& w);
int descent_count(const Permutation& w);

// Positions i < size with w(i) < w(i+1) (ascents of the stored window).
std::vector<int> ascent_set(const Permutation& w);

std::vector<int> lehmer_code(const Permutation& w);

// Unique permutation whose Lehmer code extends `code` by zeros.
Permutation code_to_perm(const std::vector<int>& code);

bool bruhat_leq(const Permutation& u, const Permutation& w);

// n, n-1, ..., 1.
Permutation longest_element(int n);

// Multiply by the adjacent transposition s_i on the right: swaps the values
// in positions i, i+1.
Permutation right_transposition(const Permutation& w, int i);

std::set<std::pair<int, int>> diagram(const Permutation& w);

// Number of distinct row indices occupied by diagram(w).
int zeta_rows(const Permutation& w);

std::vector<Permutation> all_permutations(int n);

// Rank table entry k_w(i,j) = #{r <= i : w(r) > j} for 1 <= i,j <= n.
int rank_entry(const Permutation& w, int i, int j, int n);

// ---------------------------------------------------------------------------
// Signed permutations and classical types.

enum class LieFamily : std::uint8_t { A, B, C, D };

struct LieType {
  LieFamily family = LieFamily::A;
  int rank = 1;

  // Dimension of the natural matrix realization:
  // A: n, B: 2n+1, C: 2n, D: 2n.
  int ambient_dim() const;

  // Number of positive roots: A: n(n-1)/2, B and C: n^2, D: n^2 - n.
  int positive_roots() const;

  std::string to_string() const;
};

// "A"/"B"/"C"/"D", case-insensitive; throws std::invalid_argument otherwise.
LieFamily parse_family(const std::string& text);

class SignedPermutation {
public:
  SignedPermutation() = default;

  // Values on positions 1..n; each |value| distinct, covering 1..n.
  explicit SignedPermutation(std::vector<int> values);

  static SignedPermutation identity(int n);

  int size() const { return static_cast<int>(vals_.size()); }

  // Image of i for -n <= i <= n, i != 0, with w(-i) = -w(i).
  int operator()(int i) const;

  const std::vector<int>& window() const { return vals_; }

  SignedPermutation inverse() const;

  // (w*u)(i) = w(u(i)).
  SignedPermutation operator*(const SignedPermutation& u) const;

  bool operator==(const SignedPermutation& o) const { return vals_ == o.vals_; }
  bool operator!=(const SignedPermutation& o) const { return !(*this == o); }
  bool operator<(const SignedPermutation& o) const { return vals_ < o.vals_; }

  // Comma-separated signed values: "-2,1".
  std::string to_string() const;
  static SignedPermutation parse(const std::string& text);

private:
  std::vector<int> vals_;
};

// #{i < j <= n : w(i) > w(j)} on positive positions.
int inversions(const SignedPermutation& w);

int negative_count(const SignedPermutation& w);

// Coxeter length of w in the given family:
//   B, C: inversions + sum of |w(i)| over negative values;
//   D:    inversions + sum of (|w(i)| - 1) over negative values.
int length(const SignedPermutation& w, const LieType& t);

// Length in type A (= inversions); provided so generic code can take either
// element kind through an overload set.
int length(const Permutation& w, const LieType& t);

// Longest element: -identity for B and C; for D with odd rank the first
// value stays positive (-id has an odd number of sign changes there).
SignedPermutation longest_element_signed(const LieType& t);

// All elements of the Weyl group W(t) for families B, C (2^n n!) and
// D (even sign changes only).
std::vector<SignedPermutation> weyl_group(const LieType& t);

// Row index of the signed basis vector e_j inside the ambient matrix, with
// basis ordered e_{-n},...,e_{-1},(e_0 for odd ambient),e_1,...,e_n.
int signed_row(int j, const LieType& t);

// Signed value whose basis vector sits in ambient row r (inverse of
// signed_row); r = n+1 in type B maps to 0.
int row_signed_value(int r, const LieType& t);

using IntMatrix = std::vector<std::vector<long long>>;

// Bilinear form preserved by the group realization: antidiagonal ones for
// B and D; for C the block form [[0, D_n], [-D_n, 0]] with D_n antidiagonal.
IntMatrix form_matrix(const LieType& t);

// Determinant-one matrix realizing w and preserving form_matrix(t).
// Type A: the plain 0/1 matrix with column j carrying a 1 in row w(j).
// Types B/C/D: a signed monomial matrix on the signed basis; in type D the
// element must have an even number of negative values.
IntMatrix matrix_representative(const Permutation& w, const LieType& t);
IntMatrix matrix_representative(const SignedPermutation& w, const LieType& t);

}  // namespace schubert

#endif  // SCHUBERT_WEYL_HPP
