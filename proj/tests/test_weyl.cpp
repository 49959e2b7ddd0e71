// Permutation and signed-permutation arithmetic, checked against
// brute-force oracles on small symmetric and hyperoctahedral groups.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schubert/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace schubert;

namespace {

// Bruhat order oracle: u <= w iff u = w or u <= w' for some cocover w' of w
// (w' = w * transposition with one fewer inversion).  Memoized per query set.
bool bruhat_oracle(const Permutation& u, const Permutation& w,
                   std::map<std::pair<Permutation, Permutation>, bool>& memo) {
  if (u == w) return true;
  if (inversions(u) >= inversions(w)) return false;
  const auto key = std::make_pair(u, w);
  const auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const int n = std::max(u.size(), w.size());
  bool ok = false;
  for (int a = 1; a <= n && !ok; ++a) {
    for (int b = a + 1; b <= n && !ok; ++b) {
      if (w(a) <= w(b)) continue;
      // Right-multiply by the transposition (a b): swap positions a, b.
      std::vector<int> win = w.padded(n).window();
      std::swap(win[a - 1], win[b - 1]);
      Permutation cocover{std::move(win)};
      if (inversions(cocover) == inversions(w) - 1)
        ok = bruhat_oracle(u, cocover, memo);
    }
  }
  memo[key] = ok;
  return ok;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  const size_t n = a.size(), m = b[0].size(), k = b.size();
  IntMatrix c(n, std::vector<long long>(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l)
      for (size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

IntMatrix transpose(const IntMatrix& a) {
  IntMatrix t(a[0].size(), std::vector<long long>(a.size(), 0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

long long det(IntMatrix a) {
  // Fraction-free Gaussian elimination (Bareiss); entries stay integral.
  const size_t n = a.size();
  long long prev = 1;
  long long sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

TEST_CASE("window validation") {
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({2, 3}), std::invalid_argument);
  CHECK_NOTHROW(Permutation({2, 3, 1}));
  CHECK_THROWS_AS(SignedPermutation({1, -1}), std::invalid_argument);
  CHECK_NOTHROW(SignedPermutation({-2, 1}));
}

TEST_CASE("composition, inverse, stabilization") {
  const auto w = Permutation::parse("1432");
  CHECK(w.inverse() == w);
  CHECK(w * w.inverse() == Permutation::identity(4));
  const auto u = Permutation::parse("21");
  // (w*u)(1) = w(u(1)) = w(2) = 4.
  CHECK((w * u)(1) == 4);
  CHECK(w.padded(7) == w);       // trailing fixed points are invisible
  CHECK(w.padded(7)(6) == 6);
  CHECK(w(12) == 12);            // beyond any window
  CHECK(Permutation::parse("12345") == Permutation::identity(1));
}

TEST_CASE("string round trips") {
  for (const char* text : {"1432", "21", "1"}) {
    CHECK(Permutation::parse(text).to_string() == text);
  }
  const Permutation big = longest_element(12);
  CHECK(Permutation::parse(big.to_string()) == big);
  CHECK(big.to_string().find(',') != std::string::npos);
  const auto sw = SignedPermutation::parse("-2,1");
  CHECK(sw.to_string() == "-2,1");
  CHECK(sw(1) == -2);
  CHECK(sw(-1) == 2);
  CHECK(sw(2) == 1);
}

TEST_CASE("lehmer codes invert") {
  for (const auto& w : all_permutations(5)) {
    CHECK(code_to_perm(lehmer_code(w)) == w);
    int total = 0;
    for (int c : lehmer_code(w)) total += c;
    CHECK(total == inversions(w));
  }
  CHECK(code_to_perm({0, 2, 0}) == Permutation::parse("1423"));
  CHECK(code_to_perm({3}) == Permutation::parse("4123"));
}

TEST_CASE("descents and ascents partition positions") {
  const auto w = Permutation::parse("4132");
  CHECK(descent_set(w) == std::vector<int>{1, 3});
  CHECK(ascent_set(w) == std::vector<int>{2});
  CHECK(descent_count(Permutation::identity(5)) == 0);
}

TEST_CASE("bruhat order matches the cocover oracle on S4") {
  std::map<std::pair<Permutation, Permutation>, bool> memo;
  for (const auto& u : all_permutations(4))
    for (const auto& w : all_permutations(4))
      CHECK(bruhat_leq(u, w) == bruhat_oracle(u, w, memo));
}

TEST_CASE("bruhat order across different window sizes") {
  CHECK(bruhat_leq(Permutation::parse("21"), Permutation::parse("4132")));
  CHECK(!bruhat_leq(Permutation::parse("4132"), Permutation::parse("21")));
  CHECK(bruhat_leq(Permutation::identity(1), longest_element(6)));
}

TEST_CASE("diagram and its occupied rows") {
  // w = 1432: inversions at positions (2,3),(2,4),(3,4) with values
  // (4,3),(4,2),(3,2) -> cells (3,2),(2,2),(2,3).
  const auto d = diagram(Permutation::parse("1432"));
  CHECK(d == std::set<std::pair<int, int>>{{3, 2}, {2, 2}, {2, 3}});
  CHECK(zeta_rows(Permutation::parse("1432")) == 2);
  CHECK(zeta_rows(Permutation::identity(3)) == 0);
  for (const auto& w : all_permutations(5))
    CHECK(static_cast<int>(diagram(w).size()) == inversions(w));
}

TEST_CASE("longest element and right transpositions") {
  CHECK(longest_element(4) == Permutation::parse("4321"));
  CHECK(inversions(longest_element(5)) == 10);
  const auto w = Permutation::parse("2143");
  CHECK(right_transposition(w, 1) == Permutation::parse("1243"));
  CHECK(right_transposition(w, 3) == Permutation::parse("2134"));
  // Padding happens on demand: positions 3,4 hold fixed points 3,4.
  CHECK(right_transposition(Permutation::parse("21"), 3) == Permutation::parse("2143"));
}

TEST_CASE("signed permutation lengths agree with reduced words in rank 2") {
  // Hand counts: in B2 the element (-1,-2) is the longest, length 4;
  // (2,-1) has length 2; (-2,1) has length 2 as s_0 s_1 ... check table.
  const LieType b2{LieFamily::B, 2};
  CHECK(length(SignedPermutation({-1, -2}), b2) == 4);
  CHECK(length(SignedPermutation({1, 2}), b2) == 0);
  CHECK(length(SignedPermutation({-1, 2}), b2) == 1);
  CHECK(length(SignedPermutation({2, 1}), b2) == 1);
  CHECK(length(SignedPermutation({2, -1}), b2) == 2);
  CHECK(length(SignedPermutation({-2, 1}), b2) == 2);
  CHECK(length(SignedPermutation({1, -2}), b2) == 3);
  CHECK(length(SignedPermutation({-2, -1}), b2) == 3);

  const LieType d2{LieFamily::D, 2};
  CHECK(length(SignedPermutation({1, 2}), d2) == 0);
  CHECK(length(SignedPermutation({2, 1}), d2) == 1);
  CHECK(length(SignedPermutation({-2, -1}), d2) == 1);
  CHECK(length(SignedPermutation({-1, -2}), d2) == 2);
}

TEST_CASE("length is a group-theoretic length: longest element attains the max") {
  for (const LieFamily fam : {LieFamily::B, LieFamily::C, LieFamily::D}) {
    for (int n = 2; n <= 3; ++n) {
      const LieType t{fam, n};
      const auto w0 = longest_element_signed(t);
      CHECK(length(w0, t) == t.positive_roots());
      for (const auto& w : weyl_group(t)) CHECK(length(w, t) <= t.positive_roots());
      // Multiplying by the longest element complements length.
      for (const auto& w : weyl_group(t))
        CHECK(length(w0 * w, t) == t.positive_roots() - length(w, t));
    }
  }
}

TEST_CASE("weyl group sizes") {
  CHECK(weyl_group({LieFamily::B, 2}).size() == 8);
  CHECK(weyl_group({LieFamily::C, 3}).size() == 48);
  CHECK(weyl_group({LieFamily::D, 3}).size() == 24);
}

TEST_CASE("signed row bijection") {
  const LieType c2{LieFamily::C, 2};
  CHECK(signed_row(-2, c2) == 1);
  CHECK(signed_row(-1, c2) == 2);
  CHECK(signed_row(1, c2) == 3);
  CHECK(signed_row(2, c2) == 4);
  const LieType b2{LieFamily::B, 2};
  CHECK(signed_row(0, b2) == 3);
  CHECK(signed_row(2, b2) == 5);
  for (const LieFamily fam : {LieFamily::B, LieFamily::C, LieFamily::D}) {
    const LieType t{fam, 3};
    for (int r = 1; r <= t.ambient_dim(); ++r) CHECK(signed_row(row_signed_value(r, t), t) == r);
  }
}

TEST_CASE("matrix representatives preserve the form and have determinant one") {
  for (const LieFamily fam : {LieFamily::B, LieFamily::C, LieFamily::D}) {
    for (int n = 1; n <= 3; ++n) {
      if (fam == LieFamily::D && n < 2) continue;
      const LieType t{fam, n};
      const IntMatrix j = form_matrix(t);
      for (const auto& w : weyl_group(t)) {
        const IntMatrix g = matrix_representative(w, t);
        CHECK(det(g) == 1);
        CHECK(matmul(matmul(transpose(g), j), g) == j);
      }
    }
  }
}

TEST_CASE("type D rejects odd sign patterns") {
  const LieType d2{LieFamily::D, 2};
  CHECK_THROWS_AS(matrix_representative(SignedPermutation({-1, 2}), d2), std::invalid_argument);
}

TEST_CASE("type A representative is the permutation matrix") {
  const LieType a3{LieFamily::A, 3};
  const auto m = matrix_representative(Permutation::parse("231"), a3);
  // Column j carries its 1 in row w(j).
  CHECK(m[1][0] == 1);
  CHECK(m[2][1] == 1);
  CHECK(m[0][2] == 1);
}

TEST_CASE("longest signed elements") {
  CHECK(longest_element_signed({LieFamily::B, 2}) == SignedPermutation({-1, -2}));
  CHECK(longest_element_signed({LieFamily::D, 2}) == SignedPermutation({-1, -2}));
  CHECK(longest_element_signed({LieFamily::D, 3}) == SignedPermutation({1, -2, -3}));
}

TEST_CASE("ambient dimensions and positive root counts") {
  CHECK(LieType{LieFamily::A, 4}.ambient_dim() == 4);
  CHECK(LieType{LieFamily::B, 3}.ambient_dim() == 7);
  CHECK(LieType{LieFamily::C, 3}.ambient_dim() == 6);
  CHECK(LieType{LieFamily::D, 3}.ambient_dim() == 6);
  CHECK(LieType{LieFamily::A, 4}.positive_roots() == 6);
  CHECK(LieType{LieFamily::B, 3}.positive_roots() == 9);
  CHECK(LieType{LieFamily::C, 3}.positive_roots() == 9);
  CHECK(LieType{LieFamily::D, 3}.positive_roots() == 6);
}
