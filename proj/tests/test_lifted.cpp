// Lifted polynomial systems: a frozen rank-4 general-linear instance
// checked coefficient for coefficient, structural tallies in every
// family, convention probes for the Cayley and mirror signs, trivial
// solutions evaluated through the emitted equations, and round trips of
// both serialization formats including malformed-input rejection.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schubert/lifted.hpp"
#include "schubert/weyl.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

using namespace schubert;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }
SignedPermutation SP(const char* s) { return SignedPermutation::parse(s); }

IntPolynomial sym(const LiftedSystem& s, const std::string& name) {
  const int id = s.symbol_id(name);
  REQUIRE(id > 0);
  return IntPolynomial::variable(id);
}

Monomial mono(const LiftedSystem& s, const std::vector<std::string>& names) {
  Monomial m;
  for (const std::string& nm : names) {
    const int id = s.symbol_id(nm);
    REQUIRE(id > 0);
    m = m * Monomial::var(id);
  }
  return m;
}

// Order-independent comparison of two equation lists.
bool same_multiset(std::vector<IntPolynomial> a, std::vector<IntPolynomial> b) {
  if (a.size() != b.size()) return false;
  std::vector<std::string> ra, rb;
  for (const auto& p : a) ra.push_back(p.to_string());
  for (const auto& p : b) rb.push_back(p.to_string());
  std::sort(ra.begin(), ra.end());
  std::sort(rb.begin(), rb.end());
  return ra == rb;
}

BigInt eval_poly(const IntPolynomial& p, const std::map<int, long long>& val) {
  BigInt acc = 0;
  for (const auto& [m, c] : p.terms()) {
    BigInt t = c;
    for (const auto& [idx, exp] : m.factors()) {
      const auto it = val.find(idx);
      const BigInt base = it == val.end() ? BigInt(0) : BigInt(it->second);
      for (int k = 0; k < exp; ++k) t *= base;
    }
    acc += t;
  }
  return acc;
}

int binom2(int n) { return n * (n - 1) / 2; }

}  // namespace

// ---------------------------------------------------------------------------
// Stiefel patterns.

TEST_CASE("pattern of 1423 on four rows and three columns") {
  const StiefelPattern pat = stiefel_pattern(P("1423"), 4, 3);
  CHECK(pat.var_count == 4);
  const auto tag = [&](int i, int j) { return pat.cells[i - 1][j - 1].tag; };
  const auto var = [&](int i, int j) { return pat.cells[i - 1][j - 1].var; };
  CHECK(tag(1, 1) == CellTag::One);
  CHECK(var(2, 1) == 1);
  CHECK(var(3, 1) == 2);
  CHECK(var(4, 1) == 3);
  CHECK(tag(1, 2) == CellTag::Zero);
  CHECK(tag(2, 2) == CellTag::Zero);
  CHECK(tag(3, 2) == CellTag::Zero);
  CHECK(tag(4, 2) == CellTag::One);
  CHECK(tag(1, 3) == CellTag::Zero);
  CHECK(tag(2, 3) == CellTag::One);
  CHECK(var(3, 3) == 4);
  CHECK(tag(4, 3) == CellTag::Zero);
}

TEST_CASE("pattern free cells count non-inversions over full squares") {
  for (const Permutation& w : all_permutations(4)) {
    const StiefelPattern pat = stiefel_pattern(w, 4, 4);
    CHECK(pat.var_count == binom2(4) - inversions(w));
  }
}

TEST_CASE("pattern rejects pivots that fall outside") {
  CHECK_THROWS_AS(stiefel_pattern(P("321"), 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(stiefel_pattern(P("21"), 0, 1), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Cell formulation, type A.

TEST_CASE("rank-4 cell system matches the worked instance term for term") {
  const LiftedSystem sys = build_type_a(P("2143"), P("3124"), P("1423"));
  CHECK(sys.lie_type == "A");
  CHECK(sys.formulation == Formulation::Cell);
  CHECK(sys.u == std::vector<int>{2, 1, 4, 3});
  CHECK(sys.v == std::vector<int>{3, 1, 2, 4});
  CHECK(sys.t == std::vector<int>{1, 4, 2, 3});
  CHECK(sys.variables ==
        std::vector<std::string>{"x1", "x2", "x3", "x4", "a3_1", "a3_2", "b3_2"});
  REQUIRE(sys.parameters.size() == 20);
  CHECK(sys.parameters.front() == "y11");
  CHECK(sys.parameters[11] == "y34");
  CHECK(sys.parameters[12] == "z11");
  CHECK(sys.parameters.back() == "z24");
  CHECK(sys.det_equations.empty());

  const auto S = [&](const char* nm) { return sym(sys, nm); };
  const IntPolynomial x1 = S("x1"), x2 = S("x2"), x3 = S("x3"), x4 = S("x4");
  const IntPolynomial a31 = S("a3_1"), a32 = S("a3_2"), b32 = S("b3_2");
  const IntPolynomial one = IntPolynomial::constant(1);

  std::vector<IntPolynomial> expect;
  expect.push_back(S("y11") * one + S("y12") * x1 + S("y13") * x2 + S("y14") * x3);
  for (int k = 1; k <= 3; ++k) {
    const auto y = [&](int c) { return S(("y" + std::to_string(k) + std::to_string(c)).c_str()); };
    expect.push_back(y(1) * a31 + y(2) * (a31 * x1 + one) + y(3) * (a31 * x2 + x4) +
                     y(4) * (a31 * x3 + a32));
  }
  for (int k = 1; k <= 2; ++k) {
    const auto z = [&](int c) { return S(("z" + std::to_string(k) + std::to_string(c)).c_str()); };
    expect.push_back(z(1) * one + z(2) * x1 + z(3) * x2 + z(4) * x3);
  }
  expect.push_back(S("z12") + S("z13") * x4 + S("z14") * b32);

  REQUIRE(sys.equations.size() == 7);
  CHECK(same_multiset(sys.equations, expect));
}

TEST_CASE("identity triple imposes nothing") {
  const LiftedSystem sys = build_type_a(Permutation(), Permutation(), Permutation());
  CHECK(sys.variables.empty());
  CHECK(sys.parameters.empty());
  CHECK(sys.equations.empty());
  CHECK(sys.det_equations.empty());
}

TEST_CASE("cell systems stay small and bilinear across random rank-5 triples") {
  const std::vector<Permutation> s5 = all_permutations(5);
  std::mt19937 rng(2026);
  std::uniform_int_distribution<size_t> pick(0, s5.size() - 1);
  const LieType a5{LieFamily::A, 5};
  for (int trial = 0; trial < 200; ++trial) {
    const Permutation &u = s5[pick(rng)], &v = s5[pick(rng)], &w = s5[pick(rng)];
    const LiftedSystem sys = coefficient_system(u, v, w, a5, Formulation::Cell);
    CHECK(sys.equations.size() <= static_cast<size_t>(3 * binom2(5)));
    CHECK(sys.variables.size() <= static_cast<size_t>(3 * binom2(5)));
    const int nv = static_cast<int>(sys.variables.size());
    for (const IntPolynomial& eq : sys.equations)
      for (const auto& [m, c] : eq.terms()) {
        int var_deg = 0, par_deg = 0;
        for (const auto& [idx, exp] : m.factors()) (idx <= nv ? var_deg : par_deg) += exp;
        CHECK(var_deg <= 2);       // at most one mixing times one chart cell
        CHECK(par_deg == 1);       // exactly one flag functional per term
      }
  }
}

TEST_CASE("coefficient_system composes with the top element") {
  const LieType a4{LieFamily::A, 4};
  const LiftedSystem direct = build_type_a(P("2143"), P("3124"), P("1423"));
  const LiftedSystem routed =
      coefficient_system(P("2143"), P("3124"), P("4132"), a4, Formulation::Cell);
  CHECK(direct == routed);
}

// ---------------------------------------------------------------------------
// Cell formulation, signed families.

TEST_CASE("symplectic cell tallies") {
  for (int n = 2; n <= 3; ++n) {
    const int m = 2 * n;
    const SignedPermutation e = SignedPermutation::identity(n);
    const LiftedSystem sys = build_type_c(e, e, e);
    CHECK(sys.lie_type == "C");
    // Flag blocks always hold one equation per matrix row below each
    // pivot: binom2(m) per flag.  Isotropy contributes three full
    // matrices and the Cayley identities two more.
    CHECK(sys.equations.size() == static_cast<size_t>(2 * binom2(m) + 5 * m * m));
    CHECK(sys.parameters.size() == static_cast<size_t>(2 * (2 * n * n + n)));
    for (const IntPolynomial& eq : sys.equations) CHECK(eq.degree() <= 3);
    CHECK(sys.det_equations.empty());
  }
}

TEST_CASE("even orthogonal cell carries the determinant node") {
  const SignedPermutation u = SP("-2,-1,3"), v = SP("2,1,3"), t = SP("3,-2,-1");
  const LiftedSystem sys = build_type_d(u, v, t);
  CHECK(sys.lie_type == "D");
  const int n = 3, m = 6;
  CHECK(sys.equations.size() == static_cast<size_t>(2 * binom2(m) + 5 * m * m));
  CHECK(sys.parameters.size() == static_cast<size_t>(2 * (2 * n * n - n)));
  REQUIRE(sys.det_equations.size() == 1);
  const DetEquation& det = sys.det_equations.front();
  CHECK(det.equals == 1);
  REQUIRE(det.matrix.size() == 6);
  for (const auto& row : det.matrix) {
    REQUIRE(row.size() == 6);
    for (const IntPolynomial& cell : row) CHECK(cell.term_count() <= 1);
  }
}

TEST_CASE("even orthogonal cell rejects odd sign counts") {
  const SignedPermutation even = SP("1,2"), odd = SP("-1,2");
  CHECK_THROWS_AS(build_type_d(odd, even, even), std::invalid_argument);
  CHECK_THROWS_AS(build_type_d(even, odd, even), std::invalid_argument);
  CHECK_THROWS_AS(build_type_d(even, even, odd), std::invalid_argument);
}

TEST_CASE("odd orthogonal cell system is the symplectic one relabeled") {
  const SignedPermutation u = SP("-2,1"), v = SP("2,-1"), t = SP("1,-2");
  const LiftedSystem b = build_type_b(u, v, t);
  CHECK(b.lie_type == "B");
  LiftedSystem c = build_type_c(u, v, t);
  c.lie_type = "B";
  CHECK(b == c);
}

TEST_CASE("symplectic mirror signs flip inside a block and survive across") {
  const SignedPermutation e = SignedPermutation::identity(2);
  const LiftedSystem sys = build_type_c(e, e, e);
  const int m = 4;
  // Cayley block of pi starts after the two flag blocks and three
  // isotropy matrices.
  const size_t cayley = static_cast<size_t>(2 * binom2(m) + 3 * m * m);
  const auto eq = [&](int i, int j) -> const IntPolynomial& {
    return sys.equations[cayley + static_cast<size_t>((i - 1) * m + (j - 1))];
  };
  // Stored cells row-major weakly above the antidiagonal:
  // y1 (1,1), y2 (1,2), y3 (1,3), y4 (1,4), y5 (2,1), ...
  CHECK(eq(1, 1).coefficient(mono(sys, {"y1"})) == 1);
  CHECK(eq(4, 4).coefficient(mono(sys, {"y1"})) == -1);   // same block
  CHECK(eq(3, 4).coefficient(mono(sys, {"y2"})) == -1);   // same block
  CHECK(eq(2, 4).coefficient(mono(sys, {"y3"})) == 1);    // across blocks
  CHECK(eq(1, 4).coefficient(mono(sys, {"y4"})) == 1);    // antidiagonal, free
  // The group element multiplies from the left here: entry (1,1) picks
  // up p1k Yk1 products, not Y1k pk1 ones.
  CHECK(eq(1, 1).coefficient(mono(sys, {"p1_4", "y10"})) == 1);
  CHECK(eq(1, 1).coefficient(mono(sys, {"p4_1", "y4"})) == 0);
}

TEST_CASE("even orthogonal Cayley keeps the algebra on the left") {
  const SignedPermutation e = SignedPermutation::identity(2);
  const LiftedSystem sys = build_type_d(e, e, e);
  const int m = 4;
  const size_t cayley = static_cast<size_t>(2 * binom2(m) + 3 * m * m);
  const auto eq = [&](int i, int j) -> const IntPolynomial& {
    return sys.equations[cayley + static_cast<size_t>((i - 1) * m + (j - 1))];
  };
  // Strictly-above cells: y1 (1,1), y2 (1,2), y3 (1,3), y4 (2,1), y5 (2,2), y6 (3,1).
  CHECK(eq(4, 4).coefficient(mono(sys, {"y1"})) == -1);
  CHECK(eq(2, 4).coefficient(mono(sys, {"y3"})) == -1);  // no sign survives any mirror
  CHECK(eq(1, 1).coefficient(mono(sys, {"y3", "p3_1"})) == 1);
  CHECK(eq(1, 1).coefficient(mono(sys, {"p1_3", "y3"})) == 0);
}

// ---------------------------------------------------------------------------
// Borel formulation.

TEST_CASE("general linear factorization tallies and counts") {
  for (int n = 1; n <= 4; ++n) {
    const LieType lt{LieFamily::A, n};
    const Permutation e = Permutation::identity(n);
    const LiftedSystem sys = build_uniform(e, e, e, lt);
    CHECK(sys.lie_type == "A");
    CHECK(sys.formulation == Formulation::Borel);
    CHECK(sys.variables.size() == static_cast<size_t>(6 * (n * (n + 1) / 2 + 1)));
    CHECK(sys.parameters.size() == static_cast<size_t>(2 * n * n));
    CHECK(sys.equations.size() == static_cast<size_t>(6 + 2 * n * n));
    CHECK(sys.det_equations.empty());
  }
}

TEST_CASE("signed factorization tallies and counts") {
  for (int n = 2; n <= 3; ++n) {
    for (LieFamily fam : {LieFamily::B, LieFamily::C, LieFamily::D}) {
      const LieType lt{fam, n};
      const int m = lt.ambient_dim();
      const SignedPermutation e = SignedPermutation::identity(n);
      const LiftedSystem sys = build_uniform(e, e, e, lt);
      CHECK(sys.formulation == Formulation::Borel);
      CHECK(sys.variables.size() == static_cast<size_t>(2 * m * m + 3 * m * (m + 1)));
      const int tcount = fam == LieFamily::D ? 2 * n * n - n : 2 * n * n + n;
      CHECK(sys.parameters.size() == static_cast<size_t>(2 * tcount));
      const size_t centers = fam == LieFamily::B ? 6 : 0;
      CHECK(sys.equations.size() == static_cast<size_t>(10 * m * m) + centers);
      CHECK(sys.det_equations.empty());
    }
  }
}

TEST_CASE("factorization systems store the composed target") {
  const LiftedSystem a =
      build_uniform(P("132"), P("213"), P("132"), LieType{LieFamily::A, 3});
  CHECK(a.t == std::vector<int>{3, 1, 2});
  const LiftedSystem c = build_uniform(SP("1,2"), SP("1,2"), SP("2,-1"),
                                       LieType{LieFamily::C, 2});
  CHECK(c.t == std::vector<int>{-2, 1});
}

TEST_CASE("factorization Cayley keeps the algebra on the left in every family") {
  const LieType lt{LieFamily::B, 2};
  const SignedPermutation e = SignedPermutation::identity(2);
  const LiftedSystem sys = build_uniform(e, e, e, lt);
  const int m = 5;
  const auto eq = [&](int i, int j) -> const IntPolynomial& {
    return sys.equations[static_cast<size_t>((i - 1) * m + (j - 1))];
  };
  // Strictly-above cells row-major: y1 (1,1), y2 (1,2), y3 (1,3), y4 (1,4), y5 (2,1), ...
  CHECK(eq(1, 1).coefficient(mono(sys, {"y1"})) == 1);
  CHECK(eq(5, 5).coefficient(mono(sys, {"y1"})) == -1);
  CHECK(eq(2, 5).coefficient(mono(sys, {"y4"})) == -1);
  CHECK(eq(1, 1).coefficient(mono(sys, {"y2", "p2_1"})) == 1);
  CHECK(eq(1, 1).coefficient(mono(sys, {"p1_2", "y2"})) == 0);
}

// The natural sanity instance for the factorization systems: u = v =
// identity and w the top element make the composed target the identity,
// so everything is satisfied by identity factors with all parameters at
// their identity values.
TEST_CASE("general linear factorization accepts the trivial point") {
  const int n = 3;
  const LieType lt{LieFamily::A, n};
  const Permutation e = Permutation::identity(n);
  const LiftedSystem sys = build_uniform(e, e, longest_element(n), lt);
  CHECK(sys.t == std::vector<int>{1, 2, 3});
  std::map<int, long long> val;
  for (const std::string& prefix : {"P1", "P2", "P3", "Q1", "Q2", "Q3"}) {
    for (int i = 1; i <= n; ++i)
      val[sys.symbol_id(prefix + "_" + std::to_string(i) + "_" + std::to_string(i))] = 1;
    val[sys.symbol_id(prefix + "_b")] = 1;
  }
  for (int i = 1; i <= n; ++i) {
    val[sys.symbol_id("y" + std::to_string(i) + std::to_string(i))] = 1;
    val[sys.symbol_id("z" + std::to_string(i) + std::to_string(i))] = 1;
  }
  for (const IntPolynomial& eqn : sys.equations) CHECK(eval_poly(eqn, val) == 0);
}

TEST_CASE("signed factorizations accept the trivial point") {
  for (LieFamily fam : {LieFamily::B, LieFamily::C, LieFamily::D}) {
    const int n = 2;
    const LieType lt{fam, n};
    const int m = lt.ambient_dim();
    const SignedPermutation e = SignedPermutation::identity(n);
    const LiftedSystem sys = build_uniform(e, e, longest_element_signed(lt), lt);
    // Parameters all zero force the two group elements to the identity
    // through the Cayley identities; identity triangular factors do the
    // rest.
    std::map<int, long long> val;
    for (int i = 1; i <= m; ++i) {
      const std::string d = std::to_string(i) + "_" + std::to_string(i);
      val[sys.symbol_id("p" + d)] = 1;
      val[sys.symbol_id("r" + d)] = 1;
      for (const std::string& prefix : {"P1", "P2", "P3", "Q1", "Q2", "Q3"})
        val[sys.symbol_id(prefix + "_" + d)] = 1;
    }
    for (const IntPolynomial& eqn : sys.equations) CHECK(eval_poly(eqn, val) == 0);
  }
}

TEST_CASE("factorization validates ranks and parity") {
  CHECK_THROWS_AS(build_uniform(SP("1,2"), SP("1,2"), SP("1,2"), LieType{LieFamily::C, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_uniform(SP("-1,2"), SP("1,2"), SP("1,2"), LieType{LieFamily::D, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_uniform(P("21"), P("21"), P("21"), LieType{LieFamily::B, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      coefficient_system(SP("1,2"), SP("1,2"), SP("1,2"), LieType{LieFamily::A, 2},
                         Formulation::Cell),
      std::invalid_argument);
}

TEST_CASE("coefficient_system dispatches on formulation and family") {
  const LieType c2{LieFamily::C, 2};
  const SignedPermutation e = SignedPermutation::identity(2);
  CHECK(coefficient_system(e, e, e, c2, Formulation::Cell).formulation == Formulation::Cell);
  CHECK(coefficient_system(e, e, e, c2, Formulation::Borel).formulation ==
        Formulation::Borel);
  CHECK(coefficient_system(e, e, e, LieType{LieFamily::B, 2}, Formulation::Cell).lie_type ==
        "B");
  CHECK(coefficient_system(e, e, e, LieType{LieFamily::D, 2}, Formulation::Cell)
            .det_equations.size() == 1);
  // The cell route composes w with the top element before building.
  const LiftedSystem via = coefficient_system(e, e, longest_element_signed(c2), c2,
                                              Formulation::Cell);
  CHECK(via.t == std::vector<int>{1, 2});
}

// ---------------------------------------------------------------------------
// Determinant expansion.

TEST_CASE("cofactor expansion on small matrices") {
  const IntPolynomial a = IntPolynomial::variable(1), b = IntPolynomial::variable(2);
  const IntPolynomial c = IntPolynomial::variable(3), d = IntPolynomial::variable(4);
  CHECK(expand_determinant({{a, b}, {c, d}}) == a * d - b * c);
  CHECK(expand_determinant({}) == IntPolynomial::constant(1));
  const IntPolynomial one = IntPolynomial::constant(1), zero;
  CHECK(expand_determinant({{zero, one}, {one, zero}}) == IntPolynomial::constant(-1));
  CHECK_THROWS_AS(expand_determinant({{a, b}}), std::invalid_argument);
  const std::vector<std::vector<IntPolynomial>> big(7, std::vector<IntPolynomial>(7, one));
  CHECK_THROWS_AS(expand_determinant(big), SizeGuardError);
}

TEST_CASE("the determinant node of a cell pattern expands consistently") {
  // det of the chart of the identity cell: lower triangular with unit
  // diagonal once the free cells vanish, so the constant term is 1.
  const SignedPermutation e = SignedPermutation::identity(2);
  const LiftedSystem sys = build_type_d(e, e, e);
  const IntPolynomial det = expand_determinant(sys.det_equations.front().matrix);
  CHECK(det.coefficient(Monomial()) == 1);
}

// ---------------------------------------------------------------------------
// Serialization.

TEST_CASE("json round trip preserves systems exactly") {
  const std::vector<LiftedSystem> cases = {
      build_type_a(P("2143"), P("3124"), P("1423")),
      build_type_a(Permutation(), Permutation(), Permutation()),
      build_type_c(SP("-2,1"), SP("2,-1"), SP("1,-2")),
      build_type_d(SP("-2,-1"), SP("2,1"), SP("-1,-2")),
      build_uniform(P("132"), P("213"), P("321"), LieType{LieFamily::A, 3}),
      build_uniform(SP("2,1"), SP("1,2"), SP("-1,-2"), LieType{LieFamily::B, 2}),
  };
  for (const LiftedSystem& sys : cases) {
    const std::string text = serialize(sys, SerialFormat::Json);
    CHECK(deserialize(text, SerialFormat::Json) == sys);
    CHECK(serialize(deserialize(text, SerialFormat::Json), SerialFormat::Json) == text);
  }
}

TEST_CASE("text round trip preserves systems exactly") {
  const std::vector<LiftedSystem> cases = {
      build_type_a(P("2143"), P("3124"), P("1423")),
      build_type_a(Permutation(), Permutation(), Permutation()),
      build_type_c(SP("-2,1"), SP("2,-1"), SP("1,-2")),
      build_type_d(SP("-2,-1"), SP("2,1"), SP("-1,-2")),
      build_uniform(P("132"), P("213"), P("321"), LieType{LieFamily::A, 3}),
      build_uniform(SP("2,1"), SP("1,2"), SP("-1,-2"), LieType{LieFamily::C, 2}),
  };
  for (const LiftedSystem& sys : cases) {
    const std::string text = serialize(sys, SerialFormat::Text);
    CHECK(deserialize(text, SerialFormat::Text) == sys);
  }
}

TEST_CASE("round trips hold across random rank-4 cell systems") {
  const std::vector<Permutation> s4 = all_permutations(4);
  std::mt19937 rng(7);
  std::uniform_int_distribution<size_t> pick(0, s4.size() - 1);
  const LieType a4{LieFamily::A, 4};
  for (int trial = 0; trial < 25; ++trial) {
    const LiftedSystem sys = coefficient_system(s4[pick(rng)], s4[pick(rng)], s4[pick(rng)],
                                                a4, Formulation::Cell);
    CHECK(deserialize(serialize(sys, SerialFormat::Json), SerialFormat::Json) == sys);
    CHECK(deserialize(serialize(sys, SerialFormat::Text), SerialFormat::Text) == sys);
  }
}

TEST_CASE("json serialization is canonical") {
  const LiftedSystem sys = build_type_a(P("2143"), P("3124"), P("1423"));
  const std::string a = serialize(sys, SerialFormat::Json);
  const std::string b = serialize(sys, SerialFormat::Json);
  CHECK(a == b);
  CHECK(a.find("\"lie_type\": \"A\"") != std::string::npos);
  CHECK(a.find("\"formulation\": \"cell\"") != std::string::npos);
}

TEST_CASE("malformed json is rejected with a diagnostic") {
  CHECK_THROWS_AS(deserialize("{", SerialFormat::Json), std::invalid_argument);
  CHECK_THROWS_AS(deserialize("[]", SerialFormat::Json), std::invalid_argument);
  const LiftedSystem sys = build_type_a(P("21"), P("12"), P("12"));
  const std::string good = serialize(sys, SerialFormat::Json);

  const auto corrupt = [&](const std::string& from, const std::string& to) {
    std::string bad = good;
    const size_t at = bad.find(from);
    REQUIRE(at != std::string::npos);
    bad.replace(at, from.size(), to);
    return bad;
  };
  // Unknown lie type.
  CHECK_THROWS_AS(deserialize(corrupt("\"lie_type\": \"A\"", "\"lie_type\": \"E\""),
                              SerialFormat::Json),
                  std::invalid_argument);
  // Missing field.
  CHECK_THROWS_AS(deserialize(corrupt("\"formulation\": \"cell\",", ""), SerialFormat::Json),
                  std::invalid_argument);
  // Unknown symbol inside an equation.
  CHECK_THROWS_AS(deserialize(corrupt("\"y11\": 1", "\"q9\": 1"), SerialFormat::Json),
                  std::invalid_argument);

  try {
    deserialize(corrupt("\"y11\": 1", "\"q9\": 1"), SerialFormat::Json);
    CHECK(false);
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    CHECK(msg.find("q9") != std::string::npos);
    CHECK(msg.find("equation") != std::string::npos);
  }
}

TEST_CASE("malformed text is rejected with line numbers") {
  const LiftedSystem sys = build_type_a(P("21"), P("12"), P("12"));
  const std::string good = serialize(sys, SerialFormat::Text);
  CHECK_THROWS_AS(deserialize("nonsense", SerialFormat::Text), std::invalid_argument);

  std::string no_tail = good;
  const size_t at = no_tail.find(" = 0");
  REQUIRE(at != std::string::npos);
  no_tail.replace(at, 4, " = 1");
  try {
    deserialize(no_tail, SerialFormat::Text);
    CHECK(false);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("line") != std::string::npos);
  }

  std::string bad_symbol = good;
  const size_t yat = bad_symbol.rfind("y11");
  REQUIRE(yat != std::string::npos);
  bad_symbol.replace(yat, 3, "q11");
  CHECK_THROWS_AS(deserialize(bad_symbol, SerialFormat::Text), std::invalid_argument);
}

TEST_CASE("symbol names and ids are mutually inverse") {
  const LiftedSystem sys = build_type_c(SP("-2,1"), SP("2,-1"), SP("1,-2"));
  const int total = static_cast<int>(sys.variables.size() + sys.parameters.size());
  for (int id = 1; id <= total; ++id) CHECK(sys.symbol_id(sys.symbol_name(id)) == id);
  CHECK(sys.symbol_id("nonexistent") == 0);
  CHECK_THROWS_AS(sys.symbol_name(total + 1), std::out_of_range);
}
