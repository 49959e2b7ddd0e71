// Exact polynomial arithmetic: ordering, divided differences, parsing.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schubert/polyring.hpp"

#include <random>

using namespace schubert;

namespace {

IntPolynomial x(int i) { return IntPolynomial::variable(i); }

// Divided difference the slow way: evaluate (f - s_i f) then divide by
// building the quotient monomial-by-monomial over a geometric telescope:
//   (x_i^a x_{i+1}^b - x_i^b x_{i+1}^a) / (x_i - x_{i+1})
//     = sign * sum of x_i^p x_{i+1}^q over p+q = a+b-1, min(a,b) <= p < max(a,b).
IntPolynomial divided_difference_oracle(const IntPolynomial& f, int i) {
  IntPolynomial out;
  for (const auto& [m, c] : f.terms()) {
    const int a = m.exponent(i), b = m.exponent(i + 1);
    if (a == b) continue;
    Monomial rest;
    for (const auto& [v, e] : m.factors())
      if (v != i && v != i + 1) rest = rest * Monomial::var(v, e);
    const int lo = std::min(a, b), hi = std::max(a, b);
    const BigInt sign = a > b ? 1 : -1;
    for (int p = lo; p < hi; ++p) {
      const int q = a + b - 1 - p;
      out.add_term(sign * c, rest * Monomial::var(i, p) * Monomial::var(i + 1, q));
    }
  }
  return out;
}

IntPolynomial random_poly(std::mt19937_64& rng, int nvars, int maxdeg, int nterms) {
  std::uniform_int_distribution<int> exp(0, maxdeg);
  std::uniform_int_distribution<int> coef(-9, 9);
  IntPolynomial f;
  for (int t = 0; t < nterms; ++t) {
    Monomial m;
    for (int v = 1; v <= nvars; ++v) m = m * Monomial::var(v, exp(rng));
    f.add_term(coef(rng), m);
  }
  return f;
}

}  // namespace

TEST_CASE("lex order with x1 largest") {
  CHECK(Monomial::lex_less(Monomial::var(2), Monomial::var(1)));
  CHECK(!Monomial::lex_less(Monomial::var(1), Monomial::var(2)));
  CHECK(Monomial::lex_less(Monomial(), Monomial::var(5)));
  CHECK(Monomial::lex_less(Monomial::var(1), Monomial::var(1, 2)));
  // x1*x3 < x1*x2 because x2 carries the first difference.
  CHECK(Monomial::lex_less(Monomial::var(1) * Monomial::var(3),
                           Monomial::var(1) * Monomial::var(2)));
}

TEST_CASE("lex minimum picks the smallest term") {
  // x1x2x3 + x1^2x3 + x1x2^2 + x2^2x3 + x1^2x2: minimum is x2^2x3.
  const IntPolynomial f = x(1) * x(2) * x(3) + x(1) * x(1) * x(3) + x(1) * x(2) * x(2) +
                          x(2) * x(2) * x(3) + x(1) * x(1) * x(2);
  const auto [m, c] = lex_min_term(f);
  CHECK(m == Monomial::var(2, 2) * Monomial::var(3));
  CHECK(c == 1);
}

TEST_CASE("arithmetic basics") {
  const IntPolynomial f = x(1) + x(2);
  const IntPolynomial g = x(1) - x(2);
  CHECK(f * g == x(1) * x(1) - x(2) * x(2));
  CHECK(f - f == IntPolynomial::zero());
  CHECK((f * BigInt(0)).is_zero());
  CHECK(f.degree() == 1);
  CHECK(IntPolynomial::zero().degree() == -1);
  CHECK((f * g).is_homogeneous());
  CHECK(!(f + IntPolynomial::constant(1)).is_homogeneous());
}

TEST_CASE("swap_variables is an involution and fixes symmetric input") {
  const IntPolynomial f = x(1) * x(1) * x(2) + x(3);
  CHECK(swap_variables(swap_variables(f, 1), 1) == f);
  CHECK(swap_variables(f, 4) == f);
  const IntPolynomial sym = x(1) * x(2) + x(1) + x(2);
  CHECK(swap_variables(sym, 1) == sym);
}

TEST_CASE("divided difference on monomials") {
  // d_1(x1) = 1, d_1(x2) = -1, d_1(x1 x2) = 0, d_1(x1^2) = x1 + x2.
  CHECK(divided_difference(x(1), 1) == IntPolynomial::constant(1));
  CHECK(divided_difference(x(2), 1) == IntPolynomial::constant(-1));
  CHECK(divided_difference(x(1) * x(2), 1).is_zero());
  CHECK(divided_difference(x(1) * x(1), 1) == x(1) + x(2));
  // d_2 ignores x1: d_2(x1^3) = 0.
  CHECK(divided_difference(x(1) * x(1) * x(1), 2).is_zero());
}

TEST_CASE("divided difference agrees with the telescoping oracle") {
  std::mt19937_64 rng(20260817);
  for (int trial = 0; trial < 200; ++trial) {
    const IntPolynomial f = random_poly(rng, 4, 4, 6);
    for (int i = 1; i <= 3; ++i)
      CHECK(divided_difference(f, i) == divided_difference_oracle(f, i));
  }
}

TEST_CASE("divided differences satisfy the braid and nilpotence laws") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const IntPolynomial f = random_poly(rng, 3, 3, 5);
    const auto d1 = [](const IntPolynomial& p) { return divided_difference(p, 1); };
    const auto d2 = [](const IntPolynomial& p) { return divided_difference(p, 2); };
    CHECK(d1(d1(f)).is_zero());
    CHECK(d1(d2(d1(f))) == d2(d1(d2(f))));
  }
}

TEST_CASE("exact division flags non-divisible input") {
  CHECK_THROWS_AS(divide_exact(x(1) * x(1) + x(2), x(1) - x(2)), std::logic_error);
  CHECK(divide_exact(x(1) * x(1) - x(2) * x(2), x(1) - x(2)) == x(1) + x(2));
}

TEST_CASE("rendering") {
  const IntPolynomial f =
      x(1) * x(1) * x(2) + IntPolynomial::constant(3) * x(3) - IntPolynomial::constant(2);
  CHECK(f.to_string() == "x1^2*x2 + 3*x3 - 2");
  CHECK(IntPolynomial::zero().to_string() == "0");
  CHECK((-x(1)).to_string() == "-x1");
}

TEST_CASE("parsing round trips") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const IntPolynomial f = random_poly(rng, 3, 3, 4);
    CHECK(IntPolynomial::parse(f.to_string()) == f);
  }
  CHECK(IntPolynomial::parse("x1^2*x2 + 3*x3") ==
        x(1) * x(1) * x(2) + IntPolynomial::constant(3) * x(3));
  CHECK(IntPolynomial::parse("0").is_zero());
  CHECK(IntPolynomial::parse("-4") == IntPolynomial::constant(-4));
  CHECK_THROWS_AS(IntPolynomial::parse("x1 + + x2"), std::invalid_argument);
  CHECK_THROWS_AS(IntPolynomial::parse("3*"), std::invalid_argument);
  CHECK_THROWS_AS(IntPolynomial::parse(""), std::invalid_argument);
}

TEST_CASE("coefficients can exceed 64 bits") {
  IntPolynomial f = IntPolynomial::constant(1);
  for (int k = 0; k < 5; ++k) f = f * f * IntPolynomial::constant(1000000007);
  const BigInt huge = f.coefficient(Monomial());
  CHECK(huge > BigInt("18446744073709551615"));
  CHECK(IntPolynomial::parse(f.to_string()) == f);
}
