// Multivariate polynomials over arbitrary-precision integers.
//
// Monomials are sparse exponent lists over variables x1, x2, ... and are
// compared in lexicographic order with x1 > x2 > ...: the first variable
// with differing exponent decides, larger exponent winning.  Polynomials
// keep their terms in a map under that order, so the lex-minimal term is
// at begin() and the lex-maximal (leading) term at rbegin().
//
// The only division ever needed is by the difference x_i - x_{i+1} when
// applying the divided difference
//
//     d_i f = (f - s_i f) / (x_i - x_{i+1}),
//
// where s_i swaps x_i and x_{i+1}.  The numerator is always exactly
// divisible; a nonzero remainder therefore signals corrupted arithmetic
// and raises instead of returning a wrong answer.

#ifndef SCHUBERT_POLYRING_HPP
#define SCHUBERT_POLYRING_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace schubert {

using BigInt = boost::multiprecision::cpp_int;

class Monomial {
public:
  // The constant monomial 1.
  Monomial() = default;

  static Monomial var(int index, int exp = 1);

  // exps[k] is the exponent of x_{k+1}; zeros allowed.
  static Monomial from_exponents(const std::vector<int>& exps);

  int degree() const;
  int exponent(int index) const;
  int max_var() const;  // 0 for the constant monomial
  bool is_constant() const { return factors_.empty(); }

  // Dense exponent vector of length nvars (nvars >= max_var()).
  std::vector<int> exponents(int nvars) const;

  Monomial operator*(const Monomial& o) const;

  // this / o when o divides this; false otherwise.
  bool try_divide(const Monomial& o, Monomial& quotient) const;

  bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  // Lex order with x1 > x2 > ...
  static bool lex_less(const Monomial& a, const Monomial& b);

  const std::vector<std::pair<int, int>>& factors() const { return factors_; }

  // "x1^2*x2"; "1" for the constant monomial.  `name` maps a variable
  // index to its display name (defaults to x<k>).
  std::string to_string() const;
  std::string to_string(const std::function<std::string(int)>& name) const;

private:
  // (variable index, exponent), sorted by index, exponents positive.
  std::vector<std::pair<int, int>> factors_;
};

struct MonomialLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::lex_less(a, b);
  }
};

class IntPolynomial {
public:
  using TermMap = std::map<Monomial, BigInt, MonomialLexLess>;

  IntPolynomial() = default;

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial constant(BigInt c);
  static IntPolynomial variable(int index);
  static IntPolynomial term(BigInt c, Monomial m);

  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;
  size_t term_count() const { return terms_.size(); }
  int max_var() const;

  BigInt coefficient(const Monomial& m) const;

  const TermMap& terms() const { return terms_; }

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator-() const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator*(const BigInt& c) const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);

  bool operator==(const IntPolynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

  void add_term(const BigInt& c, const Monomial& m);

  // Terms in decreasing lex order: "x1^2*x2 + 3*x3 - 2"; "0" when zero.
  std::string to_string() const;
  std::string to_string(const std::function<std::string(int)>& name) const;

  // Accepts the to_string format: integer coefficients, x<k> powers joined
  // by '*', terms joined by '+'/'-'.  Throws std::invalid_argument on
  // malformed input.
  static IntPolynomial parse(const std::string& text);

private:
  TermMap terms_;  // no zero coefficients stored
};

// Exchange x_i and x_{i+1} in every term.
IntPolynomial swap_variables(const IntPolynomial& f, int i);

// (f - s_i f) / (x_i - x_{i+1}); degree drops by one.  Raises
// std::logic_error if the division leaves a remainder.
IntPolynomial divided_difference(const IntPolynomial& f, int i);

// Exact quotient f / g under lex leading terms; std::logic_error if the
// division algorithm terminates with a nonzero remainder.
IntPolynomial divide_exact(const IntPolynomial& f, const IntPolynomial& g);

// Lex-minimal term of a nonzero polynomial.
std::pair<Monomial, BigInt> lex_min_term(const IntPolynomial& f);

}  // namespace schubert

#endif  // SCHUBERT_POLYRING_HPP
