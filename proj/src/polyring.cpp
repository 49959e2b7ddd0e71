#include "schubert/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace schubert {

Monomial Monomial::var(int index, int exp) {
  if (index < 1) throw std::invalid_argument("variable indices start at 1");
  if (exp < 0) throw std::invalid_argument("exponent must be nonnegative");
  Monomial m;
  if (exp > 0) m.factors_.emplace_back(index, exp);
  return m;
}

Monomial Monomial::from_exponents(const std::vector<int>& exps) {
  Monomial m;
  for (size_t k = 0; k < exps.size(); ++k) {
    if (exps[k] < 0) throw std::invalid_argument("exponent must be nonnegative");
    if (exps[k] > 0) m.factors_.emplace_back(static_cast<int>(k) + 1, exps[k]);
  }
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

int Monomial::exponent(int index) const {
  for (const auto& [v, e] : factors_)
    if (v == index) return e;
  return 0;
}

int Monomial::max_var() const { return factors_.empty() ? 0 : factors_.back().first; }

std::vector<int> Monomial::exponents(int nvars) const {
  if (nvars < max_var()) throw std::invalid_argument("nvars too small for monomial");
  std::vector<int> out(static_cast<size_t>(nvars), 0);
  for (const auto& [v, e] : factors_) out[static_cast<size_t>(v) - 1] = e;
  return out;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  size_t a = 0, b = 0;
  while (a < factors_.size() || b < o.factors_.size()) {
    if (b == o.factors_.size() ||
        (a < factors_.size() && factors_[a].first < o.factors_[b].first)) {
      out.factors_.push_back(factors_[a++]);
    } else if (a == factors_.size() || o.factors_[b].first < factors_[a].first) {
      out.factors_.push_back(o.factors_[b++]);
    } else {
      out.factors_.emplace_back(factors_[a].first, factors_[a].second + o.factors_[b].second);
      ++a, ++b;
    }
  }
  return out;
}

bool Monomial::try_divide(const Monomial& o, Monomial& quotient) const {
  Monomial out;
  size_t b = 0;
  for (const auto& [v, e] : factors_) {
    int sub = 0;
    if (b < o.factors_.size() && o.factors_[b].first == v) sub = o.factors_[b++].second;
    if (sub > e) return false;
    if (e - sub > 0) out.factors_.emplace_back(v, e - sub);
  }
  if (b != o.factors_.size()) return false;  // o has a variable this lacks
  quotient = std::move(out);
  return true;
}

bool Monomial::lex_less(const Monomial& a, const Monomial& b) {
  size_t i = 0, j = 0;
  while (i < a.factors_.size() || j < b.factors_.size()) {
    const int va = i < a.factors_.size() ? a.factors_[i].first : 0;
    const int vb = j < b.factors_.size() ? b.factors_[j].first : 0;
    if (va != 0 && (vb == 0 || va < vb)) {
      // a uses an earlier variable that b lacks: a has the larger exponent.
      return false;
    }
    if (vb != 0 && (va == 0 || vb < va)) return true;
    const int ea = a.factors_[i].second, eb = b.factors_[j].second;
    if (ea != eb) return ea < eb;
    ++i, ++j;
  }
  return false;
}

std::string Monomial::to_string() const {
  return to_string([](int k) { return "x" + std::to_string(k); });
}

std::string Monomial::to_string(const std::function<std::string(int)>& name) const {
  if (factors_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [v, e] : factors_) {
    if (!first) out << '*';
    first = false;
    out << name(v);
    if (e > 1) out << '^' << e;
  }
  return out.str();
}

IntPolynomial IntPolynomial::constant(BigInt c) {
  IntPolynomial f;
  if (c != 0) f.terms_.emplace(Monomial(), std::move(c));
  return f;
}

IntPolynomial IntPolynomial::variable(int index) {
  IntPolynomial f;
  f.terms_.emplace(Monomial::var(index), BigInt(1));
  return f;
}

IntPolynomial IntPolynomial::term(BigInt c, Monomial m) {
  IntPolynomial f;
  if (c != 0) f.terms_.emplace(std::move(m), std::move(c));
  return f;
}

int IntPolynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool IntPolynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

int IntPolynomial::max_var() const {
  int v = 0;
  for (const auto& [m, c] : terms_) v = std::max(v, m.max_var());
  return v;
}

BigInt IntPolynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void IntPolynomial::add_term(const BigInt& c, const Monomial& m) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  IntPolynomial out = *this;
  out += o;
  return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(c, m);
  return *this;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  IntPolynomial out = *this;
  out -= o;
  return out;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(-c, m);
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  IntPolynomial out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) out.add_term(ca * cb, ma * mb);
  return out;
}

IntPolynomial IntPolynomial::operator*(const BigInt& c) const {
  IntPolynomial out;
  if (c == 0) return out;
  for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
  return out;
}

std::string IntPolynomial::to_string() const {
  return to_string([](int k) { return "x" + std::to_string(k); });
}

std::string IntPolynomial::to_string(const std::function<std::string(int)>& name) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_constant()) {
      out << mag;
    } else {
      if (mag != 1) out << mag << '*';
      out << m.to_string(name);
    }
  }
  return out.str();
}

namespace {

// Scanner for the to_string format.
struct PolyScanner {
  const std::string& text;
  size_t pos = 0;

  explicit PolyScanner(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool peek_digit() {
    skip_ws();
    return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
  }

  BigInt integer() {
    skip_ws();
    const size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("expected an integer in polynomial text");
    return BigInt(text.substr(start, pos - start));
  }

  int small_int() {
    skip_ws();
    const size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("expected an index in polynomial text");
    return std::stoi(text.substr(start, pos - start));
  }
};

}  // namespace

IntPolynomial IntPolynomial::parse(const std::string& text) {
  PolyScanner s(text);
  IntPolynomial out;
  bool any = false;
  while (true) {
    s.skip_ws();
    if (s.pos == s.text.size()) break;
    BigInt sign = 1;
    if (s.eat('-')) sign = -1;
    else if (s.eat('+')) sign = 1;
    else if (any) throw std::invalid_argument("expected '+' or '-' between terms");

    BigInt coef = 1;
    Monomial mono;
    bool saw_factor = false;
    if (s.peek_digit()) {
      coef = s.integer();
      saw_factor = true;
    }
    while (true) {
      const size_t before = s.pos;
      const bool star = s.eat('*');
      s.skip_ws();
      if (s.pos < s.text.size() && s.text[s.pos] == 'x') {
        ++s.pos;
        const int index = s.small_int();
        int exp = 1;
        if (s.eat('^')) exp = s.small_int();
        mono = mono * Monomial::var(index, exp);
        saw_factor = true;
      } else {
        if (star) throw std::invalid_argument("dangling '*' in polynomial text");
        s.pos = before;
        break;
      }
    }
    if (!saw_factor) throw std::invalid_argument("empty term in polynomial text");
    out.add_term(sign * coef, mono);
    any = true;
  }
  if (!any && text.find('0') == std::string::npos)
    throw std::invalid_argument("empty polynomial text");
  return out;
}

IntPolynomial swap_variables(const IntPolynomial& f, int i) {
  if (i < 1) throw std::invalid_argument("variable indices start at 1");
  IntPolynomial out;
  for (const auto& [m, c] : f.terms()) {
    Monomial swapped;
    for (const auto& [v, e] : m.factors()) {
      const int nv = v == i ? i + 1 : v == i + 1 ? i : v;
      swapped = swapped * Monomial::var(nv, e);
    }
    out.add_term(c, swapped);
  }
  return out;
}

IntPolynomial divide_exact(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) throw std::logic_error("division by the zero polynomial");
  const auto lead = *g.terms().rbegin();
  IntPolynomial rem = f, quot;
  while (!rem.is_zero()) {
    const auto& [m, c] = *rem.terms().rbegin();
    Monomial q;
    if (!m.try_divide(lead.first, q) || c % lead.second != 0)
      throw std::logic_error("inexact polynomial division: " + rem.to_string() + " by " +
                             g.to_string());
    const BigInt qc = c / lead.second;
    quot.add_term(qc, q);
    rem -= g * IntPolynomial::term(qc, q);
  }
  return quot;
}

IntPolynomial divided_difference(const IntPolynomial& f, int i) {
  const IntPolynomial numerator = f - swap_variables(f, i);
  if (numerator.is_zero()) return IntPolynomial::zero();
  const IntPolynomial denom =
      IntPolynomial::variable(i) - IntPolynomial::variable(i + 1);
  return divide_exact(numerator, denom);
}

std::pair<Monomial, BigInt> lex_min_term(const IntPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial has no terms");
  return *f.terms().begin();
}

}  // namespace schubert
