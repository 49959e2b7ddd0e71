#include "schubert/schubert.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace schubert {

namespace {

constexpr size_t kExpansionIterationGuard = 1u << 22;

// Cell behavior: a cross lets both strands continue straight through
// (west->east, south->north); an elbow turns both (west->north,
// south->east).  Boundary cells on row+col = size+1 are always elbows.
struct Cursor {
  int row, col;
  bool from_west;  // otherwise entering from the south
};

}  // namespace

Wiring trace_pipes(const PipeDream& d) {
  if (d.size < 1) throw std::invalid_argument("staircase parameter must be positive");
  for (const auto& [i, j] : d.crosses)
    if (i < 1 || j < 1 || i + j > d.size)
      throw std::invalid_argument("cross outside the staircase region");

  const int n = d.size;
  std::map<std::pair<int, int>, std::pair<int, int>> meet;  // cross cell -> (horizontal, vertical)
  std::vector<int> window(static_cast<size_t>(n), 0);
  for (int k = 1; k <= n; ++k) {
    Cursor c{k, 1, true};
    while (true) {
      if (c.row == 0) {
        window[static_cast<size_t>(k) - 1] = c.col;
        break;
      }
      if (c.row + c.col > n + 1)
        throw std::logic_error("strand escaped the staircase");
      const bool cross = d.crosses.count({c.row, c.col}) > 0;
      if (cross) {
        auto& slot = meet[{c.row, c.col}];
        (c.from_west ? slot.first : slot.second) = k;
      }
      if (cross == c.from_west) {
        // Straight through a cross horizontally, or turned east by an elbow.
        c = {c.row, c.col + 1, true};
      } else {
        c = {c.row - 1, c.col, false};
      }
    }
  }
  Wiring out{Permutation(std::move(window)), {}};
  out.crossings.reserve(meet.size());
  for (const auto& [cell, strands] : meet) out.crossings.push_back(strands);
  return out;
}

bool is_reduced(const PipeDream& d) {
  const Wiring w = trace_pipes(d);
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : w.crossings) {
    if (a > b) std::swap(a, b);
    if (!seen.emplace(a, b).second) return false;
  }
  return true;
}

Monomial weight_monomial(const PipeDream& d) {
  Monomial m;
  for (const auto& [i, j] : d.crosses) m = m * Monomial::var(i);
  return m;
}

std::vector<PipeDream> reduced_pipe_dreams(const Permutation& w) {
  const Permutation t = w.trimmed();
  const int n = t.size();
  const int target = inversions(t);
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; i + j <= n; ++j) cells.emplace_back(i, j);

  std::vector<PipeDream> found;
  std::set<std::pair<int, int>> chosen;
  const auto recurse = [&](const auto& self, size_t idx, int crossed) -> void {
    if (crossed > target) return;
    if (crossed + static_cast<int>(cells.size() - idx) < target) return;
    if (idx == cells.size()) {
      PipeDream d{n, chosen};
      const Wiring wiring = trace_pipes(d);
      if (wiring.permutation == t) {
        // With exactly inv(w) crosses realizing w no pair can meet twice,
        // but the claim is cheap to re-check.
        if (!is_reduced(d)) throw std::logic_error("tangled dream with minimal crossings");
        found.push_back(std::move(d));
      }
      return;
    }
    self(self, idx + 1, crossed);
    chosen.insert(cells[idx]);
    self(self, idx + 1, crossed + 1);
    chosen.erase(cells[idx]);
  };
  recurse(recurse, 0, 0);
  return found;
}

IntPolynomial schubert_poly_pd(const Permutation& w) {
  IntPolynomial out;
  for (const PipeDream& d : reduced_pipe_dreams(w)) out.add_term(1, weight_monomial(d));
  return out;
}

namespace {

std::map<Permutation, IntPolynomial>& dd_memo() {
  static std::map<Permutation, IntPolynomial> memo;
  return memo;
}
std::mutex dd_mutex;

bool is_dominant_staircase(const Permutation& w) {
  for (int i = 1; i < w.size(); ++i)
    if (w(i) < w(i + 1)) return false;
  return true;
}

}  // namespace

IntPolynomial schubert_poly_dd(const Permutation& w) {
  std::lock_guard<std::mutex> lock(dd_mutex);
  auto& memo = dd_memo();

  // Collect the chain w, w s_i, w s_i s_j, ... up to either a memo hit or
  // the longest element of the trimmed window, then unwind with divided
  // differences.
  std::vector<std::pair<Permutation, int>> chain;
  Permutation cur = w.trimmed();
  while (memo.find(cur) == memo.end() && !is_dominant_staircase(cur)) {
    const std::vector<int> ascents = ascent_set(cur);
    const int i = ascents.back();
    chain.emplace_back(cur, i);
    cur = right_transposition(cur, i);
  }
  IntPolynomial poly;
  if (const auto it = memo.find(cur); it != memo.end()) {
    poly = it->second;
  } else {
    // Longest element of its window: the staircase monomial.
    Monomial m;
    for (int i = 1; i < cur.size(); ++i) m = m * Monomial::var(i, cur.size() - i);
    poly = IntPolynomial::term(1, m);
    memo.emplace(cur, poly);
  }
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    poly = divided_difference(poly, it->second);
    memo.emplace(it->first, poly);
  }
  return poly;
}

BigInt kostka(const Permutation& w, const std::vector<int>& alpha) {
  return schubert_poly_dd(w).coefficient(Monomial::from_exponents(alpha));
}

SchubertExpansion expand_in_schubert_basis(const IntPolynomial& f) {
  SchubertExpansion out;
  IntPolynomial rest = f;
  size_t guard = 0;
  while (!rest.is_zero()) {
    if (++guard > kExpansionIterationGuard)
      throw std::logic_error("basis expansion failed to terminate");
    const auto [m, c] = lex_min_term(rest);
    const Permutation w = code_to_perm(m.exponents(std::max(m.max_var(), 1)));
    rest -= schubert_poly_dd(w) * c;
    out.emplace(w, c);
  }
  return out;
}

namespace {

std::map<std::pair<Permutation, Permutation>, SchubertExpansion>& product_memo() {
  static std::map<std::pair<Permutation, Permutation>, SchubertExpansion> memo;
  return memo;
}
std::mutex product_mutex;

}  // namespace

SchubertExpansion product_expansion(const Permutation& u, const Permutation& v) {
  Permutation a = u.trimmed(), b = v.trimmed();
  if (b < a) std::swap(a, b);
  {
    std::lock_guard<std::mutex> lock(product_mutex);
    const auto it = product_memo().find({a, b});
    if (it != product_memo().end()) return it->second;
  }
  const SchubertExpansion expansion =
      expand_in_schubert_basis(schubert_poly_dd(a) * schubert_poly_dd(b));
  std::lock_guard<std::mutex> lock(product_mutex);
  return product_memo().emplace(std::make_pair(a, b), expansion).first->second;
}

BigInt coeff_exact(const Permutation& u, const Permutation& v, const Permutation& w) {
  const SchubertExpansion& e = product_expansion(u, v);
  const auto it = e.find(w.trimmed());
  return it == e.end() ? BigInt(0) : it->second;
}

BigInt coeff_ps_raw(const Permutation& u, const Permutation& v, const Permutation& t, int n) {
  if (u.trimmed().size() > n || v.trimmed().size() > n || t.trimmed().size() > n)
    throw std::invalid_argument("ambient rank too small");
  if (inversions(u) + inversions(v) + inversions(t) != n * (n - 1) / 2) return 0;

  const IntPolynomial su = schubert_poly_dd(u);
  const IntPolynomial sv = schubert_poly_dd(v);
  const IntPolynomial st = schubert_poly_dd(t);

  // Dense exponent views for the componentwise comparisons below.
  std::vector<std::pair<std::vector<int>, BigInt>> tu, tv;
  for (const auto& [m, c] : su.terms()) tu.emplace_back(m.exponents(n), c);
  for (const auto& [m, c] : sv.terms()) tv.emplace_back(m.exponents(n), c);

  std::vector<int> rho(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) rho[static_cast<size_t>(i)] = n - 1 - i;

  BigInt total = 0;
  for (const Permutation& sigma : all_permutations(n)) {
    std::vector<int> m(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) m[static_cast<size_t>(i) - 1] = rho[static_cast<size_t>(sigma(i)) - 1];
    const BigInt sign = inversions(sigma) % 2 == 0 ? 1 : -1;

    BigInt inner = 0;
    for (const auto& [a, ca] : tu) {
      bool fits = true;
      for (int i = 0; i < n && fits; ++i) fits = a[static_cast<size_t>(i)] <= m[static_cast<size_t>(i)];
      if (!fits) continue;
      for (const auto& [b, cb] : tv) {
        std::vector<int> gamma(static_cast<size_t>(n));
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
          gamma[static_cast<size_t>(i)] =
              m[static_cast<size_t>(i)] - a[static_cast<size_t>(i)] - b[static_cast<size_t>(i)];
          ok = gamma[static_cast<size_t>(i)] >= 0;
        }
        if (!ok) continue;
        const BigInt cg = st.coefficient(Monomial::from_exponents(gamma));
        if (cg != 0) inner += ca * cb * cg;
      }
    }
    total += sign * inner;
  }
  return total;
}

BigInt coeff_ps(const Permutation& u, const Permutation& v, const Permutation& w) {
  const int n = std::max({u.trimmed().size(), v.trimmed().size(), w.trimmed().size()});
  const Permutation t = longest_element(n) * w.trimmed().padded(n);
  return coeff_ps_raw(u, v, t, n);
}

}  // namespace schubert
