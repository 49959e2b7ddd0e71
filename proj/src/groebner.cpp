// Buchberger's algorithm over F_p with the product and chain criteria,
// plus parameter specialization of lifted systems and standard-monomial
// counting for zero-dimensional ideals.

#include "schubert/groebner.hpp"

#include "schubert/fp.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

namespace schubert {

namespace {

int total_degree(const std::vector<int>& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

bool exp_divides(const std::vector<int>& a, const std::vector<int>& b) {
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

bool exp_coprime(const std::vector<int>& a, const std::vector<int>& b) {
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] > 0 && b[k] > 0) return false;
  return true;
}

std::vector<int> exp_lcm(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (size_t k = 0; k < a.size(); ++k) out[k] = std::max(a[k], b[k]);
  return out;
}

std::vector<int> exp_sub(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
  return out;
}

FpPoly unit_poly(int nvars, std::uint64_t p) {
  FpPoly one;
  one.nvars = nvars;
  one.p = p;
  one.add(std::vector<int>(static_cast<size_t>(nvars), 0), 1);
  return one;
}

}  // namespace

bool DegRevLexGreater::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  const size_t n = std::max(a.size(), b.size());
  const auto at = [](const std::vector<int>& v, size_t k) {
    return k < v.size() ? v[k] : 0;
  };
  for (size_t k = n; k-- > 0;) {
    const int x = at(a, k), y = at(b, k);
    if (x != y) return x < y;
  }
  return false;
}

bool FpPoly::is_constant() const {
  if (terms.empty()) return true;
  if (terms.size() > 1) return false;
  return total_degree(terms.begin()->first) == 0;
}

int FpPoly::degree() const {
  return terms.empty() ? -1 : total_degree(terms.begin()->first);
}

void FpPoly::add(const std::vector<int>& exps, std::uint64_t c) {
  c %= p;
  if (c == 0) return;
  const auto it = terms.find(exps);
  if (it == terms.end()) {
    terms.emplace(exps, c);
  } else {
    it->second = add_mod(it->second, c, p);
    if (it->second == 0) terms.erase(it);
  }
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b) {
  FpPoly out = a;
  for (const auto& [e, c] : b.terms) out.add(e, c);
  return out;
}

FpPoly fp_sub_scaled(const FpPoly& a, std::uint64_t c, const std::vector<int>& shift,
                     const FpPoly& b) {
  FpPoly out = a;
  for (const auto& [e, bc] : b.terms) {
    const std::uint64_t prod = mul_mod(c % a.p, bc, a.p);
    if (prod == 0) continue;
    std::vector<int> e2(e.size());
    for (size_t k = 0; k < e.size(); ++k) e2[k] = e[k] + shift[k];
    out.add(e2, a.p - prod);
  }
  return out;
}

FpPoly fp_monic(const FpPoly& a) {
  if (a.is_zero()) return a;
  const std::uint64_t lc = a.terms.begin()->second;
  if (lc == 1) return a;
  const std::uint64_t inv = inv_mod(lc, a.p);
  FpPoly out;
  out.nvars = a.nvars;
  out.p = a.p;
  for (const auto& [e, c] : a.terms) out.terms.emplace(e, mul_mod(c, inv, a.p));
  return out;
}

FpPoly fp_reduce(FpPoly f, const std::vector<FpPoly>& basis, long long* budget) {
  FpPoly out;
  out.nvars = f.nvars;
  out.p = f.p;
  while (!f.is_zero()) {
    const auto lead = *f.terms.begin();
    bool reduced = false;
    for (const FpPoly& g : basis) {
      if (g.is_zero()) continue;
      const std::vector<int>& gm = g.terms.begin()->first;
      if (!exp_divides(gm, lead.first)) continue;
      if (budget &&
          (*budget -= static_cast<long long>(f.terms.size() + g.terms.size())) < 0)
        throw SizeGuardError("polynomial reduction exceeded its budget");
      f = fp_sub_scaled(f, lead.second, exp_sub(lead.first, gm), g);
      reduced = true;
      break;
    }
    if (!reduced) {
      out.add(lead.first, lead.second);
      f.terms.erase(f.terms.begin());
    }
  }
  return out;
}

std::vector<FpPoly> specialize(const LiftedSystem& s, std::uint64_t p, std::uint64_t seed) {
  if (p < 3 || p % 2 == 0 || p >= (1ull << 62) || !is_prime_u64(p))
    throw std::invalid_argument("modulus must be an odd prime below 2^62");
  const int nv = static_cast<int>(s.variables.size());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  std::vector<std::uint64_t> value;
  value.reserve(s.parameters.size());
  for (size_t k = 0; k < s.parameters.size(); ++k) value.push_back(dist(rng));

  const auto down = [&](const IntPolynomial& poly) {
    FpPoly out;
    out.nvars = nv;
    out.p = p;
    for (const auto& [mono, c] : poly.terms()) {
      BigInt cm = c % BigInt(p);
      if (cm < 0) cm += p;
      std::uint64_t coef = cm.convert_to<std::uint64_t>();
      std::vector<int> exps(static_cast<size_t>(nv), 0);
      for (const auto& [idx, e] : mono.factors()) {
        if (idx <= nv)
          exps[static_cast<size_t>(idx - 1)] += e;
        else
          coef = mul_mod(coef, pow_mod(value[static_cast<size_t>(idx - nv - 1)],
                                       static_cast<std::uint64_t>(e), p),
                         p);
      }
      out.add(exps, coef);
    }
    return out;
  };

  std::vector<FpPoly> out;
  for (const IntPolynomial& eq : s.equations) {
    FpPoly q = down(eq);
    if (!q.is_zero()) out.push_back(std::move(q));
  }
  for (const DetEquation& de : s.det_equations) {
    const IntPolynomial det =
        expand_determinant(de.matrix) - IntPolynomial::constant(de.equals);
    FpPoly q = down(det);
    if (!q.is_zero()) out.push_back(std::move(q));
  }
  return out;
}

std::vector<FpPoly> buchberger(std::vector<FpPoly> gens, long long budget) {
  std::vector<FpPoly> g;
  for (FpPoly& f : gens)
    if (!f.is_zero()) g.push_back(fp_monic(f));
  if (g.empty()) return g;
  const int nvars = g.front().nvars;
  const std::uint64_t p = g.front().p;
  for (const FpPoly& f : g)
    if (f.is_constant()) return {unit_poly(nvars, p)};

  struct Pair {
    int i, j;
    std::vector<int> lcm;
    int deg;
  };
  std::vector<Pair> pending;
  const auto make_pair_entry = [&](int i, int j) {
    Pair pr;
    pr.i = i;
    pr.j = j;
    pr.lcm = exp_lcm(g[static_cast<size_t>(i)].terms.begin()->first,
                     g[static_cast<size_t>(j)].terms.begin()->first);
    pr.deg = total_degree(pr.lcm);
    return pr;
  };
  for (int j = 1; j < static_cast<int>(g.size()); ++j)
    for (int i = 0; i < j; ++i) pending.push_back(make_pair_entry(i, j));

  // Desk-scale cap: at most this many S-polynomials are ever reduced in
  // one basis computation, independent of the work-unit pool.
  constexpr long long kMaxSPolynomials = 200000;
  long long spolys = 0;
  long long remaining = budget;
  while (!pending.empty()) {
    remaining -= static_cast<long long>(pending.size() + g.size());
    if (remaining < 0)
      throw SizeGuardError("basis computation exceeded its reduction budget");
    size_t best = 0;
    for (size_t k = 1; k < pending.size(); ++k)
      if (pending[k].deg < pending[best].deg) best = k;
    const Pair pr = pending[best];
    pending.erase(pending.begin() + static_cast<long>(best));

    const std::vector<int>& mi = g[static_cast<size_t>(pr.i)].terms.begin()->first;
    const std::vector<int>& mj = g[static_cast<size_t>(pr.j)].terms.begin()->first;
    if (exp_coprime(mi, mj)) continue;
    bool chained = false;
    for (int k = 0; k < static_cast<int>(g.size()) && !chained; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!exp_divides(g[static_cast<size_t>(k)].terms.begin()->first, pr.lcm)) continue;
      bool ik_pending = false, jk_pending = false;
      for (const Pair& q : pending) {
        if (q.i == std::min(pr.i, k) && q.j == std::max(pr.i, k)) ik_pending = true;
        if (q.i == std::min(pr.j, k) && q.j == std::max(pr.j, k)) jk_pending = true;
      }
      if (!ik_pending && !jk_pending) chained = true;
    }
    if (chained) continue;

    remaining -= static_cast<long long>(1 + g[static_cast<size_t>(pr.i)].terms.size() +
                                        g[static_cast<size_t>(pr.j)].terms.size());
    if (remaining < 0)
      throw SizeGuardError("basis computation exceeded its reduction budget");
    if (++spolys > kMaxSPolynomials)
      throw SizeGuardError("basis computation exceeded the S-polynomial cap");

    FpPoly s;
    s.nvars = nvars;
    s.p = p;
    const std::vector<int> shift_i = exp_sub(pr.lcm, mi);
    for (const auto& [e, c] : g[static_cast<size_t>(pr.i)].terms) {
      std::vector<int> e2(e.size());
      for (size_t k = 0; k < e.size(); ++k) e2[k] = e[k] + shift_i[k];
      s.add(e2, c);
    }
    s = fp_sub_scaled(s, 1, exp_sub(pr.lcm, mj), g[static_cast<size_t>(pr.j)]);

    FpPoly r = fp_reduce(std::move(s), g, &remaining);
    if (r.is_zero()) continue;
    if (r.is_constant()) return {unit_poly(nvars, p)};
    g.push_back(fp_monic(r));
    const int jnew = static_cast<int>(g.size()) - 1;
    for (int i = 0; i < jnew; ++i) pending.push_back(make_pair_entry(i, jnew));
  }

  // Reduced basis: discard members whose leading monomial another one
  // divides, then tail-reduce the survivors against each other.
  std::vector<FpPoly> keep;
  for (size_t i = 0; i < g.size(); ++i) {
    const std::vector<int>& mi = g[i].terms.begin()->first;
    bool redundant = false;
    for (size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const std::vector<int>& mj = g[j].terms.begin()->first;
      if (exp_divides(mj, mi) && (mi != mj || j < i)) redundant = true;
    }
    if (!redundant) keep.push_back(g[i]);
  }
  std::vector<FpPoly> out;
  for (size_t i = 0; i < keep.size(); ++i) {
    std::vector<FpPoly> others;
    for (size_t j = 0; j < keep.size(); ++j)
      if (j != i) others.push_back(keep[j]);
    out.push_back(fp_monic(fp_reduce(keep[i], others, &remaining)));
  }
  std::sort(out.begin(), out.end(), [](const FpPoly& a, const FpPoly& b) {
    return DegRevLexGreater()(b.terms.begin()->first, a.terms.begin()->first);
  });
  return out;
}

std::optional<long long> solution_count(const std::vector<FpPoly>& gb, int nvars) {
  for (const FpPoly& f : gb)
    if (!f.is_zero() && f.is_constant()) return 0;
  if (nvars == 0) return 1;
  if (gb.empty()) return std::nullopt;

  std::vector<std::vector<int>> lms;
  for (const FpPoly& f : gb)
    if (!f.is_zero()) lms.push_back(f.terms.begin()->first);

  std::vector<int> box(static_cast<size_t>(nvars), -1);
  for (const std::vector<int>& lm : lms) {
    int support = -1;
    bool pure = true;
    for (int k = 0; k < nvars; ++k)
      if (lm[static_cast<size_t>(k)] > 0) {
        if (support >= 0) {
          pure = false;
          break;
        }
        support = k;
      }
    if (pure && support >= 0) {
      int& b = box[static_cast<size_t>(support)];
      const int d = lm[static_cast<size_t>(support)];
      b = b < 0 ? d : std::min(b, d);
    }
  }
  long long cells = 1;
  for (int k = 0; k < nvars; ++k) {
    if (box[static_cast<size_t>(k)] < 0) return std::nullopt;
    cells *= box[static_cast<size_t>(k)];
    if (cells > 10'000'000) throw SizeGuardError("standard monomial box too large");
  }

  std::vector<int> e(static_cast<size_t>(nvars), 0);
  long long count = 0;
  const std::function<void(int)> walk = [&](int k) {
    // Prune once a leading monomial supported on the fixed prefix divides.
    for (const std::vector<int>& lm : lms) {
      bool applies = true;
      for (int x = 0; x < nvars && applies; ++x) {
        const int need = lm[static_cast<size_t>(x)];
        if (x < k ? need > e[static_cast<size_t>(x)] : need > 0) applies = false;
      }
      if (applies) return;
    }
    if (k == nvars) {
      ++count;
      return;
    }
    for (int d = 0; d < box[static_cast<size_t>(k)]; ++d) {
      e[static_cast<size_t>(k)] = d;
      walk(k + 1);
    }
    e[static_cast<size_t>(k)] = 0;
  };
  walk(0);
  return count;
}

}  // namespace schubert
