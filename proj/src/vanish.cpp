#include "schubert/vanish.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace schubert {

namespace {

using Rat = boost::multiprecision::cpp_rational;
using boost::multiprecision::cpp_int;

IntMatrix zero_matrix(int m) {
  return IntMatrix(static_cast<size_t>(m), std::vector<long long>(static_cast<size_t>(m), 0));
}

// Sign of the mirrored entry tying (i,j) to (m+1-j, m+1-i) inside the
// algebra: +1 exactly for cross-block cells of the symplectic family.
long long mirror_sign(const LieType& t, int i, int j) {
  if (t.family != LieFamily::C) return -1;
  const int n = t.rank;
  const bool cross = (i <= n) != (j <= n);
  return cross ? 1 : -1;
}

}  // namespace

NilpotentData nilpotent_data(const LieType& t) {
  NilpotentData out;
  out.type = t;
  const int m = t.ambient_dim();
  out.ambient = m;

  if (t.family == LieFamily::A) {
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) {
        IntMatrix x = zero_matrix(m);
        x[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] = 1;
        out.upper.push_back(std::move(x));
        out.free_cells.emplace_back(i, j);
      }
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= i; ++j) {
        IntMatrix x = zero_matrix(m);
        x[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] = 1;
        out.lower.push_back(std::move(x));
      }
    return out;
  }

  // Pairs strictly above the antidiagonal, mirror strictly below it.
  const auto paired = [&](int i, int j) {
    IntMatrix x = zero_matrix(m);
    x[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] = 1;
    x[static_cast<size_t>(m - j)][static_cast<size_t>(m - i)] = mirror_sign(t, i, j);
    return x;
  };
  const auto single = [&](int i, int j) {
    IntMatrix x = zero_matrix(m);
    x[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] = 1;
    return x;
  };

  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      if (i + j < m + 1) {
        out.upper.push_back(paired(i, j));
        out.free_cells.emplace_back(i, j);
      } else if (i + j == m + 1 && t.family == LieFamily::C) {
        out.upper.push_back(single(i, j));
        out.free_cells.emplace_back(i, j);
      }
    }
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j < i; ++j) {
      if (i + j < m + 1) {
        out.lower.push_back(paired(i, j));
      } else if (i + j == m + 1 && t.family == LieFamily::C) {
        out.lower.push_back(single(i, j));
      }
    }
  }
  for (int i = 1; i <= t.rank; ++i) {
    IntMatrix h = zero_matrix(m);
    h[static_cast<size_t>(i) - 1][static_cast<size_t>(i) - 1] = 1;
    h[static_cast<size_t>(m - i)][static_cast<size_t>(m - i)] = -1;
    out.lower.push_back(std::move(h));
  }
  return out;
}

namespace {

IntMatrix int_matmul(const IntMatrix& a, const IntMatrix& b) {
  const size_t n = a.size(), m = b[0].size(), k = b.size();
  IntMatrix c(n, std::vector<long long>(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      const long long x = a[i][l];
      if (!x) continue;
      for (size_t j = 0; j < m; ++j) c[i][j] += x * b[l][j];
    }
  return c;
}

IntMatrix int_transpose(const IntMatrix& a) {
  IntMatrix t(a[0].size(), std::vector<long long>(a.size(), 0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

// Nullspace basis of an exact rational matrix (rows x cols).
std::vector<std::vector<Rat>> kernel_basis(std::vector<std::vector<Rat>> a, size_t cols) {
  const size_t rows = a.size();
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rat inv = a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] /= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rat f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<char> is_pivot(cols, 0);
  for (size_t c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<Rat>> out;
  for (size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[c] = 1;
    for (size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -a[k][c];
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<IntMatrix> z_subspace_impl(const IntMatrix& g, const LieType& t) {
  const NilpotentData data = nilpotent_data(t);
  const int m = data.ambient;
  const IntMatrix ginv = int_transpose(g);  // signed monomial matrices are orthogonal

  std::vector<IntMatrix> conj;
  conj.reserve(data.lower.size());
  for (const IntMatrix& l : data.lower) conj.push_back(int_matmul(int_matmul(g, l), ginv));

  // A combination of the conjugated Borel basis lies in the nilradical
  // exactly when its lower-and-diagonal entries all vanish: kernel of the
  // coordinate map onto those cells.
  std::vector<std::pair<int, int>> killed;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= i; ++j) killed.emplace_back(i, j);
  std::vector<std::vector<Rat>> a(killed.size(), std::vector<Rat>(conj.size(), Rat(0)));
  for (size_t k = 0; k < conj.size(); ++k)
    for (size_t c = 0; c < killed.size(); ++c)
      a[c][k] = conj[k][static_cast<size_t>(killed[c].first) - 1]
                       [static_cast<size_t>(killed[c].second) - 1];

  std::vector<IntMatrix> basis;
  for (const std::vector<Rat>& v : kernel_basis(std::move(a), conj.size())) {
    // Clear denominators and divide out the content.
    cpp_int lcm = 1;
    for (const Rat& x : v) {
      const cpp_int d = denominator(x);
      lcm = lcm / gcd(lcm, d) * d;
    }
    std::vector<cpp_int> scaled(v.size());
    cpp_int content = 0;
    for (size_t k = 0; k < v.size(); ++k) {
      scaled[k] = numerator(v[k]) * (lcm / denominator(v[k]));
      content = gcd(content, scaled[k]);
    }
    if (content == 0) continue;
    IntMatrix x = zero_matrix(m);
    for (size_t k = 0; k < v.size(); ++k) {
      if (scaled[k] == 0) continue;
      const cpp_int coef = scaled[k] / content;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          x[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
              static_cast<long long>(coef) * conj[k][static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    for (int i = 0; i < m; ++i)
      for (int j = 0; j <= i; ++j)
        if (x[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0)
          throw std::logic_error("subspace element is not strictly upper triangular");
    basis.push_back(std::move(x));
  }
  return basis;
}

std::map<std::string, std::vector<IntMatrix>>& z_cache() {
  static std::map<std::string, std::vector<IntMatrix>> cache;
  return cache;
}
std::mutex z_mutex;

template <typename Element>
std::vector<IntMatrix> z_subspace_cached(const Element& w, const LieType& t) {
  const std::string key = t.to_string() + ":" + w.to_string();
  {
    std::lock_guard<std::mutex> lock(z_mutex);
    const auto it = z_cache().find(key);
    if (it != z_cache().end()) return it->second;
  }
  std::vector<IntMatrix> basis = z_subspace_impl(matrix_representative(w, t), t);
  std::lock_guard<std::mutex> lock(z_mutex);
  return z_cache().emplace(key, std::move(basis)).first->second;
}

}  // namespace

std::vector<IntMatrix> z_subspace(const Permutation& w, const LieType& t) {
  return z_subspace_cached(w.padded(t.rank), t);
}

std::vector<IntMatrix> z_subspace(const SignedPermutation& w, const LieType& t) {
  return z_subspace_cached(w, t);
}

FpMatrix random_unipotent(const LieType& t, std::uint64_t p, std::mt19937_64& rng) {
  const NilpotentData data = nilpotent_data(t);
  const size_t m = static_cast<size_t>(data.ambient);
  std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
  FpMatrix M(m, m, p);
  for (const IntMatrix& b : data.upper) {
    const std::uint64_t c = coef(rng);
    if (!c) continue;
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) {
        if (!b[i][j]) continue;
        const std::uint64_t e = b[i][j] > 0 ? c : p - c;
        M.at(i, j) = add_mod(M.at(i, j), e, p);
      }
  }
  const FpMatrix eye = FpMatrix::identity(m, p);
  return (eye + M).inverse() * (eye - M);
}

const char* vanish_tag_name(VanishTag tag) {
  switch (tag) {
    case VanishTag::ZeroCertified: return "zero-certified";
    case VanishTag::NonzeroCertified: return "nonzero-certified";
    case VanishTag::ZeroWhp: return "zero-whp";
  }
  return "?";
}

namespace {

FpMatrix reduce_mod(const IntMatrix& x, std::uint64_t p) {
  FpMatrix out(x.size(), x[0].size(), p);
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = 0; j < x[0].size(); ++j) {
      long long e = x[i][j] % static_cast<long long>(p);
      if (e < 0) e += static_cast<long long>(p);
      out.at(i, j) = static_cast<std::uint64_t>(e);
    }
  return out;
}

VanishVerdict vanish_test_impl(int lu, int lv, int lw, const std::vector<IntMatrix>& zu,
                               const std::vector<IntMatrix>& zv, const std::vector<IntMatrix>& zt,
                               const LieType& t, const VanishOptions& opt) {
  if (opt.prime < 3 || opt.prime % 2 == 0 || !is_prime_u64(opt.prime) ||
      opt.prime >= (1ull << 62))
    throw std::invalid_argument("modulus must be an odd prime below 2^62");
  if (opt.trials < 1) throw std::invalid_argument("at least one trial required");

  const int dim = t.positive_roots();
  const int lt = dim - lw;
  if (lu + lv + lt < dim)
    return {VanishTag::ZeroCertified, "combined lengths fall below the nilradical dimension", 0, 0};
  if (lu + lv != lw)
    return {VanishTag::ZeroCertified, "lengths violate the grading", 0, 0};

  const NilpotentData data = nilpotent_data(t);
  const size_t n_dim = data.upper.size();
  if (zu.size() + zv.size() + zt.size() != static_cast<size_t>(lu + lv + lt))
    throw std::logic_error("attracting subspace dimension disagrees with length");
  std::mt19937_64 rng(opt.seed);
  for (int trial = 1; trial <= opt.trials; ++trial) {
    FpMatrix stack(static_cast<size_t>(lu + lv + lt), n_dim, opt.prime);
    size_t row = 0;
    for (const auto* z : {&zu, &zv, &zt}) {
      const FpMatrix g = random_unipotent(t, opt.prime, rng);
      const FpMatrix ginv = g.inverse();
      for (const IntMatrix& x : *z) {
        const FpMatrix c = g * reduce_mod(x, opt.prime) * ginv;
        for (size_t k = 0; k < n_dim; ++k)
          stack.at(row, k) = c.at(static_cast<size_t>(data.free_cells[k].first) - 1,
                                  static_cast<size_t>(data.free_cells[k].second) - 1);
        ++row;
      }
    }
    if (stack.rank() == n_dim) {
      std::ostringstream why;
      why << "full-rank witness at trial " << trial;
      return {VanishTag::NonzeroCertified, why.str(), trial, opt.prime};
    }
  }
  std::ostringstream why;
  why << "no spanning witness in " << opt.trials << " trials";
  return {VanishTag::ZeroWhp, why.str(), opt.trials, opt.prime};
}

}  // namespace

VanishVerdict vanish_test(const Permutation& u, const Permutation& v, const Permutation& w,
                          const LieType& t, const VanishOptions& opt) {
  if (t.family != LieFamily::A)
    throw std::invalid_argument("signed types take signed permutations");
  if (u.trimmed().size() > t.rank || v.trimmed().size() > t.rank || w.trimmed().size() > t.rank)
    throw std::invalid_argument("rank too small for the given permutations");
  // With representatives acting by e_j -> e_{w(j)}, the spanning criterion
  // below holds for the subspaces attached to the inverse elements; see the
  // orientation notes in the header.
  const Permutation comp = longest_element(t.rank) * w.padded(t.rank);
  return vanish_test_impl(inversions(u), inversions(v), inversions(w),
                          z_subspace(u.inverse(), t), z_subspace(v.inverse(), t),
                          z_subspace(comp.inverse(), t), t, opt);
}

VanishVerdict vanish_test(const SignedPermutation& u, const SignedPermutation& v,
                          const SignedPermutation& w, const LieType& t,
                          const VanishOptions& opt) {
  if (u.size() != t.rank || v.size() != t.rank || w.size() != t.rank)
    throw std::invalid_argument("rank mismatch");
  const SignedPermutation comp = longest_element_signed(t) * w;
  return vanish_test_impl(length(u, t), length(v, t), length(w, t),
                          z_subspace(u.inverse(), t), z_subspace(v.inverse(), t),
                          z_subspace(comp.inverse(), t), t, opt);
}

}  // namespace schubert
