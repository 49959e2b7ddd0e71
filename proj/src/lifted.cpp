// Construction and (de)serialization of the lifted polynomial systems.
//
// Emission orders are part of the format and kept deterministic:
//
//   Cell, type A:     flag block of u, then flag block of v.
//   Cell, types C/D:  flag u, flag v, isotropy of the chart matrix,
//                     isotropy of pi, isotropy of rho (every matrix
//                     entry, row-major, including identical zeros so the
//                     tallies are exact), Cayley identity for pi, Cayley
//                     identity for rho.  Type D appends the determinant
//                     node and validates sign parity.
//   Borel, type A:    six inverse-witness equations (one per triangular
//                     factor, order P1 P2 P3 Q1 Q2 Q3), then the two
//                     matrix identities entry by entry.
//   Borel, B/C/D:     Cayley for pi, Cayley for rho, isotropy for the
//                     six factors (P1 P2 P3 Q1 Q2 Q3, with the middle
//                     entry pinned to 1 in the odd orthogonal family),
//                     then the two matrix identities.
//
// The symplectic Cayley convention in the cell formulation is
// pi (I + Y) = I - Y with Y weakly above the antidiagonal; the even
// orthogonal one is (I + Y) pi = I - Y with Y strictly above.  The
// Borel formulation uses (I + Y) pi = I - Y throughout.

#include "schubert/lifted.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

namespace schubert {

namespace {

using PolyMatrix = std::vector<std::vector<IntPolynomial>>;

PolyMatrix zero_pmat(int r, int c) {
  return PolyMatrix(static_cast<size_t>(r), std::vector<IntPolynomial>(static_cast<size_t>(c)));
}

PolyMatrix pmat_from_int(const IntMatrix& m) {
  PolyMatrix out = zero_pmat(static_cast<int>(m.size()), static_cast<int>(m[0].size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j)
      if (m[i][j] != 0) out[i][j] = IntPolynomial::constant(m[i][j]);
  return out;
}

PolyMatrix pmat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  const size_t r = a.size(), k = b.size(), c = b[0].size();
  PolyMatrix out = zero_pmat(static_cast<int>(r), static_cast<int>(c));
  for (size_t i = 0; i < r; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (size_t j = 0; j < c; ++j) {
        if (b[l][j].is_zero()) continue;
        out[i][j] += a[i][l] * b[l][j];
      }
    }
  return out;
}

PolyMatrix pmat_transpose(const PolyMatrix& a) {
  PolyMatrix out = zero_pmat(static_cast<int>(a[0].size()), static_cast<int>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  return out;
}

// Negative subscripts are rendered with an m prefix ("a2_m1") so symbol
// names never contain a minus sign and stay single tokens in the text
// format.
std::string signed_token(int j) {
  return j < 0 ? "m" + std::to_string(-j) : std::to_string(j);
}

// y11 for single-digit subscripts, y10_12 beyond.
std::string grid_name(char base, int r, int c) {
  std::string out(1, base);
  if (r <= 9 && c <= 9) {
    out += std::to_string(r);
    out += std::to_string(c);
  } else {
    out += std::to_string(r);
    out += '_';
    out += std::to_string(c);
  }
  return out;
}

std::vector<IntPolynomial> pattern_column(const StiefelPattern& pat, int j) {
  std::vector<IntPolynomial> col(static_cast<size_t>(pat.rows));
  for (int i = 0; i < pat.rows; ++i) {
    const PatternCell& cell = pat.cells[static_cast<size_t>(i)][static_cast<size_t>(j - 1)];
    if (cell.tag == CellTag::One)
      col[static_cast<size_t>(i)] = IntPolynomial::constant(1);
    else if (cell.tag == CellTag::Var)
      col[static_cast<size_t>(i)] = IntPolynomial::variable(cell.var);
  }
  return col;
}

PolyMatrix pattern_matrix(const StiefelPattern& pat) {
  PolyMatrix out = zero_pmat(pat.rows, pat.cols);
  for (int i = 0; i < pat.rows; ++i)
    for (int j = 0; j < pat.cols; ++j) {
      const PatternCell& cell = pat.cells[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (cell.tag == CellTag::One)
        out[static_cast<size_t>(i)][static_cast<size_t>(j)] = IntPolynomial::constant(1);
      else if (cell.tag == CellTag::Var)
        out[static_cast<size_t>(i)][static_cast<size_t>(j)] = IntPolynomial::variable(cell.var);
    }
  return out;
}

// G J G^T - J = 0, every entry row-major (zeros included: downstream
// tallies count emitted entries, not surviving ones).
void emit_isotropy(const PolyMatrix& g, const IntMatrix& j, std::vector<IntPolynomial>& out) {
  const PolyMatrix jp = pmat_from_int(j);
  const PolyMatrix m = pmat_mul(pmat_mul(g, jp), pmat_transpose(g));
  for (size_t a = 0; a < m.size(); ++a)
    for (size_t b = 0; b < m[a].size(); ++b) out.push_back(m[a][b] - jp[a][b]);
}

// Cayley identity relating a group element P to a Lie-algebra element Y:
// (I+Y) P = I-Y when y_on_left, P (I+Y) = I-Y otherwise.  All entries.
void emit_cayley(const PolyMatrix& y, const PolyMatrix& p, bool y_on_left,
                 std::vector<IntPolynomial>& out) {
  const size_t m = y.size();
  PolyMatrix eye_plus = y;
  for (size_t i = 0; i < m; ++i) eye_plus[i][i] += IntPolynomial::constant(1);
  const PolyMatrix prod = y_on_left ? pmat_mul(eye_plus, p) : pmat_mul(p, eye_plus);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      IntPolynomial eq = prod[i][j] + y[i][j];
      if (i == j) eq -= IntPolynomial::constant(1);
      out.push_back(eq);
    }
}

// Parametric Lie-algebra matrix: one parameter per cell weakly above the
// antidiagonal (symplectic) or strictly above (orthogonal families), the
// mirror cell filled in with the sign the form dictates.  Consumes ids
// first_id, first_id+1, ... in row-major cell order and checks it used
// exactly `expect` of them.
PolyMatrix skew_param_matrix(int m, int n, LieFamily fam, int first_id, int expect) {
  PolyMatrix y = zero_pmat(m, m);
  int next = first_id;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      const bool stored = fam == LieFamily::C ? i + j <= m + 1 : i + j <= m;
      if (!stored) continue;
      const IntPolynomial var = IntPolynomial::variable(next++);
      y[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = var;
      if (i + j == m + 1) continue;  // symplectic antidiagonal: self-mirrored
      const bool cross = (i <= n) != (j <= n);
      const BigInt sign = (fam == LieFamily::C && cross) ? 1 : -1;
      y[static_cast<size_t>(m - j)][static_cast<size_t>(m - i)] = var * sign;
    }
  if (next - first_id != expect)
    throw std::logic_error("parameter matrix consumed an unexpected id count");
  return y;
}

// Realization of a signed element inside the symmetric group on the
// 2n rows of the matrix model.
Permutation realize_in_sym(const SignedPermutation& w, const LieType& t) {
  const int m = t.ambient_dim();
  std::vector<int> vals(static_cast<size_t>(m));
  for (int j = 1; j <= w.size(); ++j) {
    vals[static_cast<size_t>(signed_row(j, t) - 1)] = signed_row(w(j), t);
    vals[static_cast<size_t>(signed_row(-j, t) - 1)] = signed_row(w(-j), t);
  }
  return Permutation(vals);
}

std::string family_letter(LieFamily fam) {
  switch (fam) {
    case LieFamily::A: return "A";
    case LieFamily::B: return "B";
    case LieFamily::C: return "C";
    default: return "D";
  }
}

}  // namespace

const char* formulation_name(Formulation f) {
  return f == Formulation::Cell ? "cell" : "borel";
}

Formulation parse_formulation(const std::string& text) {
  std::string low;
  for (char c : text) low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (low == "cell") return Formulation::Cell;
  if (low == "borel") return Formulation::Borel;
  throw std::invalid_argument("formulation must be 'cell' or 'borel'");
}

const std::string& LiftedSystem::symbol_name(int id) const {
  const int nv = static_cast<int>(variables.size());
  if (id >= 1 && id <= nv) return variables[static_cast<size_t>(id - 1)];
  const int k = id - nv;
  if (k >= 1 && k <= static_cast<int>(parameters.size()))
    return parameters[static_cast<size_t>(k - 1)];
  throw std::out_of_range("symbol id " + std::to_string(id) + " out of range");
}

int LiftedSystem::symbol_id(const std::string& name) const {
  for (size_t k = 0; k < variables.size(); ++k)
    if (variables[k] == name) return static_cast<int>(k) + 1;
  for (size_t k = 0; k < parameters.size(); ++k)
    if (parameters[k] == name) return static_cast<int>(variables.size() + k) + 1;
  return 0;
}

StiefelPattern stiefel_pattern(const Permutation& w, int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("pattern dimensions must be positive");
  StiefelPattern pat;
  pat.rows = rows;
  pat.cols = cols;
  pat.cells.assign(static_cast<size_t>(rows), std::vector<PatternCell>(static_cast<size_t>(cols)));
  const Permutation wi = w.inverse();
  for (int j = 1; j <= cols; ++j) {
    const int pivot = w(j);
    if (pivot > rows)
      throw std::invalid_argument("pattern has too few rows for a column pivot");
    for (int i = 1; i <= rows; ++i) {
      PatternCell& cell = pat.cells[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
      if (i == pivot)
        cell.tag = CellTag::One;
      else if (i < pivot || wi(i) < j)
        cell.tag = CellTag::Zero;
      else
        cell.tag = CellTag::Var;
    }
  }
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) {
      PatternCell& cell = pat.cells[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (cell.tag == CellTag::Var) cell.var = ++pat.var_count;
    }
  return pat;
}

IntPolynomial expand_determinant(const std::vector<std::vector<IntPolynomial>>& m) {
  const int k = static_cast<int>(m.size());
  if (k == 0) return IntPolynomial::constant(1);
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != k)
      throw std::invalid_argument("determinant needs a square matrix");
  if (k > 6) throw SizeGuardError("determinant expansion refused beyond 6x6");
  std::function<IntPolynomial(int, const std::vector<int>&)> go =
      [&](int row, const std::vector<int>& cols) -> IntPolynomial {
    if (cols.empty()) return IntPolynomial::constant(1);
    IntPolynomial acc;
    for (size_t c = 0; c < cols.size(); ++c) {
      const IntPolynomial& entry = m[static_cast<size_t>(row)][static_cast<size_t>(cols[c])];
      if (entry.is_zero()) continue;
      std::vector<int> rest;
      rest.reserve(cols.size() - 1);
      for (size_t x = 0; x < cols.size(); ++x)
        if (x != c) rest.push_back(cols[x]);
      const IntPolynomial contrib = entry * go(row + 1, rest);
      if (c % 2 == 0)
        acc += contrib;
      else
        acc -= contrib;
    }
    return acc;
  };
  std::vector<int> cols(static_cast<size_t>(k));
  for (int j = 0; j < k; ++j) cols[static_cast<size_t>(j)] = j;
  return go(0, cols);
}

// ---------------------------------------------------------------------------
// Cell formulation, type A.

LiftedSystem build_type_a(const Permutation& u0, const Permutation& v0, const Permutation& t0) {
  const int n = std::max({u0.size(), v0.size(), t0.size(), 1});
  const Permutation u = u0.padded(n), v = v0.padded(n), t = t0.padded(n);

  LiftedSystem sys;
  sys.lie_type = "A";
  sys.formulation = Formulation::Cell;
  sys.u = u.window();
  sys.v = v.window();
  sys.t = t.window();

  int d = 0;
  for (const Permutation* w : {&u, &v, &t})
    for (int i : descent_set(*w)) d = std::max(d, i);
  if (d == 0) return sys;  // identity triple imposes nothing

  const StiefelPattern pat = stiefel_pattern(t, n, d);
  for (int k = 1; k <= pat.var_count; ++k) sys.variables.push_back("x" + std::to_string(k));

  struct Mix {
    int i, j;
  };
  std::vector<Mix> amix, bmix;
  for (int i = 2; i <= d; ++i)
    for (int j = 1; j < i; ++j) {
      if (u(j) < u(i)) amix.push_back({i, j});
      if (v(j) < v(i)) bmix.push_back({i, j});
    }
  const int a_first = static_cast<int>(sys.variables.size()) + 1;
  for (const Mix& mx : amix)
    sys.variables.push_back("a" + std::to_string(mx.i) + "_" + std::to_string(mx.j));
  const int b_first = static_cast<int>(sys.variables.size()) + 1;
  for (const Mix& mx : bmix)
    sys.variables.push_back("b" + std::to_string(mx.i) + "_" + std::to_string(mx.j));

  int yrows = 0, zrows = 0;
  for (int i = 1; i <= d; ++i) {
    yrows = std::max(yrows, u(i) - 1);
    zrows = std::max(zrows, v(i) - 1);
  }
  for (int r = 1; r <= yrows; ++r)
    for (int c = 1; c <= n; ++c) sys.parameters.push_back(grid_name('y', r, c));
  for (int r = 1; r <= zrows; ++r)
    for (int c = 1; c <= n; ++c) sys.parameters.push_back(grid_name('z', r, c));

  const int nv = static_cast<int>(sys.variables.size());
  const auto yparam = [&](int r, int c) { return IntPolynomial::variable(nv + (r - 1) * n + c); };
  const auto zparam = [&](int r, int c) {
    return IntPolynomial::variable(nv + yrows * n + (r - 1) * n + c);
  };

  std::vector<std::vector<IntPolynomial>> col(static_cast<size_t>(d) + 1);
  for (int j = 1; j <= d; ++j) col[static_cast<size_t>(j)] = pattern_column(pat, j);

  const auto emit_flag = [&](const Permutation& w, const std::vector<Mix>& mix, int first_id,
                             const std::function<IntPolynomial(int, int)>& param) {
    for (int i = 1; i <= d; ++i) {
      std::vector<IntPolynomial> g = col[static_cast<size_t>(i)];
      for (size_t k = 0; k < mix.size(); ++k) {
        if (mix[k].i != i) continue;
        const IntPolynomial a = IntPolynomial::variable(first_id + static_cast<int>(k));
        const auto& other = col[static_cast<size_t>(mix[k].j)];
        for (int r = 0; r < n; ++r) g[static_cast<size_t>(r)] += a * other[static_cast<size_t>(r)];
      }
      for (int row = 1; row <= w(i) - 1; ++row) {
        IntPolynomial eq;
        for (int r = 1; r <= n; ++r) eq += param(row, r) * g[static_cast<size_t>(r - 1)];
        sys.equations.push_back(eq);
      }
    }
  };
  emit_flag(u, amix, a_first, yparam);
  emit_flag(v, bmix, b_first, zparam);
  return sys;
}

// ---------------------------------------------------------------------------
// Cell formulation, symplectic and even orthogonal.

namespace {

LiftedSystem build_cell_signed(const SignedPermutation& u, const SignedPermutation& v,
                               const SignedPermutation& t, LieFamily fam) {
  const int n = u.size();
  if (n < 1 || v.size() != n || t.size() != n)
    throw std::invalid_argument("cell systems need three elements of one positive rank");
  if (fam == LieFamily::D)
    for (const SignedPermutation* w : {&u, &v, &t})
      if (negative_count(*w) % 2 != 0)
        throw std::invalid_argument(
            "even orthogonal elements need an even number of sign changes");
  const LieType lt{fam, n};
  const int m = 2 * n;

  LiftedSystem sys;
  sys.lie_type = family_letter(fam);
  sys.formulation = Formulation::Cell;
  sys.u = u.window();
  sys.v = v.window();
  sys.t = t.window();

  const StiefelPattern pat = stiefel_pattern(realize_in_sym(t, lt), m, m);
  for (int k = 1; k <= pat.var_count; ++k) sys.variables.push_back("x" + std::to_string(k));

  std::vector<int> idx;
  for (int k = -n; k <= n; ++k)
    if (k != 0) idx.push_back(k);

  struct Mix {
    int i, j;
  };
  std::vector<Mix> amix, bmix;
  for (int i : idx)
    for (int j : idx) {
      if (j >= i) break;
      if (u(j) < u(i)) amix.push_back({i, j});
      if (v(j) < v(i)) bmix.push_back({i, j});
    }
  const int a_first = static_cast<int>(sys.variables.size()) + 1;
  for (const Mix& mx : amix)
    sys.variables.push_back("a" + signed_token(mx.i) + "_" + signed_token(mx.j));
  const int b_first = static_cast<int>(sys.variables.size()) + 1;
  for (const Mix& mx : bmix)
    sys.variables.push_back("b" + signed_token(mx.i) + "_" + signed_token(mx.j));

  const int p_first = static_cast<int>(sys.variables.size()) + 1;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      sys.variables.push_back("p" + std::to_string(i) + "_" + std::to_string(j));
  const int r_first = static_cast<int>(sys.variables.size()) + 1;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      sys.variables.push_back("r" + std::to_string(i) + "_" + std::to_string(j));

  const int tcount = fam == LieFamily::C ? 2 * n * n + n : 2 * n * n - n;
  for (int k = 1; k <= tcount; ++k) sys.parameters.push_back("y" + std::to_string(k));
  for (int k = 1; k <= tcount; ++k) sys.parameters.push_back("z" + std::to_string(k));

  const int nv = static_cast<int>(sys.variables.size());
  const PolyMatrix ymat = skew_param_matrix(m, n, fam, nv + 1, tcount);
  const PolyMatrix zmat = skew_param_matrix(m, n, fam, nv + tcount + 1, tcount);

  const auto entry = [&](int first, int i, int j) {
    return IntPolynomial::variable(first + (i - 1) * m + (j - 1));
  };
  std::vector<std::vector<IntPolynomial>> col(static_cast<size_t>(m) + 1);
  for (int j = 1; j <= m; ++j) col[static_cast<size_t>(j)] = pattern_column(pat, j);

  const auto emit_flag = [&](const SignedPermutation& w, const std::vector<Mix>& mix,
                             int first_id, int mat_first) {
    for (int i : idx) {
      std::vector<IntPolynomial> g = col[static_cast<size_t>(signed_row(i, lt))];
      for (size_t k = 0; k < mix.size(); ++k) {
        if (mix[k].i != i) continue;
        const IntPolynomial a = IntPolynomial::variable(first_id + static_cast<int>(k));
        const auto& other = col[static_cast<size_t>(signed_row(mix[k].j, lt))];
        for (int r = 0; r < m; ++r) g[static_cast<size_t>(r)] += a * other[static_cast<size_t>(r)];
      }
      for (int row = 1; row <= signed_row(w(i), lt) - 1; ++row) {
        IntPolynomial eq;
        for (int c = 1; c <= m; ++c) eq += entry(mat_first, row, c) * g[static_cast<size_t>(c - 1)];
        sys.equations.push_back(eq);
      }
    }
  };
  emit_flag(u, amix, a_first, p_first);
  emit_flag(v, bmix, b_first, r_first);

  const IntMatrix j = form_matrix(lt);
  PolyMatrix pmat = zero_pmat(m, m), rmat = zero_pmat(m, m);
  for (int i = 1; i <= m; ++i)
    for (int c = 1; c <= m; ++c) {
      pmat[static_cast<size_t>(i - 1)][static_cast<size_t>(c - 1)] = entry(p_first, i, c);
      rmat[static_cast<size_t>(i - 1)][static_cast<size_t>(c - 1)] = entry(r_first, i, c);
    }
  emit_isotropy(pattern_matrix(pat), j, sys.equations);
  emit_isotropy(pmat, j, sys.equations);
  emit_isotropy(rmat, j, sys.equations);

  const bool y_on_left = fam == LieFamily::D;
  emit_cayley(ymat, pmat, y_on_left, sys.equations);
  emit_cayley(zmat, rmat, y_on_left, sys.equations);

  if (fam == LieFamily::D) {
    DetEquation det;
    det.matrix = pattern_matrix(pat);
    det.equals = 1;
    sys.det_equations.push_back(det);
  }
  return sys;
}

}  // namespace

LiftedSystem build_type_c(const SignedPermutation& u, const SignedPermutation& v,
                          const SignedPermutation& t) {
  return build_cell_signed(u, v, t, LieFamily::C);
}

// The odd orthogonal cell system coincides with the symplectic one: the
// two groups share Weyl combinatorics and the coefficient in question,
// so the smaller symplectic model is used with the label changed.
LiftedSystem build_type_b(const SignedPermutation& u, const SignedPermutation& v,
                          const SignedPermutation& t) {
  LiftedSystem sys = build_cell_signed(u, v, t, LieFamily::C);
  sys.lie_type = "B";
  return sys;
}

LiftedSystem build_type_d(const SignedPermutation& u, const SignedPermutation& v,
                          const SignedPermutation& t) {
  return build_cell_signed(u, v, t, LieFamily::D);
}

// ---------------------------------------------------------------------------
// Borel formulation.

LiftedSystem build_uniform(const Permutation& u0, const Permutation& v0, const Permutation& w0,
                           const LieType& lt) {
  if (lt.family != LieFamily::A)
    throw std::invalid_argument("unsigned elements build type A systems");
  const int n = lt.rank;
  if (u0.trimmed().size() > n || v0.trimmed().size() > n || w0.trimmed().size() > n)
    throw std::invalid_argument("window sizes must fit the rank");
  const Permutation u = u0.trimmed().padded(n);
  const Permutation v = v0.trimmed().padded(n);
  const Permutation w = w0.trimmed().padded(n);
  const Permutation comp = longest_element(n) * w;

  LiftedSystem sys;
  sys.lie_type = "A";
  sys.formulation = Formulation::Borel;
  sys.u = u.window();
  sys.v = v.window();
  sys.t = comp.padded(n).window();

  struct Factor {
    PolyMatrix mat;
    IntPolynomial aux;
    std::vector<IntPolynomial> diag;
  };
  const auto add_factor = [&](const std::string& prefix, bool lower) {
    Factor f;
    f.mat = zero_pmat(n, n);
    for (int i = 1; i <= n; ++i) {
      const int jlo = lower ? 1 : i;
      const int jhi = lower ? i : n;
      for (int j = jlo; j <= jhi; ++j) {
        sys.variables.push_back(prefix + "_" + std::to_string(i) + "_" + std::to_string(j));
        const IntPolynomial var =
            IntPolynomial::variable(static_cast<int>(sys.variables.size()));
        f.mat[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = var;
        if (i == j) f.diag.push_back(var);
      }
    }
    sys.variables.push_back(prefix + "_b");
    f.aux = IntPolynomial::variable(static_cast<int>(sys.variables.size()));
    return f;
  };
  const Factor p1 = add_factor("P1", true);
  const Factor p2 = add_factor("P2", true);
  const Factor p3 = add_factor("P3", true);
  const Factor q1 = add_factor("Q1", false);
  const Factor q2 = add_factor("Q2", false);
  const Factor q3 = add_factor("Q3", false);

  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) sys.parameters.push_back(grid_name('y', r, c));
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) sys.parameters.push_back(grid_name('z', r, c));
  const int nv = static_cast<int>(sys.variables.size());
  PolyMatrix pimat = zero_pmat(n, n), rhomat = zero_pmat(n, n);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) {
      pimat[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] =
          IntPolynomial::variable(nv + (r - 1) * n + c);
      rhomat[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] =
          IntPolynomial::variable(nv + n * n + (r - 1) * n + c);
    }

  // Invertibility witnesses: aux times the diagonal product equals 1.
  for (const Factor* f : {&p1, &p2, &p3, &q1, &q2, &q3}) {
    IntPolynomial prod = f->aux;
    for (const IntPolynomial& dvar : f->diag) prod = prod * dvar;
    sys.equations.push_back(prod - IntPolynomial::constant(1));
  }

  const PolyMatrix udot = pmat_from_int(matrix_representative(u, lt));
  const PolyMatrix vdot = pmat_from_int(matrix_representative(v, lt));
  const PolyMatrix tdot = pmat_from_int(matrix_representative(comp, lt));
  const PolyMatrix lhs = pmat_mul(pmat_mul(p1.mat, udot), q1.mat);
  const PolyMatrix mid = pmat_mul(pimat, pmat_mul(pmat_mul(p2.mat, vdot), q2.mat));
  const PolyMatrix rhs = pmat_mul(rhomat, pmat_mul(pmat_mul(p3.mat, tdot), q3.mat));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      sys.equations.push_back(lhs[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                              mid[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      sys.equations.push_back(lhs[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                              rhs[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  return sys;
}

LiftedSystem build_uniform(const SignedPermutation& u, const SignedPermutation& v,
                           const SignedPermutation& w, const LieType& lt) {
  if (lt.family == LieFamily::A)
    throw std::invalid_argument("signed elements need type B, C, or D");
  const int n = lt.rank;
  if (u.size() != n || v.size() != n || w.size() != n)
    throw std::invalid_argument("window sizes must match the rank");
  if (lt.family == LieFamily::D)
    for (const SignedPermutation* s : {&u, &v, &w})
      if (negative_count(*s) % 2 != 0)
        throw std::invalid_argument(
            "even orthogonal elements need an even number of sign changes");
  const int m = lt.ambient_dim();
  const SignedPermutation comp = longest_element_signed(lt) * w;

  LiftedSystem sys;
  sys.lie_type = family_letter(lt.family);
  sys.formulation = Formulation::Borel;
  sys.u = u.window();
  sys.v = v.window();
  sys.t = comp.window();

  const auto add_square = [&](const std::string& prefix) {
    PolyMatrix mat = zero_pmat(m, m);
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) {
        sys.variables.push_back(prefix + std::to_string(i) + "_" + std::to_string(j));
        mat[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
            IntPolynomial::variable(static_cast<int>(sys.variables.size()));
      }
    return mat;
  };
  const PolyMatrix pimat = add_square("p");
  const PolyMatrix rhomat = add_square("r");

  const auto add_triangular = [&](const std::string& prefix, bool lower) {
    PolyMatrix mat = zero_pmat(m, m);
    for (int i = 1; i <= m; ++i) {
      const int jlo = lower ? 1 : i;
      const int jhi = lower ? i : m;
      for (int j = jlo; j <= jhi; ++j) {
        sys.variables.push_back(prefix + "_" + std::to_string(i) + "_" + std::to_string(j));
        mat[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
            IntPolynomial::variable(static_cast<int>(sys.variables.size()));
      }
    }
    return mat;
  };
  const PolyMatrix p1 = add_triangular("P1", true);
  const PolyMatrix p2 = add_triangular("P2", true);
  const PolyMatrix p3 = add_triangular("P3", true);
  const PolyMatrix q1 = add_triangular("Q1", false);
  const PolyMatrix q2 = add_triangular("Q2", false);
  const PolyMatrix q3 = add_triangular("Q3", false);

  const int tcount = lt.family == LieFamily::D ? 2 * n * n - n : 2 * n * n + n;
  for (int k = 1; k <= tcount; ++k) sys.parameters.push_back("y" + std::to_string(k));
  for (int k = 1; k <= tcount; ++k) sys.parameters.push_back("z" + std::to_string(k));
  const int nv = static_cast<int>(sys.variables.size());
  // The odd orthogonal algebra is strictly-above-antidiagonal in the same
  // way as the even one; only the symplectic family keeps its
  // antidiagonal cells.
  const LieFamily yfam = lt.family == LieFamily::C ? LieFamily::C : LieFamily::D;
  const PolyMatrix ymat = skew_param_matrix(m, n, yfam, nv + 1, tcount);
  const PolyMatrix zmat = skew_param_matrix(m, n, yfam, nv + tcount + 1, tcount);

  emit_cayley(ymat, pimat, true, sys.equations);
  emit_cayley(zmat, rhomat, true, sys.equations);

  const IntMatrix j = form_matrix(lt);
  const int center = n + 1;  // fixed middle row/column, odd orthogonal only
  for (const PolyMatrix* f : {&p1, &p2, &p3}) {
    emit_isotropy(*f, j, sys.equations);
    if (lt.family == LieFamily::B)
      sys.equations.push_back(
          (*f)[static_cast<size_t>(center - 1)][static_cast<size_t>(center - 1)] -
          IntPolynomial::constant(1));
  }
  for (const PolyMatrix* f : {&q1, &q2, &q3}) {
    emit_isotropy(pmat_transpose(*f), j, sys.equations);
    if (lt.family == LieFamily::B)
      sys.equations.push_back(
          (*f)[static_cast<size_t>(center - 1)][static_cast<size_t>(center - 1)] -
          IntPolynomial::constant(1));
  }

  const PolyMatrix udot = pmat_from_int(matrix_representative(u, lt));
  const PolyMatrix vdot = pmat_from_int(matrix_representative(v, lt));
  const PolyMatrix tdot = pmat_from_int(matrix_representative(comp, lt));
  const PolyMatrix lhs = pmat_mul(pmat_mul(p1, udot), q1);
  const PolyMatrix mid = pmat_mul(pimat, pmat_mul(pmat_mul(p2, vdot), q2));
  const PolyMatrix rhs = pmat_mul(rhomat, pmat_mul(pmat_mul(p3, tdot), q3));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      sys.equations.push_back(lhs[static_cast<size_t>(a)][static_cast<size_t>(b)] -
                              mid[static_cast<size_t>(a)][static_cast<size_t>(b)]);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      sys.equations.push_back(lhs[static_cast<size_t>(a)][static_cast<size_t>(b)] -
                              rhs[static_cast<size_t>(a)][static_cast<size_t>(b)]);
  return sys;
}

LiftedSystem coefficient_system(const Permutation& u, const Permutation& v,
                                const Permutation& w, const LieType& t, Formulation form) {
  if (t.family != LieFamily::A)
    throw std::invalid_argument("unsigned elements need type A");
  const int n = t.rank;
  if (u.trimmed().size() > n || v.trimmed().size() > n || w.trimmed().size() > n)
    throw std::invalid_argument("window sizes must fit the rank");
  if (form == Formulation::Borel) return build_uniform(u, v, w, t);
  const Permutation target = longest_element(n) * w.trimmed().padded(n);
  return build_type_a(u.trimmed().padded(n), v.trimmed().padded(n), target.padded(n));
}

LiftedSystem coefficient_system(const SignedPermutation& u, const SignedPermutation& v,
                                const SignedPermutation& w, const LieType& t,
                                Formulation form) {
  if (t.family == LieFamily::A)
    throw std::invalid_argument("signed elements need type B, C, or D");
  if (u.size() != t.rank || v.size() != t.rank || w.size() != t.rank)
    throw std::invalid_argument("window sizes must match the rank");
  if (form == Formulation::Borel) return build_uniform(u, v, w, t);
  const SignedPermutation target = longest_element_signed(t) * w;
  switch (t.family) {
    case LieFamily::B: return build_type_b(u, v, target);
    case LieFamily::C: return build_type_c(u, v, target);
    default: return build_type_d(u, v, target);
  }
}

// ---------------------------------------------------------------------------
// Serialization.

namespace {

using nlohmann::json;

long long to_int64(const BigInt& c) {
  static const BigInt lo = std::numeric_limits<long long>::min();
  static const BigInt hi = std::numeric_limits<long long>::max();
  if (c < lo || c > hi) throw std::logic_error("coefficient exceeds the 64-bit range");
  return c.convert_to<long long>();
}

json term_to_json(const Monomial& mono, const BigInt& c, const LiftedSystem& s) {
  json m = json::object();
  for (const auto& [idx, exp] : mono.factors()) m[s.symbol_name(idx)] = exp;
  return json{{"c", to_int64(c)}, {"m", std::move(m)}};
}

json poly_to_json(const IntPolynomial& p, const LiftedSystem& s) {
  json arr = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    arr.push_back(term_to_json(it->first, it->second, s));
  return arr;
}

json single_term_to_json(const IntPolynomial& p, const LiftedSystem& s) {
  if (p.is_zero()) return json{{"c", 0}, {"m", json::object()}};
  if (p.term_count() != 1)
    throw std::logic_error("determinant entries must be single terms");
  const auto it = p.terms().begin();
  return term_to_json(it->first, it->second, s);
}

std::string to_json_text(const LiftedSystem& s) {
  json j;
  j["lie_type"] = s.lie_type;
  j["formulation"] = formulation_name(s.formulation);
  j["u"] = s.u;
  j["v"] = s.v;
  j["t"] = s.t;
  j["variables"] = s.variables;
  j["parameters"] = s.parameters;
  json eqs = json::array();
  for (const IntPolynomial& eq : s.equations) eqs.push_back(poly_to_json(eq, s));
  j["equations"] = std::move(eqs);
  json dets = json::array();
  for (const DetEquation& de : s.det_equations) {
    json rows = json::array();
    for (const auto& row : de.matrix) {
      json r = json::array();
      for (const IntPolynomial& cell : row) r.push_back(single_term_to_json(cell, s));
      rows.push_back(std::move(r));
    }
    dets.push_back(json{{"matrix", std::move(rows)}, {"equals", de.equals}});
  }
  j["det_equations"] = std::move(dets);
  return j.dump(2) + "\n";
}

std::string to_plain_text(const LiftedSystem& s) {
  std::ostringstream out;
  out << "lie_type: " << s.lie_type << "\n";
  out << "formulation: " << formulation_name(s.formulation) << "\n";
  const auto window_line = [&](const char* key, const std::vector<int>& w) {
    out << key << ":";
    for (int x : w) out << ' ' << x;
    out << "\n";
  };
  window_line("u", s.u);
  window_line("v", s.v);
  window_line("t", s.t);
  const auto name_line = [&](const char* key, const std::vector<std::string>& names) {
    out << key << ":";
    for (const std::string& nm : names) out << ' ' << nm;
    out << "\n";
  };
  name_line("variables", s.variables);
  name_line("parameters", s.parameters);
  const auto name = [&](int id) { return s.symbol_name(id); };
  out << "equations:\n";
  for (const IntPolynomial& eq : s.equations) out << eq.to_string(name) << " = 0\n";
  out << "det_equations:\n";
  for (const DetEquation& de : s.det_equations) {
    out << "det [";
    for (size_t i = 0; i < de.matrix.size(); ++i) {
      if (i) out << "; ";
      for (size_t j = 0; j < de.matrix[i].size(); ++j) {
        if (j) out << ", ";
        out << de.matrix[i][j].to_string(name);
      }
    }
    out << "] = " << de.equals << "\n";
  }
  return out.str();
}

// --- parsing helpers (shared by both input formats) ------------------------

void check_symbol_name(const std::string& nm) {
  if (nm.empty() || !std::isalpha(static_cast<unsigned char>(nm[0])))
    throw std::invalid_argument("symbol '" + nm + "' must start with a letter");
  for (char c : nm)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
      throw std::invalid_argument("symbol '" + nm + "' may use letters, digits, and '_' only");
}

std::map<std::string, int> symbol_table(const LiftedSystem& s) {
  std::map<std::string, int> tab;
  int id = 0;
  for (const auto& list : {s.variables, s.parameters})
    for (const std::string& nm : list) {
      check_symbol_name(nm);
      if (!tab.emplace(nm, ++id).second)
        throw std::invalid_argument("duplicate symbol '" + nm + "'");
    }
  return tab;
}

// Polynomial in the to_string(name) surface syntax over declared symbols.
IntPolynomial parse_named_poly(const std::string& text, const std::map<std::string, int>& sym,
                               const std::string& where) {
  const auto fail = [&](const std::string& msg) {
    throw std::invalid_argument(where + ": " + msg);
  };
  size_t i = 0;
  const auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  IntPolynomial out;
  bool first = true;
  skip();
  if (i >= text.size()) fail("empty polynomial");
  while (true) {
    skip();
    if (i >= text.size()) break;
    int sign = 1;
    if (first) {
      if (text[i] == '-') {
        sign = -1;
        ++i;
      } else if (text[i] == '+') {
        ++i;
      }
    } else {
      if (text[i] == '+')
        sign = 1;
      else if (text[i] == '-')
        sign = -1;
      else
        fail("expected '+' or '-' between terms");
      ++i;
    }
    skip();
    BigInt coef = sign;
    Monomial mono;
    bool any_factor = false;
    while (true) {
      skip();
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        size_t s0 = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        coef *= BigInt(text.substr(s0, i - s0));
        any_factor = true;
      } else if (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) {
        size_t s0 = i;
        ++i;
        while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                                   text[i] == '_'))
          ++i;
        const std::string nm = text.substr(s0, i - s0);
        const auto it = sym.find(nm);
        if (it == sym.end()) fail("unknown symbol '" + nm + "'");
        int exp = 1;
        skip();
        if (i < text.size() && text[i] == '^') {
          ++i;
          skip();
          size_t e0 = i;
          while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
          if (e0 == i) fail("exponent expected after '^'");
          exp = std::stoi(text.substr(e0, i - e0));
          if (exp <= 0) fail("exponents must be positive");
        }
        mono = mono * Monomial::var(it->second, exp);
        any_factor = true;
      } else {
        fail("expected a coefficient or a symbol");
      }
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!any_factor) fail("empty term");
    if (coef != 0) out.add_term(coef, mono);
    first = false;
  }
  return out;
}

LiftedSystem from_json_text(const std::string& data) {
  json j;
  try {
    j = json::parse(data);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("json parse: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("top level must be a json object");
  const auto field = [&](const char* key) -> const json& {
    const auto it = j.find(key);
    if (it == j.end())
      throw std::invalid_argument(std::string("missing field '") + key + "'");
    return *it;
  };

  LiftedSystem s;
  const json& lj = field("lie_type");
  if (!lj.is_string() ||
      (lj != "A" && lj != "B" && lj != "C" && lj != "D"))
    throw std::invalid_argument("lie_type must be one of \"A\", \"B\", \"C\", \"D\"");
  s.lie_type = lj.get<std::string>();
  const json& fj = field("formulation");
  if (!fj.is_string()) throw std::invalid_argument("formulation must be a string");
  s.formulation = parse_formulation(fj.get<std::string>());

  const auto int_list = [&](const char* key) {
    const json& a = field(key);
    if (!a.is_array())
      throw std::invalid_argument(std::string("field '") + key + "' must be an array");
    std::vector<int> out;
    for (const json& x : a) {
      if (!x.is_number_integer())
        throw std::invalid_argument(std::string("field '") + key + "' must hold integers");
      out.push_back(x.get<int>());
    }
    return out;
  };
  s.u = int_list("u");
  s.v = int_list("v");
  s.t = int_list("t");

  const auto name_list = [&](const char* key) {
    const json& a = field(key);
    if (!a.is_array())
      throw std::invalid_argument(std::string("field '") + key + "' must be an array");
    std::vector<std::string> out;
    for (const json& x : a) {
      if (!x.is_string())
        throw std::invalid_argument(std::string("field '") + key + "' must hold strings");
      out.push_back(x.get<std::string>());
    }
    return out;
  };
  s.variables = name_list("variables");
  s.parameters = name_list("parameters");
  const std::map<std::string, int> sym = symbol_table(s);

  const auto parse_term = [&](const json& tj, const std::string& where) {
    if (!tj.is_object() || !tj.contains("c") || !tj.contains("m"))
      throw std::invalid_argument(where + ": a term needs fields \"c\" and \"m\"");
    if (!tj["c"].is_number_integer())
      throw std::invalid_argument(where + ": coefficient must be an integer");
    const BigInt c = tj["c"].get<long long>();
    const json& mm = tj["m"];
    if (!mm.is_object())
      throw std::invalid_argument(where + ": \"m\" must be an object");
    Monomial mono;
    for (auto it = mm.begin(); it != mm.end(); ++it) {
      const auto f = sym.find(it.key());
      if (f == sym.end())
        throw std::invalid_argument(where + ": unknown symbol '" + it.key() + "'");
      if (!it.value().is_number_integer() || it.value().get<long long>() <= 0)
        throw std::invalid_argument(where + ": exponents must be positive integers");
      mono = mono * Monomial::var(f->second, it.value().get<int>());
    }
    return std::make_pair(c, mono);
  };

  const json& ej = field("equations");
  if (!ej.is_array()) throw std::invalid_argument("equations must be an array");
  for (size_t e = 0; e < ej.size(); ++e) {
    if (!ej[e].is_array())
      throw std::invalid_argument("equation " + std::to_string(e + 1) +
                                  " must be an array of terms");
    IntPolynomial p;
    for (size_t k = 0; k < ej[e].size(); ++k) {
      const std::string where =
          "equation " + std::to_string(e + 1) + ", term " + std::to_string(k + 1);
      const auto [c, mono] = parse_term(ej[e][k], where);
      if (c != 0) p.add_term(c, mono);
    }
    s.equations.push_back(std::move(p));
  }

  const json& dj = field("det_equations");
  if (!dj.is_array()) throw std::invalid_argument("det_equations must be an array");
  for (size_t d = 0; d < dj.size(); ++d) {
    const std::string where = "det_equation " + std::to_string(d + 1);
    const json& de = dj[d];
    if (!de.is_object() || !de.contains("matrix") || !de.contains("equals"))
      throw std::invalid_argument(where + ": needs fields \"matrix\" and \"equals\"");
    if (!de["equals"].is_number_integer())
      throw std::invalid_argument(where + ": \"equals\" must be an integer");
    DetEquation out;
    out.equals = de["equals"].get<long long>();
    if (!de["matrix"].is_array() || de["matrix"].empty())
      throw std::invalid_argument(where + ": \"matrix\" must be a nonempty array");
    size_t width = 0;
    for (const json& row : de["matrix"]) {
      if (!row.is_array() || row.empty())
        throw std::invalid_argument(where + ": matrix rows must be nonempty arrays");
      if (width == 0) width = row.size();
      if (row.size() != width)
        throw std::invalid_argument(where + ": matrix rows must share one width");
      std::vector<IntPolynomial> prow;
      for (const json& cell : row) {
        const auto [c, mono] = parse_term(cell, where);
        prow.push_back(c == 0 ? IntPolynomial::zero() : IntPolynomial::term(c, mono));
      }
      out.matrix.push_back(std::move(prow));
    }
    s.det_equations.push_back(std::move(out));
  }
  return s;
}

LiftedSystem from_plain_text(const std::string& data) {
  std::vector<std::string> lines;
  {
    std::istringstream in(data);
    std::string l;
    while (std::getline(in, l)) lines.push_back(l);
  }
  size_t pos = 0;
  const auto fail_at = [&](size_t line, const std::string& msg) {
    throw std::invalid_argument("line " + std::to_string(line + 1) + ": " + msg);
  };
  const auto take = [&](const std::string& key) {
    if (pos >= lines.size())
      throw std::invalid_argument("unexpected end of input, expected '" + key + ":'");
    const std::string& l = lines[pos];
    if (l.rfind(key + ":", 0) != 0) fail_at(pos, "expected '" + key + ":'");
    ++pos;
    return l.substr(key.size() + 1);
  };
  const auto trim = [](std::string s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    return s;
  };

  LiftedSystem s;
  s.lie_type = trim(take("lie_type"));
  if (s.lie_type != "A" && s.lie_type != "B" && s.lie_type != "C" && s.lie_type != "D")
    fail_at(pos - 1, "lie_type must be one of A, B, C, D");
  s.formulation = parse_formulation(trim(take("formulation")));

  const auto int_line = [&](const char* key) {
    const std::string body = take(key);
    std::istringstream in(body);
    std::vector<int> out;
    int x;
    while (in >> x) out.push_back(x);
    std::string rest;
    if (in.clear(), in >> rest; !rest.empty())
      fail_at(pos - 1, std::string("field '") + key + "' must hold integers");
    return out;
  };
  s.u = int_line("u");
  s.v = int_line("v");
  s.t = int_line("t");

  const auto name_line = [&](const char* key) {
    const std::string body = take(key);
    std::istringstream in(body);
    std::vector<std::string> out;
    std::string nm;
    while (in >> nm) out.push_back(nm);
    return out;
  };
  s.variables = name_line("variables");
  s.parameters = name_line("parameters");
  std::map<std::string, int> sym;
  try {
    sym = symbol_table(s);
  } catch (const std::invalid_argument& e) {
    fail_at(pos - 1, e.what());
  }

  (void)take("equations");
  while (pos < lines.size() && lines[pos].rfind("det_equations:", 0) != 0) {
    const std::string line = trim(lines[pos]);
    if (line.empty()) {
      ++pos;
      continue;
    }
    const std::string tail = " = 0";
    if (line.size() <= tail.size() || line.substr(line.size() - tail.size()) != tail)
      fail_at(pos, "equation lines must end with '= 0'");
    const std::string body = line.substr(0, line.size() - tail.size());
    try {
      s.equations.push_back(parse_named_poly(body, sym, "equation"));
    } catch (const std::invalid_argument& e) {
      fail_at(pos, e.what());
    }
    ++pos;
  }
  if (pos >= lines.size())
    throw std::invalid_argument("unexpected end of input, expected 'det_equations:'");
  ++pos;  // consume the det_equations header
  while (pos < lines.size()) {
    const std::string line = trim(lines[pos]);
    if (line.empty()) {
      ++pos;
      continue;
    }
    if (line.rfind("det [", 0) != 0) fail_at(pos, "expected 'det [...] = k'");
    const size_t close = line.rfind("] = ");
    if (close == std::string::npos) fail_at(pos, "expected '] = k' to end the determinant");
    const std::string body = line.substr(5, close - 5);
    DetEquation de;
    try {
      de.equals = std::stoll(line.substr(close + 4));
    } catch (const std::exception&) {
      fail_at(pos, "determinant right-hand side must be an integer");
    }
    size_t width = 0;
    std::istringstream rows(body);
    std::string row;
    while (std::getline(rows, row, ';')) {
      std::vector<IntPolynomial> prow;
      std::istringstream cells(row);
      std::string cell;
      while (std::getline(cells, cell, ',')) {
        try {
          const IntPolynomial p = parse_named_poly(trim(cell), sym, "determinant entry");
          if (p.term_count() > 1)
            throw std::invalid_argument("determinant entries must be single terms");
          prow.push_back(p);
        } catch (const std::invalid_argument& e) {
          fail_at(pos, e.what());
        }
      }
      if (prow.empty()) fail_at(pos, "empty determinant row");
      if (width == 0) width = prow.size();
      if (prow.size() != width) fail_at(pos, "determinant rows must share one width");
      de.matrix.push_back(std::move(prow));
    }
    if (de.matrix.empty()) fail_at(pos, "empty determinant matrix");
    s.det_equations.push_back(std::move(de));
    ++pos;
  }
  return s;
}

}  // namespace

std::string serialize(const LiftedSystem& s, SerialFormat format) {
  return format == SerialFormat::Json ? to_json_text(s) : to_plain_text(s);
}

LiftedSystem deserialize(const std::string& data, SerialFormat format) {
  return format == SerialFormat::Json ? from_json_text(data) : from_plain_text(data);
}

}  // namespace schubert
