#include "schubert/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schubert {

namespace {

void validate_window(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int v : w) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("window is not a rearrangement of 1..n");
    seen[static_cast<size_t>(v)] = 1;
  }
}

void validate_signed_window(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int v : w) {
    const int a = std::abs(v);
    if (a < 1 || a > n || seen[static_cast<size_t>(a)])
      throw std::invalid_argument("values must cover 1..n up to sign");
    seen[static_cast<size_t>(a)] = 1;
  }
}

std::vector<int> split_ints(const std::string& text) {
  std::vector<int> out;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    size_t pos = 0;
    const int v = std::stoi(tok, &pos);
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos != tok.size()) throw std::invalid_argument("bad entry: " + tok);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty permutation text");
  return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> window) : window_(std::move(window)) {
  validate_window(window_);
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

int Permutation::operator()(int i) const {
  if (i < 1) throw std::invalid_argument("positions are 1-based");
  if (i > size()) return i;
  return window_[static_cast<size_t>(i) - 1];
}

Permutation Permutation::padded(int n) const {
  if (n < size()) throw std::invalid_argument("cannot pad below current size");
  Permutation out = *this;
  for (int i = size() + 1; i <= n; ++i) out.window_.push_back(i);
  return out;
}

Permutation Permutation::trimmed() const {
  Permutation out = *this;
  while (out.size() > 1 && out.window_.back() == out.size()) out.window_.pop_back();
  if (out.window_.empty()) out.window_.push_back(1);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(window_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<size_t>(window_[static_cast<size_t>(i) - 1]) - 1] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& u) const {
  const int n = std::max(std::max(size(), u.size()), 1);
  std::vector<int> out(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) out[static_cast<size_t>(i) - 1] = (*this)(u(i));
  return Permutation(std::move(out)).trimmed();
}

bool Permutation::operator==(const Permutation& o) const {
  return trimmed().window_ == o.trimmed().window_;
}

bool Permutation::operator<(const Permutation& o) const {
  const auto a = trimmed(), b = o.trimmed();
  if (a.size() != b.size()) return a.size() < b.size();
  return a.window_ < b.window_;
}

std::string Permutation::to_string() const {
  const Permutation t = trimmed();
  std::ostringstream out;
  if (t.size() <= 9) {
    for (int v : t.window_) out << v;
  } else {
    for (size_t k = 0; k < t.window_.size(); ++k) {
      if (k) out << ',';
      out << t.window_[k];
    }
  }
  return out.str();
}

Permutation Permutation::parse(const std::string& text) {
  if (text.find(',') != std::string::npos) return Permutation(split_ints(text));
  std::vector<int> w;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
      throw std::invalid_argument("expected digits 1-9 or a comma-separated list");
    w.push_back(c - '0');
  }
  if (w.empty()) throw std::invalid_argument("empty permutation text");
  return Permutation(std::move(w));
}

int inversions(const Permutation& w) {
  int count = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(i) > w(j)) ++count;
  return count;
}

std::vector<int> descent_set(const Permutation& w) {
  const Permutation t = w.trimmed();
  std::vector<int> out;
  for (int i = 1; i < t.size(); ++i)
    if (t(i) > t(i + 1)) out.push_back(i);
  return out;
}

int descent_count(const Permutation& w) { return static_cast<int>(descent_set(w).size()); }

std::vector<int> ascent_set(const Permutation& w) {
  std::vector<int> out;
  for (int i = 1; i < w.size(); ++i)
    if (w(i) < w(i + 1)) out.push_back(i);
  return out;
}

std::vector<int> lehmer_code(const Permutation& w) {
  const int n = w.size();
  std::vector<int> code(static_cast<size_t>(std::max(n, 1)), 0);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (w(j) < w(i)) ++code[static_cast<size_t>(i) - 1];
  return code;
}

Permutation code_to_perm(const std::vector<int>& code) {
  // c_i counts the later values smaller than w(i): pick the (c_i+1)-st
  // smallest label still unused, scanning a window large enough to hold all.
  int n = static_cast<int>(code.size());
  for (size_t i = 0; i < code.size(); ++i) {
    if (code[i] < 0) throw std::invalid_argument("code entries must be nonnegative");
    n = std::max(n, static_cast<int>(i) + 1 + code[i]);
  }
  n = std::max(n, 1);
  std::vector<int> labels(static_cast<size_t>(n));
  std::iota(labels.begin(), labels.end(), 1);
  std::vector<int> window;
  window.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int c = i < static_cast<int>(code.size()) ? code[static_cast<size_t>(i)] : 0;
    window.push_back(labels[static_cast<size_t>(c)]);
    labels.erase(labels.begin() + c);
  }
  return Permutation(std::move(window)).trimmed();
}

int rank_entry(const Permutation& w, int i, int j, int n) {
  (void)n;
  int count = 0;
  for (int r = 1; r <= i; ++r)
    if (w(r) > j) ++count;
  return count;
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (inversions(u) > inversions(w)) return false;
  const int n = std::max(u.trimmed().size(), w.trimmed().size());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (rank_entry(u, i, j, n) > rank_entry(w, i, j, n)) return false;
  return true;
}

Permutation longest_element(int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  std::vector<int> w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = n - i;
  return Permutation(std::move(w));
}

Permutation right_transposition(const Permutation& w, int i) {
  if (i < 1) throw std::invalid_argument("transposition index must be positive");
  Permutation p = w.padded(std::max(w.size(), i + 1));
  std::vector<int> win = p.window();
  std::swap(win[static_cast<size_t>(i) - 1], win[static_cast<size_t>(i)]);
  return Permutation(std::move(win)).trimmed();
}

std::set<std::pair<int, int>> diagram(const Permutation& w) {
  const Permutation t = w.trimmed();
  std::set<std::pair<int, int>> cells;
  for (int i = 1; i <= t.size(); ++i)
    for (int j = i + 1; j <= t.size(); ++j)
      if (t(i) > t(j)) cells.emplace(t(j), i);
  return cells;
}

int zeta_rows(const Permutation& w) {
  std::set<int> rows;
  for (const auto& cell : diagram(w)) rows.insert(cell.first);
  return static_cast<int>(rows.size());
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// ---------------------------------------------------------------------------

int LieType::ambient_dim() const {
  switch (family) {
    case LieFamily::A: return rank;
    case LieFamily::B: return 2 * rank + 1;
    case LieFamily::C:
    case LieFamily::D: return 2 * rank;
  }
  throw std::logic_error("unreachable");
}

int LieType::positive_roots() const {
  switch (family) {
    case LieFamily::A: return rank * (rank - 1) / 2;
    case LieFamily::B:
    case LieFamily::C: return rank * rank;
    case LieFamily::D: return rank * rank - rank;
  }
  throw std::logic_error("unreachable");
}

std::string LieType::to_string() const {
  static const char* names = "ABCD";
  return std::string(1, names[static_cast<int>(family)]) + std::to_string(rank);
}

LieFamily parse_family(const std::string& text) {
  if (text.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
      case 'A': return LieFamily::A;
      case 'B': return LieFamily::B;
      case 'C': return LieFamily::C;
      case 'D': return LieFamily::D;
      default: break;
    }
  }
  throw std::invalid_argument("unknown family: " + text);
}

SignedPermutation::SignedPermutation(std::vector<int> values) : vals_(std::move(values)) {
  validate_signed_window(vals_);
}

SignedPermutation SignedPermutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return SignedPermutation(std::move(w));
}

int SignedPermutation::operator()(int i) const {
  if (i == 0 || std::abs(i) > size()) throw std::invalid_argument("position out of range");
  const int v = vals_[static_cast<size_t>(std::abs(i)) - 1];
  return i > 0 ? v : -v;
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> inv(vals_.size());
  for (int i = 1; i <= size(); ++i) {
    const int v = vals_[static_cast<size_t>(i) - 1];
    inv[static_cast<size_t>(std::abs(v)) - 1] = v > 0 ? i : -i;
  }
  return SignedPermutation(std::move(inv));
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& u) const {
  if (size() != u.size()) throw std::invalid_argument("rank mismatch");
  std::vector<int> out(vals_.size());
  for (int i = 1; i <= size(); ++i) out[static_cast<size_t>(i) - 1] = (*this)(u(i));
  return SignedPermutation(std::move(out));
}

std::string SignedPermutation::to_string() const {
  std::ostringstream out;
  for (size_t k = 0; k < vals_.size(); ++k) {
    if (k) out << ',';
    out << vals_[k];
  }
  return out.str();
}

SignedPermutation SignedPermutation::parse(const std::string& text) {
  return SignedPermutation(split_ints(text));
}

int inversions(const SignedPermutation& w) {
  int count = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(i) > w(j)) ++count;
  return count;
}

int negative_count(const SignedPermutation& w) {
  int count = 0;
  for (int i = 1; i <= w.size(); ++i)
    if (w(i) < 0) ++count;
  return count;
}

int length(const SignedPermutation& w, const LieType& t) {
  int extra = 0;
  for (int i = 1; i <= w.size(); ++i)
    if (w(i) < 0) extra += -w(i) - (t.family == LieFamily::D ? 1 : 0);
  if (t.family == LieFamily::A)
    throw std::invalid_argument("type A length takes an unsigned permutation");
  return inversions(w) + extra;
}

int length(const Permutation& w, const LieType& t) {
  if (t.family != LieFamily::A)
    throw std::invalid_argument("signed types take a signed permutation");
  return inversions(w);
}

SignedPermutation longest_element_signed(const LieType& t) {
  const int n = t.rank;
  std::vector<int> w(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) w[static_cast<size_t>(i) - 1] = -i;
  if (t.family == LieFamily::D && n % 2 == 1) w[0] = 1;
  if (t.family == LieFamily::A)
    throw std::invalid_argument("use longest_element for type A");
  return SignedPermutation(std::move(w));
}

std::vector<SignedPermutation> weyl_group(const LieType& t) {
  if (t.family == LieFamily::A)
    throw std::invalid_argument("use all_permutations for type A");
  const int n = t.rank;
  std::vector<SignedPermutation> out;
  std::vector<int> base(static_cast<size_t>(n));
  std::iota(base.begin(), base.end(), 1);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (t.family == LieFamily::D && __builtin_popcount(mask) % 2 != 0) continue;
      std::vector<int> w = base;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) w[static_cast<size_t>(i)] = -w[static_cast<size_t>(i)];
      out.emplace_back(std::move(w));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  std::sort(out.begin(), out.end());
  return out;
}

int signed_row(int j, const LieType& t) {
  const int n = t.rank;
  if (std::abs(j) > n) throw std::invalid_argument("signed index out of range");
  if (t.family == LieFamily::B) {
    if (j < 0) return j + n + 1;
    if (j == 0) return n + 1;
    return n + 1 + j;
  }
  if (j == 0) throw std::invalid_argument("index 0 only exists in type B");
  return j < 0 ? j + n + 1 : j + n;
}

int row_signed_value(int r, const LieType& t) {
  const int n = t.rank;
  if (r < 1 || r > t.ambient_dim()) throw std::invalid_argument("row out of range");
  if (t.family == LieFamily::B) {
    if (r <= n) return r - n - 1;
    if (r == n + 1) return 0;
    return r - n - 1;
  }
  return r <= n ? r - n - 1 : r - n;
}

IntMatrix form_matrix(const LieType& t) {
  const int m = t.ambient_dim();
  IntMatrix j(static_cast<size_t>(m), std::vector<long long>(static_cast<size_t>(m), 0));
  for (int i = 1; i <= m; ++i) {
    long long sign = 1;
    if (t.family == LieFamily::C && i > t.rank) sign = -1;
    j[static_cast<size_t>(i) - 1][static_cast<size_t>(m - i)] = sign;
  }
  if (t.family == LieFamily::A)
    throw std::invalid_argument("type A carries no bilinear form");
  return j;
}

IntMatrix matrix_representative(const Permutation& w, const LieType& t) {
  if (t.family != LieFamily::A)
    throw std::invalid_argument("signed types take a signed permutation");
  const Permutation p = w.padded(t.rank);
  const int n = t.rank;
  IntMatrix m(static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n), 0));
  for (int j = 1; j <= n; ++j) m[static_cast<size_t>(p(j)) - 1][static_cast<size_t>(j) - 1] = 1;
  return m;
}

IntMatrix matrix_representative(const SignedPermutation& w, const LieType& t) {
  if (t.family == LieFamily::A)
    throw std::invalid_argument("type A takes an unsigned permutation");
  if (w.size() != t.rank) throw std::invalid_argument("rank mismatch");
  if (t.family == LieFamily::D && negative_count(w) % 2 != 0)
    throw std::invalid_argument("type D requires an even number of sign changes");
  const int n = t.rank;
  const int m = t.ambient_dim();
  IntMatrix g(static_cast<size_t>(m), std::vector<long long>(static_cast<size_t>(m), 0));
  for (int k = 1; k <= n; ++k) {
    long long pos = 1;
    if (t.family == LieFamily::C && w(k) < 0) pos = -1;
    g[static_cast<size_t>(signed_row(w(k), t)) - 1][static_cast<size_t>(signed_row(k, t)) - 1] = pos;
    g[static_cast<size_t>(signed_row(-w(k), t)) - 1][static_cast<size_t>(signed_row(-k, t)) - 1] = 1;
  }
  if (t.family == LieFamily::B) {
    const long long central = negative_count(w) % 2 == 0 ? 1 : -1;
    g[static_cast<size_t>(n)][static_cast<size_t>(n)] = central;
  }
  return g;
}

}  // namespace schubert
