#include "schubert/fp.hpp"

#include <stdexcept>

namespace schubert {

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const std::uint64_t s = a + b;  // p < 2^62: no overflow
  return s >= p ? s - p : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t base = a % p, out = 1 % p;
  while (e) {
    if (e & 1) out = mul_mod(out, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return out;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw std::invalid_argument("zero is not invertible");
  return pow_mod(a, p - 2, p);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) d >>= 1, ++r;
  // This witness set decides primality for every 64-bit integer.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int k = 1; k < r; ++k) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint64_t p)
    : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {
  if (p < 2 || p >= (1ull << 62)) throw std::invalid_argument("modulus out of range");
}

FpMatrix FpMatrix::identity(std::size_t n, std::uint64_t p) {
  FpMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  if (cols_ != o.rows_ || p_ != o.p_) throw std::invalid_argument("shape mismatch");
  FpMatrix out(rows_, o.cols_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t x = at(i, k);
      if (!x) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        out.at(i, j) = add_mod(out.at(i, j), mul_mod(x, o.at(k, j), p_), p_);
    }
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
    throw std::invalid_argument("shape mismatch");
  FpMatrix out(rows_, cols_, p_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = add_mod(a_[k], o.a_[k], p_);
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
    throw std::invalid_argument("shape mismatch");
  FpMatrix out(rows_, cols_, p_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = sub_mod(a_[k], o.a_[k], p_);
  return out;
}

bool FpMatrix::operator==(const FpMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && a_ == o.a_;
}

std::size_t FpMatrix::rank() const {
  FpMatrix m = *this;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && m.at(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    const std::uint64_t inv = inv_mod(m.at(rank, col), p_);
    for (std::size_t i = rank + 1; i < rows_; ++i) {
      const std::uint64_t f = mul_mod(m.at(i, col), inv, p_);
      if (!f) continue;
      for (std::size_t j = col; j < cols_; ++j)
        m.at(i, j) = sub_mod(m.at(i, j), mul_mod(f, m.at(rank, j), p_), p_);
    }
    ++rank;
  }
  return rank;
}

FpMatrix FpMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("only square matrices invert");
  FpMatrix m = *this;
  FpMatrix inv = identity(rows_, p_);
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t pivot = col;
    while (pivot < rows_ && m.at(pivot, col) == 0) ++pivot;
    if (pivot == rows_) throw std::invalid_argument("matrix is singular");
    for (std::size_t j = 0; j < cols_; ++j) {
      std::swap(m.at(pivot, j), m.at(col, j));
      std::swap(inv.at(pivot, j), inv.at(col, j));
    }
    const std::uint64_t d = inv_mod(m.at(col, col), p_);
    for (std::size_t j = 0; j < cols_; ++j) {
      m.at(col, j) = mul_mod(m.at(col, j), d, p_);
      inv.at(col, j) = mul_mod(inv.at(col, j), d, p_);
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == col) continue;
      const std::uint64_t f = m.at(i, col);
      if (!f) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        m.at(i, j) = sub_mod(m.at(i, j), mul_mod(f, m.at(col, j), p_), p_);
        inv.at(i, j) = sub_mod(inv.at(i, j), mul_mod(f, inv.at(col, j), p_), p_);
      }
    }
  }
  return inv;
}

}  // namespace schubert
