// Dense linear algebra over a prime field F_p, p < 2^62.

#ifndef SCHUBERT_FP_HPP
#define SCHUBERT_FP_HPP

#include <cstdint>
#include <vector>

namespace schubert {

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
// Inverse of a nonzero residue (p prime); throws std::invalid_argument on 0.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

class FpMatrix {
public:
  FpMatrix(std::size_t rows, std::size_t cols, std::uint64_t p);
  static FpMatrix identity(std::size_t n, std::uint64_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t prime() const { return p_; }

  std::uint64_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  FpMatrix operator*(const FpMatrix& o) const;
  FpMatrix operator+(const FpMatrix& o) const;
  FpMatrix operator-(const FpMatrix& o) const;

  bool operator==(const FpMatrix& o) const;

  // Rank by Gaussian elimination on a scratch copy.
  std::size_t rank() const;

  // Inverse; throws std::invalid_argument if singular.
  FpMatrix inverse() const;

private:
  std::size_t rows_, cols_;
  std::uint64_t p_;
  std::vector<std::uint64_t> a_;
};

}  // namespace schubert

#endif  // SCHUBERT_FP_HPP
