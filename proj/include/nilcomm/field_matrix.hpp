#ifndef NILCOMM_FIELD_MATRIX_HPP
#define NILCOMM_FIELD_MATRIX_HPP

#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "nilcomm/partition.hpp"

namespace nilcomm {
/// Default field modulus, 2^31 - 1.
/// 2^31 - 1. Fixed so that golden outputs are reproducible.
inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;

bool is_prime(std::uint64_t value);

/// A uniformly drawn prime in [2^30, 2^31).
std::uint64_t random_prime(std::mt19937_64& rng);

/// Arithmetic in F_p for a prime p < 2^32. Residues are plain uint64 values
/// in [0, p); products of two residues fit in 64 bits.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t prime = kDefaultPrime);

  std::uint64_t prime() const noexcept { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept { return a * b % p_; }
  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const noexcept;
  std::uint64_t inverse(std::uint64_t a) const;

  /// Lifts a signed integer into [0, p).
  std::uint64_t from_signed(std::int64_t value) const noexcept;
  /// Symmetric representative in (-p/2, p/2].
  std::int64_t to_signed(std::uint64_t value) const noexcept;

  /// Uniform in 1..p-1.
  std::uint64_t random_nonzero(std::mt19937_64& rng) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

/// Dense square matrix over F_p, row-major.
class FieldMatrix {
 public:
  FieldMatrix(int dim, PrimeField field);

  static FieldMatrix identity(int dim, PrimeField field);
  /// Rows of signed integers, lifted into F_p. Throws if not square.
  static FieldMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                               PrimeField field);

  int dim() const noexcept { return dim_; }
  const PrimeField& field() const noexcept { return field_; }

  // 0-based
  std::uint64_t operator()(int row, int col) const noexcept {
    return data_[static_cast<std::size_t>(row * dim_ + col)];
  }
  std::uint64_t& operator()(int row, int col) noexcept {
    return data_[static_cast<std::size_t>(row * dim_ + col)];
  }
  void set(int row, int col, std::int64_t value) {
    (*this)(row, col) = field_.from_signed(value);
  }

  std::span<const std::uint64_t> row(int r) const noexcept {
    return {data_.data() + static_cast<std::size_t>(r * dim_), static_cast<std::size_t>(dim_)};
  }

  bool is_zero() const noexcept;
  /// 0/1 support pattern.
  std::vector<std::vector<int>> support() const;
  std::vector<std::vector<std::int64_t>> to_signed_rows() const;

  friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
  friend FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b);
  friend FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b);
  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  int dim_;
  PrimeField field_;
  std::vector<std::uint64_t> data_;
};

FieldMatrix power(const FieldMatrix& m, int exponent);

/// Block-diagonal upper-triangular Jordan matrix with nilpotent blocks of
/// sizes mu_1, ..., mu_t in order.
FieldMatrix jordan_matrix(const Partition& mu, PrimeField field = PrimeField{});

int rank(const FieldMatrix& m);

/// Ranks of M^0, M^1, ..., up to and including the first zero power.
/// Throws std::runtime_error("not nilpotent") if M^dim != 0.
std::vector<int> rank_profile(const FieldMatrix& m);

/// Jordan shape of a nilpotent matrix, read off its rank profile.
Partition shape_of(const FieldMatrix& m);

int nilpotency_index(const FieldMatrix& m);

bool commutes(const FieldMatrix& a, const FieldMatrix& b);

/// Whitespace-separated integer rows, one matrix row per line. Blank lines and
/// lines starting with '#' are skipped.
FieldMatrix read_matrix(std::istream& in, PrimeField field = PrimeField{});
void write_matrix(std::ostream& out, const FieldMatrix& m);

}  // namespace nilcomm

#endif  // NILCOMM_FIELD_MATRIX_HPP
