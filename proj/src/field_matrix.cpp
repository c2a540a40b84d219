#include "nilcomm/field_matrix.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace nilcomm {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod64(result, base, m);
    base = mulmod64(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (value % small == 0) return value == small;
  }
  std::uint64_t d = value - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin bases for all 64-bit inputs.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod64(a, d, value);
    if (x == 1 || x == value - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, value);
      if (x == value - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t random_prime(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(1ULL << 30, (1ULL << 31) - 1);
  while (true) {
    std::uint64_t candidate = dist(rng) | 1ULL;
    if (is_prime(candidate)) return candidate;
  }
}

PrimeField::PrimeField(std::uint64_t prime) : p_(prime) {
  if (prime >= (1ULL << 31) || !is_prime(prime)) {
    throw std::invalid_argument("field modulus must be a prime below 2^31, got " +
                                std::to_string(prime));
  }
}

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t exp) const noexcept {
  std::uint64_t result = 1 % p_;
  base %= p_;
  while (exp) {
    if (exp & 1) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

std::uint64_t PrimeField::inverse(std::uint64_t a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
  std::int64_t t = 0;
  std::int64_t new_t = 1;
  auto r = static_cast<std::int64_t>(p_);
  auto new_r = static_cast<std::int64_t>(a % p_);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
    std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
  }
  if (t < 0) t += static_cast<std::int64_t>(p_);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t PrimeField::from_signed(std::int64_t value) const noexcept {
  auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = value % p;
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

std::int64_t PrimeField::to_signed(std::uint64_t value) const noexcept {
  auto v = static_cast<std::int64_t>(value);
  return value > p_ / 2 ? v - static_cast<std::int64_t>(p_) : v;
}

std::uint64_t PrimeField::random_nonzero(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint64_t> dist(1, p_ - 1);
  return dist(rng);
}

FieldMatrix::FieldMatrix(int dim, PrimeField field)
    : dim_(dim), field_(field), data_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), 0) {
  if (dim < 1) throw std::invalid_argument("matrix dimension must be positive");
}

FieldMatrix FieldMatrix::identity(int dim, PrimeField field) {
  FieldMatrix m(dim, field);
  for (int i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

FieldMatrix FieldMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                                   PrimeField field) {
  const int dim = static_cast<int>(rows.size());
  FieldMatrix m(dim, field);
  for (int r = 0; r < dim; ++r) {
    if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != dim) {
      throw std::invalid_argument("matrix row " + std::to_string(r + 1) + " has " +
                                  std::to_string(rows[static_cast<std::size_t>(r)].size()) +
                                  " entries, expected " + std::to_string(dim));
    }
    for (int c = 0; c < dim; ++c) m.set(r, c, rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
  }
  return m;
}

bool FieldMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](std::uint64_t v) { return v == 0; });
}

std::vector<std::vector<int>> FieldMatrix::support() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(dim_), std::vector<int>(static_cast<std::size_t>(dim_), 0));
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = (*this)(r, c) != 0;
  }
  return out;
}

std::vector<std::vector<std::int64_t>> FieldMatrix::to_signed_rows() const {
  std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(dim_));
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) out[static_cast<std::size_t>(r)].push_back(field_.to_signed((*this)(r, c)));
  }
  return out;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.dim_ != b.dim_ || !(a.field_ == b.field_)) {
    throw std::invalid_argument("matrix product: dimension or field mismatch");
  }
  const int n = a.dim_;
  const std::uint64_t p = a.field_.prime();
  // p < 2^31 keeps acc + p^2 below 2^64 while acc < 2p^2.
  const std::uint64_t bound = 2 * p * p;
  FieldMatrix out(n, a.field_);
  std::vector<std::uint64_t> acc(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    bool any = false;
    for (int k = 0; k < n; ++k) {
      const std::uint64_t aik = a(i, k);
      if (aik == 0) continue;
      any = true;
      const std::uint64_t* brow = b.data_.data() + static_cast<std::size_t>(k * n);
      for (int j = 0; j < n; ++j) {
        std::uint64_t v = acc[static_cast<std::size_t>(j)] + aik * brow[j];
        acc[static_cast<std::size_t>(j)] = v >= bound ? v - bound : v;
      }
    }
    if (!any) continue;
    for (int j = 0; j < n; ++j) out(i, j) = acc[static_cast<std::size_t>(j)] % p;
  }
  return out;
}

FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.dim_ != b.dim_ || !(a.field_ == b.field_)) {
    throw std::invalid_argument("matrix sum: dimension or field mismatch");
  }
  FieldMatrix out(a.dim_, a.field_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
  return out;
}

FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.dim_ != b.dim_ || !(a.field_ == b.field_)) {
    throw std::invalid_argument("matrix difference: dimension or field mismatch");
  }
  FieldMatrix out(a.dim_, a.field_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
  return out;
}

FieldMatrix power(const FieldMatrix& m, int exponent) {
  if (exponent < 0) throw std::domain_error("negative matrix power");
  FieldMatrix result = FieldMatrix::identity(m.dim(), m.field());
  FieldMatrix base = m;
  while (exponent) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

FieldMatrix jordan_matrix(const Partition& mu, PrimeField field) {
  if (mu.empty()) throw std::invalid_argument("jordan_matrix of the empty partition");
  FieldMatrix j(mu.size(), field);
  int offset = 0;
  for (int block : mu.parts()) {
    for (int r = 0; r + 1 < block; ++r) j(offset + r, offset + r + 1) = 1;
    offset += block;
  }
  return j;
}

int rank(const FieldMatrix& m) {
  const int n = m.dim();
  const PrimeField& f = m.field();
  std::vector<std::uint64_t> a(static_cast<std::size_t>(n * n));
  for (int r = 0; r < n; ++r) std::copy(m.row(r).begin(), m.row(r).end(), a.begin() + r * n);
  auto at = [&](int r, int c) -> std::uint64_t& { return a[static_cast<std::size_t>(r * n + c)]; };

  int rk = 0;
  for (int c = 0; c < n && rk < n; ++c) {
    int pivot = -1;
    for (int r = rk; r < n; ++r) {
      if (at(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rk) {
      for (int j = c; j < n; ++j) std::swap(at(pivot, j), at(rk, j));
    }
    const std::uint64_t inv = f.inverse(at(rk, c));
    for (int r = rk + 1; r < n; ++r) {
      if (at(r, c) == 0) continue;
      const std::uint64_t factor = f.mul(at(r, c), inv);
      at(r, c) = 0;
      for (int j = c + 1; j < n; ++j) {
        if (at(rk, j) != 0) at(r, j) = f.sub(at(r, j), f.mul(factor, at(rk, j)));
      }
    }
    ++rk;
  }
  return rk;
}

std::vector<int> rank_profile(const FieldMatrix& m) {
  std::vector<int> ranks{m.dim()};
  FieldMatrix current = m;
  for (int k = 1; k <= m.dim(); ++k) {
    if (k > 1) current = current * m;
    const int r = rank(current);
    if (r == ranks.back()) break;  // stabilised above zero
    ranks.push_back(r);
    if (r == 0) return ranks;
  }
  throw std::runtime_error("not nilpotent");
}

Partition shape_of(const FieldMatrix& m) {
  const auto ranks = rank_profile(m);
  std::vector<int> columns;
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    const int c = ranks[k - 1] - ranks[k];
    if (!columns.empty() && c > columns.back()) {
      throw std::logic_error("rank profile drops are not weakly decreasing");
    }
    columns.push_back(c);
  }
  return conjugate(Partition(std::move(columns)));
}

int nilpotency_index(const FieldMatrix& m) {
  return static_cast<int>(rank_profile(m).size()) - 1;
}

bool commutes(const FieldMatrix& a, const FieldMatrix& b) { return a * b == b * a; }

FieldMatrix read_matrix(std::istream& in, PrimeField field) {
  std::vector<std::vector<std::int64_t>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string token;
    std::vector<std::int64_t> row;
    while (ls >> token) {
      if (row.empty() && token.front() == '#') break;
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw std::invalid_argument("bad matrix entry '" + token + "' on line " +
                                    std::to_string(line_no));
      }
      row.push_back(value);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("matrix input is empty");
  return FieldMatrix::from_rows(rows, field);
}

void write_matrix(std::ostream& out, const FieldMatrix& m) {
  for (int r = 0; r < m.dim(); ++r) {
    for (int c = 0; c < m.dim(); ++c) {
      if (c) out << ' ';
      out << m.field().to_signed(m(r, c));
    }
    out << '\n';
  }
}

}  // namespace nilcomm
