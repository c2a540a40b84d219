#ifndef NILCOMM_COMMUTANT_HPP
#define NILCOMM_COMMUTANT_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "nilcomm/field_matrix.hpp"
#include "nilcomm/partition.hpp"

namespace nilcomm {

/// Coefficient a^k_{xy}: the k-th Toeplitz diagonal of block (x, y) of a
/// matrix commuting with jordan_matrix(mu). Blocks are 1-based.
struct ToeplitzParam {
  int x = 1;
  int y = 1;
  int k = 0;

  friend auto operator<=>(const ToeplitzParam&, const ToeplitzParam&) = default;
};

/// Column-minus-row offset of the diagonal that `param` occupies inside its
/// block: k + max(0, mu_y - mu_x).
int diagonal_offset(const Partition& mu, const ToeplitzParam& param);

/// Number of entries on that diagonal: min(mu_x, mu_y) - k.
int diagonal_length(const Partition& mu, const ToeplitzParam& param);

/// In range, and not an a^0_{xy} with mu_x = mu_y and x >= y. The latter keeps
/// each equal-size diagonal block strictly upper triangular, which makes
/// every instantiation nilpotent.
bool is_admissible(const Partition& mu, const ToeplitzParam& param);

class CommutantPattern {
 public:
  /// Throws std::invalid_argument on an inadmissible parameter. Duplicates
  /// collapse; params are kept sorted.
  CommutantPattern(Partition mu, std::vector<ToeplitzParam> params);

  const Partition& mu() const noexcept { return mu_; }
  const std::vector<ToeplitzParam>& params() const noexcept { return params_; }
  std::size_t size() const noexcept { return params_.size(); }
  bool contains(const ToeplitzParam& param) const;

 private:
  Partition mu_;
  std::vector<ToeplitzParam> params_;
};

/// Every admissible parameter for mu.
CommutantPattern full_pattern(const Partition& mu);

/// Closed-form parameter count of full_pattern(mu).
std::size_t full_pattern_size(const Partition& mu);

/// Places each value on its Toeplitz diagonal. Missing params are zero.
/// Throws std::invalid_argument for a param outside the pattern and
/// std::logic_error if the result fails to commute with jordan_matrix(mu) or
/// is not nilpotent.
FieldMatrix instantiate(const CommutantPattern& pattern,
                        const std::map<ToeplitzParam, std::uint64_t>& values,
                        PrimeField field = PrimeField{});

/// Same, with values[i] belonging to pattern.params()[i].
FieldMatrix instantiate(const CommutantPattern& pattern, std::span<const std::uint64_t> values,
                        PrimeField field = PrimeField{});

/// Instantiation with independent uniform nonzero values; deterministic in
/// (seed, field).
FieldMatrix sample(const CommutantPattern& pattern, std::uint64_t seed,
                   PrimeField field = PrimeField{});

/// O(n^2) check of A * J = J * A for J = jordan_matrix(mu).
bool commutes_with_jordan(const FieldMatrix& a, const Partition& mu);

namespace detail {

/// First flat row/column (0-based) of each block.
std::vector<int> block_offsets(const Partition& mu);

/// Unchecked placement into a zeroed matrix of the right size.
void place(const CommutantPattern& pattern, std::span<const std::uint64_t> values,
           const std::vector<int>& offsets, FieldMatrix& out);

}  // namespace detail

}  // namespace nilcomm

#endif  // NILCOMM_COMMUTANT_HPP
