#ifndef NILCOMM_PARTITION_HPP
#define NILCOMM_PARTITION_HPP

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nilcomm {

/// A weakly decreasing sequence of positive integers.
///
/// Indexing through part() is 1-based to match the usual mu_1 >= mu_2 >= ...
/// notation. part(0) is the virtual value mu_1 + 1, and part(t + 1) is 0, so
/// formulas that look one step past either end need no special cases.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless parts are positive and weakly
  /// decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return n_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  int part(int i) const;
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  /// Sum of parts first..last (1-based, inclusive).
  int sum(int first, int last) const;

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Parses "4,3,2,2,1"; "2^2" expands to "2,2". Surrounding parentheses and
/// spaces are tolerated. Throws std::invalid_argument naming the bad token.
Partition parse_partition(std::string_view text);

/// (m_1^{r_1}, ..., m_l^{r_l}) view of a partition.
struct MultiplicityForm {
  struct Group {
    int size;          // m_i
    int multiplicity;  // r_i
    int first_row;     // smallest 1-based index k with mu_k = m_i
  };
  std::vector<Group> groups;

  int count() const noexcept { return static_cast<int>(groups.size()); }
  Partition to_partition() const;
};

MultiplicityForm multiplicity_form(const Partition& mu);

/// Exponent form, e.g. "(4,3,2^2,1)".
std::string to_exponent_string(const Partition& mu);

Partition conjugate(const Partition& mu);

/// True if every prefix sum of lhs is >= the matching prefix sum of rhs.
bool dominates(const Partition& lhs, const Partition& rhs);

/// All partitions of n, reverse-lexicographic (largest first).
std::vector<Partition> partitions_of(int n);

/// The unique partition of n into t parts whose parts differ by at most one.
Partition rpt(int n, int t);

/// {rpt(n, t) : t = 1..n}, reverse-lexicographic.
std::vector<Partition> rp_set(int n);

/// All parts of all inputs, sorted weakly decreasing.
Partition ord_merge(std::span<const Partition> seqs);

/// {ord_merge(rpt(mu_1, s_1), ..., rpt(mu_t, s_t)) : 1 <= s_i <= mu_i},
/// deduplicated and reverse-lexicographic.
std::vector<Partition> rp_of_partition(const Partition& mu);

struct BasiliIndices {
  int r_b = 0;
  std::vector<int> starts;  // k_1 = 1, k_2, ..., 1-based
};

BasiliIndices basili_indices(const Partition& mu);

/// Width s(i) of size group i (1-based over the multiplicity form).
int s_width(const Partition& mu, int group);

}  // namespace nilcomm

#endif  // NILCOMM_PARTITION_HPP
