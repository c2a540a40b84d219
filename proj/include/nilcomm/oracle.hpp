#ifndef NILCOMM_ORACLE_HPP
#define NILCOMM_ORACLE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilcomm/commutant.hpp"
#include "nilcomm/field_matrix.hpp"
#include "nilcomm/partition.hpp"

namespace nilcomm {

enum class SampleMode {
  random,       // uniform nonzero residues for every parameter
  exhaustive,   // every assignment from a small value set
  value_sample  // uniform random assignments from a small value set
};

std::string to_string(SampleMode mode);
SampleMode parse_sample_mode(const std::string& text);

struct ShapeSetOptions {
  SampleMode mode = SampleMode::random;
  /// Trials for the random modes; an upper bound on the assignment count in
  /// exhaustive mode.
  std::uint64_t budget = 1000;
  /// Signed integers lifted into F_p; ignored in random mode.
  std::vector<std::int64_t> values{-1, 0, 1};
  PrimeField field{};
  std::uint64_t seed = 0;
  int jobs = 1;
};

/// One stored matrix per observed shape: the parameter assignment of the
/// first trial (by index) that produced it.
struct ShapeWitness {
  std::uint64_t trial = 0;
  std::vector<std::uint64_t> values;  // residues, aligned with pattern.params()
};

struct ShapeSetReport {
  explicit ShapeSetReport(CommutantPattern p) : pattern(std::move(p)) {}

  CommutantPattern pattern;
  SampleMode mode = SampleMode::random;
  std::uint64_t trials = 0;
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
  std::vector<std::int64_t> values;
  std::map<Partition, ShapeWitness, std::greater<>> shapes;

  const Partition& mu() const noexcept { return pattern.mu(); }
  std::vector<Partition> observed() const;
  FieldMatrix witness_matrix(const Partition& shape) const;
  int max_nilpotency() const;
};

/// Shapes of matrices drawn from full_pattern(mu). Exhaustive mode throws
/// std::length_error naming the required budget when |values|^params
/// exceeds options.budget. Results depend only on (options minus jobs).
ShapeSetReport shape_set(const Partition& mu, const ShapeSetOptions& options);

/// Largest nilpotency index over `trials` random samples of full_pattern(mu).
int sampled_max_nil(const Partition& mu, std::uint64_t trials, PrimeField field = PrimeField{},
                    std::uint64_t seed = 0, int jobs = 1);

/// J_{mu_1}^{s_1} + ... + J_{mu_t}^{s_t} as a block-diagonal direct sum.
/// Throws std::domain_error unless 1 <= s_i <= mu_i.
FieldMatrix expjor2_witness(const Partition& mu, const std::vector<int>& s,
                            PrimeField field = PrimeField{});

struct FixedWitness {
  std::string name;
  Partition mu;          // Jordan shape of the matrix it commutes with
  FieldMatrix matrix;
  Partition expected;    // its own Jordan shape
};

/// Five hand-built matrices with known shapes: three 12x12 matrices for
/// mu = (4,3,2,2,1) and two 8x8 matrices for mu = (5,3).
std::vector<FixedWitness> fixed_witness_suite(PrimeField field = PrimeField{});

/// All seventeen shapes realised by nilpotent matrices commuting with J_5 + J_3.
std::vector<Partition> known_commutant_shapes_5_3();

}  // namespace nilcomm

#endif  // NILCOMM_ORACLE_HPP
