#include <doctest.h>

#include <map>
#include <random>
#include <stdexcept>

#include "nilcomm/commutant.hpp"
#include "nilcomm/digraph.hpp"
#include "nilcomm/field_matrix.hpp"
#include "nilcomm/partition.hpp"
#include "oracles.hpp"

using namespace nilcomm;

namespace {

const std::vector<ToeplitzParam> kNineLetter = {{1, 1, 2}, {1, 2, 0}, {1, 2, 2}, {2, 1, 1}, {2, 3, 0},
                                             {2, 3, 1}, {3, 4, 1}, {4, 2, 0}, {5, 3, 0}};

}  // namespace

TEST_SUITE("commutant") {

TEST_CASE("admissibility and placement") {
  const Partition mu({4, 3, 2, 2, 1});
  CHECK(is_admissible(mu, {1, 2, 0}));
  CHECK_FALSE(is_admissible(mu, {3, 3, 0}));
  CHECK_FALSE(is_admissible(mu, {4, 3, 0}));
  CHECK(is_admissible(mu, {3, 4, 0}));
  CHECK_FALSE(is_admissible(mu, {1, 2, 3}));
  CHECK_FALSE(is_admissible(mu, {0, 1, 0}));
  CHECK(diagonal_offset(mu, {5, 3, 0}) == 1);
  CHECK(diagonal_offset(mu, {1, 2, 2}) == 2);
  CHECK(diagonal_length(mu, {1, 2, 2}) == 1);
  CHECK_THROWS_AS(CommutantPattern(mu, {{2, 2, 0}}), std::invalid_argument);
}

TEST_CASE("full pattern sizes") {
  const auto p53 = full_pattern(Partition({5, 3}));
  CHECK(p53.size() == 12);
  const std::vector<ToeplitzParam> expected53 = {
      {1, 1, 1}, {1, 1, 2}, {1, 1, 3}, {1, 1, 4}, {1, 2, 0}, {1, 2, 1}, {1, 2, 2},
      {2, 1, 0}, {2, 1, 1}, {2, 1, 2}, {2, 2, 1}, {2, 2, 2}};
  CHECK(p53.params() == expected53);
  CHECK(full_pattern(Partition({4, 2})).size() == 8);
  const auto p11 = full_pattern(Partition({1, 1}));
  REQUIRE(p11.size() == 1);
  CHECK(p11.params().front() == ToeplitzParam{1, 2, 0});
  for (int n = 1; n <= 10; ++n) {
    for (const auto& mu : partitions_of(n)) CHECK(full_pattern(mu).size() == full_pattern_size(mu));
  }
}

TEST_CASE("parameter count matches the linear-system dimension") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& mu : partitions_of(n)) {
      CAPTURE(mu.to_string());
      CHECK(static_cast<int>(full_pattern_size(mu)) == oracle::restricted_commutant_dimension(mu));
    }
  }
}

TEST_CASE("the (4,2) example matrix") {
  const PrimeField f;
  const Partition mu({4, 2});
  const CommutantPattern pattern(mu, {{1, 1, 2}, {1, 2, 0}, {2, 1, 1}, {2, 2, 1}});
  std::map<ToeplitzParam, std::uint64_t> values;
  for (const auto& p : pattern.params()) values[p] = 1;
  const auto a = instantiate(pattern, values, f);
  const FieldMatrix expected = FieldMatrix::from_rows({{0, 0, 1, 0, 1, 0},
                                                       {0, 0, 0, 1, 0, 1},
                                                       {0, 0, 0, 0, 0, 0},
                                                       {0, 0, 0, 0, 0, 0},
                                                       {0, 0, 0, 1, 0, 1},
                                                       {0, 0, 0, 0, 0, 0}},
                                                      f);
  CHECK(a == expected);
  CHECK(commutes(a, jordan_matrix(mu, f)));
  const auto g = from_pattern(a.support());
  const std::vector<Edge> six_vertex = {{1, 3}, {1, 5}, {2, 4}, {2, 6}, {5, 4}, {5, 6}};
  CHECK(g.edges() == six_vertex);
}

TEST_CASE("the nine-letter 12x12 matrix") {
  const PrimeField f;
  const Partition mu({4, 3, 2, 2, 1});
  const CommutantPattern pattern(mu, kNineLetter);
  std::map<ToeplitzParam, std::uint64_t> values;
  for (std::size_t i = 0; i < kNineLetter.size(); ++i) values[kNineLetter[i]] = i + 1;  // a=1 .. i=9
  const auto a = instantiate(pattern, values, f);
  const int A = 1, B = 2, C = 3, D = 4, E = 5, F = 6, G = 7, H = 8, I = 9;
  const FieldMatrix expected = FieldMatrix::from_rows({
      {0, 0, A, 0, B, 0, C, 0, 0, 0, 0, 0},
      {0, 0, 0, A, 0, B, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, B, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, D, 0, 0, 0, 0, E, F, 0, 0, 0},
      {0, 0, 0, D, 0, 0, 0, 0, E, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, G, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, H, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, H, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, I, 0, 0, 0},
  }, f);
  CHECK(a == expected);
}

TEST_CASE("instantiation errors") {
  const Partition mu({3, 1});
  const CommutantPattern pattern(mu, {{1, 1, 1}});
  std::map<ToeplitzParam, std::uint64_t> stray{{{1, 2, 0}, 1}};
  CHECK_THROWS_AS(instantiate(pattern, stray), std::invalid_argument);
  const std::vector<std::uint64_t> too_many{1, 2};
  CHECK_THROWS_AS(instantiate(pattern, too_many), std::invalid_argument);
  CHECK(instantiate(pattern, std::map<ToeplitzParam, std::uint64_t>{}).is_zero());
}

TEST_CASE("random instantiations commute and are nilpotent") {
  const PrimeField f;
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 12; n += (n < 8 ? 1 : 2)) {
    const auto all = partitions_of(n);
    for (int round = 0; round < 20; ++round) {
      const auto& mu = all[rng() % all.size()];
      const auto pattern = full_pattern(mu);
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<std::uint64_t> values(pattern.size());
        for (auto& v : values) v = rng() % 3 == 0 ? 0 : f.random_nonzero(rng);
        const auto a = instantiate(pattern, values, f);
        CHECK(commutes(a, jordan_matrix(mu, f)));
        CHECK(commutes_with_jordan(a, mu));
        CHECK(power(a, n).is_zero());
      }
    }
  }
}

TEST_CASE("sampling") {
  const PrimeField f;
  for (int n = 1; n <= 8; ++n) {
    const auto r = rp_set(n);
    const auto pattern = full_pattern(Partition({n}));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto a = sample(pattern, seed, f);
      CHECK(std::find(r.begin(), r.end(), shape_of(a)) != r.end());
      CHECK(a == sample(pattern, seed, f));
    }
  }
  const Partition ones({1, 1, 1, 1, 1});
  const auto a = sample(full_pattern(ones), 4, f);
  for (int r = 0; r < 5; ++r) {
    for (int c = 0; c <= r; ++c) CHECK(a(r, c) == 0);
  }
  CHECK(shape_of(a).largest() <= 5);
}

TEST_CASE("commutes_with_jordan rejects non-commuting matrices") {
  const PrimeField f;
  const Partition mu({3, 2});
  FieldMatrix a(5, f);
  a(0, 3) = 1;
  CHECK_FALSE(commutes_with_jordan(a, mu));
  CHECK(commutes_with_jordan(jordan_matrix(mu, f), mu));
}

}
