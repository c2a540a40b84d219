#include <doctest.h>

#include <random>
#include <sstream>
#include <stdexcept>

#include "nilcomm/field_matrix.hpp"
#include "nilcomm/oracle.hpp"
#include "nilcomm/partition.hpp"

using namespace nilcomm;

TEST_SUITE("linalg") {

TEST_CASE("prime field arithmetic") {
  CHECK(is_prime(2));
  CHECK(is_prime(kDefaultPrime));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(2147483649ULL));
  const PrimeField f;
  CHECK(f.prime() == 2147483647ULL);
  CHECK(f.mul(f.inverse(12345), 12345) == 1);
  CHECK(f.from_signed(-1) == f.prime() - 1);
  CHECK(f.to_signed(f.from_signed(-7)) == -7);
  CHECK(f.pow(3, f.prime() - 1) == 1);
  CHECK_THROWS_AS(f.inverse(0), std::domain_error);
  CHECK_THROWS_AS(PrimeField(15), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(1ULL << 32), std::invalid_argument);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 5; ++i) {
    const auto p = random_prime(rng);
    CHECK(is_prime(p));
    CHECK(p >= (1ULL << 30));
    CHECK(p < (1ULL << 31));
  }
}

TEST_CASE("jordan matrices") {
  const PrimeField f;
  CHECK(jordan_matrix(Partition({2}), f) == FieldMatrix::from_rows({{0, 1}, {0, 0}}, f));
  CHECK(jordan_matrix(Partition({1, 1}), f).is_zero());
  for (int n = 1; n <= 12; ++n) {
    for (const auto& mu : partitions_of(n)) CHECK(shape_of(jordan_matrix(mu, f)) == mu);
  }
}

TEST_CASE("rank") {
  const PrimeField f;
  CHECK(rank(FieldMatrix(4, f)) == 0);
  CHECK(rank(jordan_matrix(Partition({6}), f)) == 5);
  std::mt19937_64 rng(11);
  FieldMatrix u = FieldMatrix::identity(7, f);
  for (int r = 0; r < 7; ++r) {
    for (int c = r + 1; c < 7; ++c) u(r, c) = f.random_nonzero(rng);
  }
  CHECK(rank(u) == 7);
  CHECK(rank(FieldMatrix::from_rows({{1, 2}, {2, 4}}, f)) == 1);
}

TEST_CASE("shape of powers of a single block") {
  const PrimeField f;
  for (int n = 1; n <= 12; ++n) {
    const FieldMatrix j = jordan_matrix(Partition({n}), f);
    for (int k = 1; k <= n; ++k) CHECK(shape_of(power(j, k)) == rpt(n, k));
  }
  CHECK(shape_of(power(jordan_matrix(Partition({5}), f), 2)) == Partition({3, 2}));
  CHECK(shape_of(FieldMatrix(3, f)) == Partition({1, 1, 1}));
}

TEST_CASE("nilpotency index") {
  const PrimeField f;
  CHECK(nilpotency_index(jordan_matrix(Partition({7}), f)) == 7);
  CHECK(nilpotency_index(FieldMatrix(3, f)) == 1);
  for (const auto& w : fixed_witness_suite(f)) {
    CHECK(nilpotency_index(w.matrix) == shape_of(w.matrix).largest());
  }
  CHECK_THROWS_WITH_AS(nilpotency_index(FieldMatrix::identity(2, f)), "not nilpotent", std::runtime_error);
  CHECK_THROWS_WITH_AS(shape_of(FieldMatrix::identity(2, f)), "not nilpotent", std::runtime_error);
}

TEST_CASE("rank profile drops are weakly decreasing") {
  const PrimeField f;
  std::mt19937_64 rng(5);
  for (int round = 0; round < 50; ++round) {
    const int n = 2 + static_cast<int>(rng() % 9);
    FieldMatrix m(n, f);
    for (int r = 0; r < n; ++r) {
      for (int c = r + 1; c < n; ++c) {
        if (rng() % 3 == 0) m(r, c) = f.random_nonzero(rng);
      }
    }
    const auto profile = rank_profile(m);
    REQUIRE(profile.front() == n);
    REQUIRE(profile.back() == 0);
    for (std::size_t k = 2; k < profile.size(); ++k) {
      CHECK(profile[k - 2] - profile[k - 1] >= profile[k - 1] - profile[k]);
    }
    CHECK(shape_of(m).size() == n);
  }
}

TEST_CASE("arithmetic") {
  const PrimeField f;
  const auto a = FieldMatrix::from_rows({{1, 2}, {3, 4}}, f);
  const auto b = FieldMatrix::from_rows({{0, 1}, {-1, 0}}, f);
  CHECK((a * b).to_signed_rows() == std::vector<std::vector<std::int64_t>>{{-2, 1}, {-4, 3}});
  CHECK((a + b - b) == a);
  CHECK(power(a, 0) == FieldMatrix::identity(2, f));
  CHECK_FALSE(commutes(a, b));
  CHECK(commutes(a, a * a));
  CHECK_THROWS_AS(a * FieldMatrix(3, f), std::invalid_argument);
}

TEST_CASE("matrix I/O") {
  const PrimeField f;
  std::istringstream in("# comment\n0 1 -1\n0 0 2\n0 0 0\n");
  const auto m = read_matrix(in, f);
  CHECK(m.dim() == 3);
  CHECK(m.to_signed_rows()[0][2] == -1);
  std::ostringstream out;
  write_matrix(out, m);
  std::istringstream back(out.str());
  CHECK(read_matrix(back, f) == m);

  std::istringstream ragged("0 1\n0\n");
  CHECK_THROWS_AS(read_matrix(ragged, f), std::invalid_argument);
  std::istringstream junk("0 z\n0 0\n");
  CHECK_THROWS_AS(read_matrix(junk, f), std::invalid_argument);
}

}
