#include <doctest.h>

#include <algorithm>

#include "nilcomm/maxnil.hpp"
#include "nilcomm/partition.hpp"

using namespace nilcomm;

TEST_SUITE("maxnil") {

TEST_CASE("golden values") {
  const auto r = max_nilpotency_index(Partition({4, 3, 2, 2, 1}));
  CHECK(r.value == 9);
  std::vector<int> values;
  for (const auto& c : r.candidates) values.push_back(c.value);
  CHECK(values == std::vector<int>{7, 9, 9, 9});
  CHECK(r.argmax_i == 1);
  CHECK(max_nilpotency_index(Partition({6, 4})).value == 6);
  CHECK(max_nilpotency_index(Partition({4, 3, 3})).value == 10);
  CHECK(max_nilpotency_index(Partition({3, 3, 2})).value == 8);
  for (int n = 1; n <= 12; ++n) CHECK(max_nilpotency_index(Partition({n})).value == n);
}

TEST_CASE("candidate invariants") {
  for (int n = 1; n <= 12; ++n) {
    for (const auto& mu : partitions_of(n)) {
      const auto r = max_nilpotency_index(mu);
      CHECK(r.value >= mu.largest());
      CHECK(r.value <= n);
      int best = 0;
      for (const auto& c : r.candidates) {
        CHECK((c.i == 0 || mu.part(c.i) != mu.part(c.i + 1)));
        CHECK(mu.part(c.i + 1) - mu.part(c.i + c.r) <= 1);
        CHECK((c.i + c.r == mu.length() || mu.part(c.i + 1) - mu.part(c.i + c.r + 1) >= 2));
        CHECK(c.value == 2 * c.i + mu.sum(c.i + 1, c.i + c.r));
        best = std::max(best, c.value);
      }
      CHECK(best == r.value);
    }
  }
}

TEST_CASE("full value exactly on rp_set") {
  for (int n = 1; n <= 14; ++n) {
    const auto r = rp_set(n);
    for (const auto& mu : partitions_of(n)) {
      const bool in_r = std::find(r.begin(), r.end(), mu) != r.end();
      CHECK(in_r == (max_nilpotency_index(mu).value == n));
    }
  }
}

}
