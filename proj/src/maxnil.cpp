#include "nilcomm/maxnil.hpp"

#include <stdexcept>

namespace nilcomm {

MaxNilReport max_nilpotency_index(const Partition& mu) {
  if (mu.empty()) throw std::invalid_argument("max_nilpotency_index of the empty partition");
  MaxNilReport report;
  const int t = mu.length();
  for (int i = 0; i < t; ++i) {
    if (mu.part(i) == mu.part(i + 1)) continue;
    int r = 1;
    while (i + r + 1 <= t && mu.part(i + 1) - mu.part(i + r + 1) <= 1) ++r;
    const int value = 2 * i + mu.sum(i + 1, i + r);
    report.candidates.push_back({i, r, value});
    if (value > report.value) {
      report.value = value;
      report.argmax_i = i;
    }
  }
  return report;
}

}  // namespace nilcomm
