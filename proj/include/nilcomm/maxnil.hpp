#ifndef NILCOMM_MAXNIL_HPP
#define NILCOMM_MAXNIL_HPP

#include <vector>

#include "nilcomm/partition.hpp"

namespace nilcomm {

struct MaxNilCandidate {
  int i = 0;  // parts mu_1..mu_i are skipped
  int r = 1;  // mu_{i+1}..mu_{i+r} is the widest run with spread <= 1
  int value = 0;
};

struct MaxNilReport {
  int value = 0;
  int argmax_i = 0;  // smallest maximizing i
  std::vector<MaxNilCandidate> candidates;
};

/// Largest nilpotency index among nilpotent matrices commuting with a
/// nilpotent matrix of Jordan shape mu:
///
///   max { 2i + mu_{i+1} + ... + mu_{i+r} : mu_i != mu_{i+1}, mu_{i+1} - mu_{i+r} <= 1 }
///
/// over 0 <= i < t with mu_0 = mu_1 + 1 and r maximal for each i.
MaxNilReport max_nilpotency_index(const Partition& mu);

}  // namespace nilcomm

#endif  // NILCOMM_MAXNIL_HPP
