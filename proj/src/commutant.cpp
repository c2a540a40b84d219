#include "nilcomm/commutant.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace nilcomm {

namespace {

std::string describe(const ToeplitzParam& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + "," + std::to_string(p.k) + ")";
}

}  // namespace

int diagonal_offset(const Partition& mu, const ToeplitzParam& param) {
  return param.k + std::max(0, mu.part(param.y) - mu.part(param.x));
}

int diagonal_length(const Partition& mu, const ToeplitzParam& param) {
  return std::min(mu.part(param.x), mu.part(param.y)) - param.k;
}

bool is_admissible(const Partition& mu, const ToeplitzParam& param) {
  const int t = mu.length();
  if (param.x < 1 || param.x > t || param.y < 1 || param.y > t) return false;
  if (param.k < 0 || param.k >= std::min(mu.part(param.x), mu.part(param.y))) return false;
  return !(param.k == 0 && mu.part(param.x) == mu.part(param.y) && param.x >= param.y);
}

CommutantPattern::CommutantPattern(Partition mu, std::vector<ToeplitzParam> params)
    : mu_(std::move(mu)), params_(std::move(params)) {
  for (const auto& p : params_) {
    if (!is_admissible(mu_, p)) {
      throw std::invalid_argument("parameter " + describe(p) + " is not admissible for (" +
                                  mu_.to_string() + ")");
    }
  }
  std::sort(params_.begin(), params_.end());
  params_.erase(std::unique(params_.begin(), params_.end()), params_.end());
}

bool CommutantPattern::contains(const ToeplitzParam& param) const {
  return std::binary_search(params_.begin(), params_.end(), param);
}

CommutantPattern full_pattern(const Partition& mu) {
  std::vector<ToeplitzParam> params;
  for (int x = 1; x <= mu.length(); ++x) {
    for (int y = 1; y <= mu.length(); ++y) {
      for (int k = 0; k < std::min(mu.part(x), mu.part(y)); ++k) {
        ToeplitzParam p{x, y, k};
        if (is_admissible(mu, p)) params.push_back(p);
      }
    }
  }
  return CommutantPattern(mu, std::move(params));
}

std::size_t full_pattern_size(const Partition& mu) {
  std::size_t total = 0;
  for (int x = 1; x <= mu.length(); ++x) {
    for (int y = 1; y <= mu.length(); ++y) {
      total += static_cast<std::size_t>(std::min(mu.part(x), mu.part(y)));
    }
  }
  for (const auto& g : multiplicity_form(mu).groups) {
    total -= static_cast<std::size_t>(g.multiplicity * (g.multiplicity + 1) / 2);
  }
  return total;
}

namespace detail {

std::vector<int> block_offsets(const Partition& mu) {
  std::vector<int> offsets(static_cast<std::size_t>(mu.length()) + 1, 0);
  for (int x = 1; x <= mu.length(); ++x) {
    offsets[static_cast<std::size_t>(x)] = offsets[static_cast<std::size_t>(x - 1)] + mu.part(x);
  }
  return offsets;
}

void place(const CommutantPattern& pattern, std::span<const std::uint64_t> values,
           const std::vector<int>& offsets, FieldMatrix& out) {
  const Partition& mu = pattern.mu();
  const auto& params = pattern.params();
  for (std::size_t i = 0; i < params.size(); ++i) {
    const std::uint64_t v = values[i];
    if (v == 0) continue;
    const auto& p = params[i];
    const int row0 = offsets[static_cast<std::size_t>(p.x - 1)];
    const int col0 = offsets[static_cast<std::size_t>(p.y - 1)] + diagonal_offset(mu, p);
    const int len = diagonal_length(mu, p);
    for (int r = 0; r < len; ++r) out(row0 + r, col0 + r) = v;
  }
}

}  // namespace detail

bool commutes_with_jordan(const FieldMatrix& a, const Partition& mu) {
  const int n = a.dim();
  if (n != mu.size()) return false;
  // first/last flat index of each block
  std::vector<bool> first(static_cast<std::size_t>(n), false);
  std::vector<bool> last(static_cast<std::size_t>(n), false);
  int offset = 0;
  for (int b : mu.parts()) {
    first[static_cast<std::size_t>(offset)] = true;
    last[static_cast<std::size_t>(offset + b - 1)] = true;
    offset += b;
  }
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const std::uint64_t aj = first[static_cast<std::size_t>(c)] ? 0 : a(r, c - 1);
      const std::uint64_t ja = last[static_cast<std::size_t>(r)] ? 0 : a(r + 1, c);
      if (aj != ja) return false;
    }
  }
  return true;
}

FieldMatrix instantiate(const CommutantPattern& pattern, std::span<const std::uint64_t> values,
                        PrimeField field) {
  if (values.size() != pattern.size()) {
    throw std::invalid_argument("instantiate: got " + std::to_string(values.size()) +
                                " values for " + std::to_string(pattern.size()) + " parameters");
  }
  const Partition& mu = pattern.mu();
  FieldMatrix a(mu.size(), field);
  std::vector<std::uint64_t> reduced(values.begin(), values.end());
  for (auto& v : reduced) v %= field.prime();
  detail::place(pattern, reduced, detail::block_offsets(mu), a);
  if (!commutes_with_jordan(a, mu)) {
    throw std::logic_error("instantiated matrix does not commute with jordan_matrix(" +
                           mu.to_string() + ")");
  }
  if (!power(a, mu.size()).is_zero()) {
    throw std::logic_error("instantiated matrix is not nilpotent");
  }
  return a;
}

FieldMatrix instantiate(const CommutantPattern& pattern,
                        const std::map<ToeplitzParam, std::uint64_t>& values, PrimeField field) {
  std::vector<std::uint64_t> dense(pattern.size(), 0);
  for (const auto& [param, value] : values) {
    auto it = std::lower_bound(pattern.params().begin(), pattern.params().end(), param);
    if (it == pattern.params().end() || *it != param) {
      throw std::invalid_argument("value given for parameter " + describe(param) +
                                  " which is not in the pattern");
    }
    dense[static_cast<std::size_t>(it - pattern.params().begin())] = value;
  }
  return instantiate(pattern, dense, field);
}

FieldMatrix sample(const CommutantPattern& pattern, std::uint64_t seed, PrimeField field) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> values(pattern.size());
  for (auto& v : values) v = field.random_nonzero(rng);
  FieldMatrix a(pattern.mu().size(), field);
  detail::place(pattern, values, detail::block_offsets(pattern.mu()), a);
  if (!commutes_with_jordan(a, pattern.mu())) {
    throw std::logic_error("sampled matrix does not commute with its Jordan matrix");
  }
  return a;
}

}  // namespace nilcomm
