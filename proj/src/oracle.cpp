#include "nilcomm/oracle.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

#include "nilcomm/seeding.hpp"

namespace nilcomm {

std::string to_string(SampleMode mode) {
  switch (mode) {
    case SampleMode::random: return "random";
    case SampleMode::exhaustive: return "exhaustive";
    case SampleMode::value_sample: return "value-sample";
  }
  return "?";
}

SampleMode parse_sample_mode(const std::string& text) {
  if (text == "random") return SampleMode::random;
  if (text == "exhaustive") return SampleMode::exhaustive;
  if (text == "value-sample") return SampleMode::value_sample;
  throw std::invalid_argument("unknown sample mode '" + text +
                              "' (expected random, exhaustive or value-sample)");
}

std::vector<Partition> ShapeSetReport::observed() const {
  std::vector<Partition> out;
  for (const auto& [shape, witness] : shapes) out.push_back(shape);
  return out;
}

FieldMatrix ShapeSetReport::witness_matrix(const Partition& shape) const {
  auto it = shapes.find(shape);
  if (it == shapes.end()) throw std::out_of_range("shape " + shape.to_string() + " was not observed");
  return instantiate(pattern, it->second.values, PrimeField(prime));
}

int ShapeSetReport::max_nilpotency() const {
  int best = 0;
  for (const auto& [shape, witness] : shapes) best = std::max(best, shape.largest());
  return best;
}

namespace {

// Random-mode trials are drawn in fixed blocks, each from its own seeded
// stream, so the trial -> assignment map ignores the worker count.
constexpr std::uint64_t kBlock = 4096;

using LocalShapes = std::map<Partition, ShapeWitness, std::greater<>>;

struct Worker {
  const CommutantPattern& pattern;
  const ShapeSetOptions& options;
  std::vector<std::uint64_t> lifted;  // options.values in F_p
  std::vector<int> offsets;
  LocalShapes found;

  void record(std::uint64_t trial, const std::vector<std::uint64_t>& values) {
    FieldMatrix a(pattern.mu().size(), options.field);
    detail::place(pattern, values, offsets, a);
    Partition shape = shape_of(a);
    auto it = found.find(shape);
    if (it == found.end()) {
      found.emplace(std::move(shape), ShapeWitness{trial, values});
    } else if (trial < it->second.trial) {
      it->second = ShapeWitness{trial, values};
    }
  }

  void run_random_blocks(std::uint64_t trials, int worker, int jobs) {
    std::vector<std::uint64_t> values(pattern.size());
    const std::uint64_t blocks = (trials + kBlock - 1) / kBlock;
    for (std::uint64_t b = static_cast<std::uint64_t>(worker); b < blocks; b += static_cast<std::uint64_t>(jobs)) {
      std::mt19937_64 rng(derive_seed(options.seed, b));
      std::uniform_int_distribution<std::size_t> pick(0, lifted.empty() ? 0 : lifted.size() - 1);
      const std::uint64_t end = std::min(trials, (b + 1) * kBlock);
      for (std::uint64_t trial = b * kBlock; trial < end; ++trial) {
        for (auto& v : values) {
          v = options.mode == SampleMode::random ? options.field.random_nonzero(rng) : lifted[pick(rng)];
        }
        record(trial, values);
      }
    }
  }

  void run_exhaustive(std::uint64_t total, int worker, int jobs) {
    const std::uint64_t base = lifted.size();
    std::vector<std::uint64_t> values(pattern.size());
    for (std::uint64_t trial = static_cast<std::uint64_t>(worker); trial < total; trial += static_cast<std::uint64_t>(jobs)) {
      std::uint64_t rest = trial;
      for (auto& v : values) {
        v = lifted[rest % base];
        rest /= base;
      }
      record(trial, values);
    }
  }
};

}  // namespace

ShapeSetReport shape_set(const Partition& mu, const ShapeSetOptions& options) {
  if (options.jobs < 1) throw std::invalid_argument("jobs must be at least 1");
  ShapeSetReport report{full_pattern(mu)};
  report.mode = options.mode;
  report.prime = options.field.prime();
  report.seed = options.seed;
  if (options.mode != SampleMode::random) {
    if (options.values.empty()) throw std::invalid_argument("value set is empty");
    report.values = options.values;
  }

  std::vector<std::uint64_t> lifted;
  for (auto v : report.values) lifted.push_back(options.field.from_signed(v));

  std::uint64_t trials = options.budget;
  if (options.mode == SampleMode::exhaustive) {
    // |values|^params, saturating.
    std::uint64_t total = 1;
    bool overflow = false;
    for (std::size_t i = 0; i < report.pattern.size() && !overflow; ++i) {
      if (total > std::numeric_limits<std::uint64_t>::max() / lifted.size()) {
        overflow = true;
      } else {
        total *= lifted.size();
      }
    }
    if (overflow || total > options.budget) {
      throw std::length_error("exhaustive enumeration needs " + std::to_string(lifted.size()) + "^" +
                              std::to_string(report.pattern.size()) +
                              " assignments, more than the budget " + std::to_string(options.budget));
    }
    trials = total;
  }
  report.trials = trials;

  std::vector<Worker> workers;
  for (int w = 0; w < options.jobs; ++w) {
    workers.push_back(Worker{report.pattern, options, lifted, detail::block_offsets(mu), {}});
  }
  auto body = [&](int w) {
    if (options.mode == SampleMode::exhaustive) {
      workers[static_cast<std::size_t>(w)].run_exhaustive(trials, w, options.jobs);
    } else {
      workers[static_cast<std::size_t>(w)].run_random_blocks(trials, w, options.jobs);
    }
  };
  if (options.jobs == 1) {
    body(0);
  } else {
    std::vector<std::jthread> threads;
    for (int w = 0; w < options.jobs; ++w) threads.emplace_back(body, w);
  }

  for (auto& worker : workers) {
    for (auto& [shape, witness] : worker.found) {
      auto it = report.shapes.find(shape);
      if (it == report.shapes.end()) {
        report.shapes.emplace(shape, std::move(witness));
      } else if (witness.trial < it->second.trial) {
        it->second = std::move(witness);
      }
    }
  }
  return report;
}

int sampled_max_nil(const Partition& mu, std::uint64_t trials, PrimeField field, std::uint64_t seed,
                    int jobs) {
  if (trials < 1) throw std::invalid_argument("sampled_max_nil needs at least one trial");
  ShapeSetOptions options;
  options.mode = SampleMode::random;
  options.budget = trials;
  options.field = field;
  options.seed = seed;
  options.jobs = jobs;
  return shape_set(mu, options).max_nilpotency();
}

FieldMatrix expjor2_witness(const Partition& mu, const std::vector<int>& s, PrimeField field) {
  if (static_cast<int>(s.size()) != mu.length()) {
    throw std::domain_error("expjor2_witness: need one exponent per block");
  }
  FieldMatrix a(mu.size(), field);
  int offset = 0;
  for (int x = 1; x <= mu.length(); ++x) {
    const int size = mu.part(x);
    const int power = s[static_cast<std::size_t>(x - 1)];
    if (power < 1 || power > size) {
      throw std::domain_error("expjor2_witness: exponent " + std::to_string(power) +
                              " outside 1.." + std::to_string(size) + " for block " +
                              std::to_string(x));
    }
    for (int r = 0; r + power < size; ++r) a(offset + r, offset + r + power) = 1;
    offset += size;
  }
  return a;
}

std::vector<FixedWitness> fixed_witness_suite(PrimeField field) {
  using Rows = std::vector<std::vector<std::int64_t>>;
  // Letters a..g of the 12x12 family set to 1.
  const Rows a1 = {
      {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
      {0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0},
      {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
      {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
  };
  Rows a2 = a1;
  a2[0][1] = a2[1][2] = a2[2][3] = 1;
  Rows a3 = a1;
  a3[9][11] = 1;
  a3[11][8] = 1;

  const Rows b1 = {
      {0, 1, 0, 0, 0, -1, 0, 0},
      {0, 0, 1, 0, 0, 0, -1, 0},
      {0, 0, 0, 1, 0, 0, 0, -1},
      {0, 0, 0, 0, 1, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 1, 0, 0, 0, -1, 0},
      {0, 0, 0, 1, 0, 0, 0, -1},
      {0, 0, 0, 0, 1, 0, 0, 0},
  };
  const Rows b2 = {
      {0, 1, 0, 0, 0, 1, 0, 0},
      {0, 0, 1, 0, 0, 0, 1, 0},
      {0, 0, 0, 1, 0, 0, 0, 1},
      {0, 0, 0, 0, 1, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, -1, 1, 0, 0, -1, 1},
      {0, 0, 0, -1, 1, 0, 0, -1},
      {0, 0, 0, 0, -1, 0, 0, 0},
  };

  const Partition mu12({4, 3, 2, 2, 1});
  const Partition mu8({5, 3});
  return {
      {"A1 (12x12)", mu12, FieldMatrix::from_rows(a1, field), Partition({9, 1, 1, 1})},
      {"A2 (12x12)", mu12, FieldMatrix::from_rows(a2, field), Partition({9, 2, 1})},
      {"A3 (12x12)", mu12, FieldMatrix::from_rows(a3, field), Partition({9, 3})},
      {"A1 (8x8)", mu8, FieldMatrix::from_rows(b1, field), Partition({2, 2, 2, 2})},
      {"A2 (8x8)", mu8, FieldMatrix::from_rows(b2, field), Partition({3, 3, 1, 1})},
  };
}

std::vector<Partition> known_commutant_shapes_5_3() {
  return {
      Partition({5, 3}),          Partition({5, 2, 1}),       Partition({5, 1, 1, 1}),
      Partition({4, 4}),          Partition({4, 2, 2}),       Partition({4, 2, 1, 1}),
      Partition({4, 1, 1, 1, 1}), Partition({3, 3, 2}),       Partition({3, 3, 1, 1}),
      Partition({3, 2, 2, 1}),    Partition({3, 2, 1, 1, 1}), Partition({3, 1, 1, 1, 1, 1}),
      Partition({2, 2, 2, 2}),    Partition({2, 2, 2, 1, 1}), Partition({2, 2, 1, 1, 1, 1}),
      Partition({2, 1, 1, 1, 1, 1, 1}), Partition({1, 1, 1, 1, 1, 1, 1, 1}),
  };
}

}  // namespace nilcomm
