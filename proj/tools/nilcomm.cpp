// nilcomm: command-line front end for the nilpotent commutant library.
// Exit status: 0 success, 1 verification failure, 2 usage or input error.
#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nilcomm/commutant.hpp"
#include "nilcomm/digraph.hpp"
#include "nilcomm/field_matrix.hpp"
#include "nilcomm/json_io.hpp"
#include "nilcomm/maxnil.hpp"
#include "nilcomm/nb_digraph.hpp"
#include "nilcomm/oracle.hpp"
#include "nilcomm/partition.hpp"

using namespace nilcomm;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

// Input problems detected after argument parsing; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string partition;
  std::string file;
  std::string prime_text = std::to_string(kDefaultPrime);
  std::uint64_t seed = 0;
  std::uint64_t budget = 1000;
  int trials = 10;
  int jobs = 1;
  int n = 0;
  int t = 0;
  int k = 0;
  std::string mode = "random";
  std::string values = "-1,0,1";
  std::string params_file;
  std::string dot_path;
  bool json = false;
};

Partition partition_arg(const std::string& text) {
  try {
    return parse_partition(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

PrimeField field_arg(const Options& o) {
  if (o.prime_text == "random") {
    std::random_device device;
    std::mt19937_64 rng((static_cast<std::uint64_t>(device()) << 32) ^ device());
    return PrimeField(random_prime(rng));
  }
  std::uint64_t p = 0;
  const auto& s = o.prime_text;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), p);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError("bad prime '" + s + "' (expected an integer or 'random')");
  }
  try {
    return PrimeField(p);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<std::int64_t> values_arg(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw UsageError("bad value '" + token + "' in --values");
    }
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("--values is empty");
  return out;
}

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return in;
}

template <typename Reader>
auto read_input(const std::string& path, Reader reader) {
  auto in = open_file(path);
  try {
    return reader(in);
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void write_dot(const std::string& path, const std::string& dot) {
  if (path == "-") {
    std::cout << dot;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << dot;
}

void print_header(const PrimeField& field, std::uint64_t seed) {
  std::cout << "# prime=" << field.prime() << " seed=" << seed << "\n";
}

std::string join(const std::vector<Partition>& set) {
  std::string out;
  for (const auto& p : set) out += p.to_string() + "\n";
  return out;
}

std::string vertex_list(const std::vector<BlockVertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? ", " : "") + vs[i].to_string();
  return out;
}

// ---- paper-suite --------------------------------------------------------

struct SuiteRow {
  std::string name;
  std::function<bool()> check;
};

int run_paper_suite(const PrimeField& field, std::uint64_t seed) {
  const Partition mu12({4, 3, 2, 2, 1});
  const Partition mu53({5, 3});
  const Partition mu64({6, 4});
  const AcyclicDigraph six_vertex(6, {{1, 3}, {1, 5}, {2, 4}, {2, 6}, {5, 4}, {5, 6}});
  std::vector<SuiteRow> rows = {
      {"maxnil (4,3,2,2,1) = 9", [&] { return max_nilpotency_index(mu12).value == 9; }},
      {"maxnil (6,4) = 6", [&] { return max_nilpotency_index(mu64).value == 6; }},
      {"maxnil (4,3,3) = 10", [] { return max_nilpotency_index(Partition({4, 3, 3})).value == 10; }},
      {"6-vertex example d_hat = 3,5,6", [&] { return delta_sequence(six_vertex).dhat == std::vector<int>{0, 3, 5, 6}; }},
      {"6-vertex example delta = (3,2,1)", [&] { return delta_sequence(six_vertex).as_partition() == Partition({3, 2, 1}); }},
      {"6-vertex example generic shape = (3,2,1)",
       [&] { return verify_gansner_saks(six_vertex, field, 10, seed).shape == Partition({3, 2, 1}); }},
      {"(3,3,2) in R((5,3)), (4,3,1) not",
       [&] {
         const auto r = rp_of_partition(mu53);
         return std::find(r.begin(), r.end(), Partition({3, 3, 2})) != r.end() &&
                std::find(r.begin(), r.end(), Partition({4, 3, 1})) == r.end() && r.size() == 11;
       }},
      {"r_B = 3 for (5^3,3^2,1^3)",
       [] { return basili_indices(Partition({5, 5, 5, 3, 3, 1, 1, 1})).r_b == 3; }},
      {"r_B = 3 for (5^3,4,3^2,2^4,1^3)",
       [] { return basili_indices(Partition({5, 5, 5, 4, 3, 3, 2, 2, 2, 2, 1, 1, 1})).r_b == 3; }},
      {"(4,3,3) B-path covers 10 vertices", [] { return b_path(Partition({4, 3, 3}), 1).length == 10; }},
  };
  const int expected_lengths[] = {7, 9, 9, 0, 9};
  for (int k : {1, 2, 3, 5}) {
    rows.push_back({"B_" + std::to_string(k) + "-path of (4,3,2,2,1) has length " +
                        std::to_string(expected_lengths[k - 1]),
                    [&, k] { return b_path(mu12, k).length == expected_lengths[k - 1]; }});
  }
  for (const auto& w : fixed_witness_suite(field)) {
    rows.push_back({w.name + " has shape " + to_exponent_string(w.expected), [w, field] {
                      return commutes(w.matrix, jordan_matrix(w.mu, field)) && shape_of(w.matrix) == w.expected;
                    }});
  }
  rows.push_back({"sampled max for (4,3,2,2,1) = 9",
                  [&] { return sampled_max_nil(mu12, 200, field, seed) == 9; }});
  rows.push_back({"sampled max for (6,4) = 6", [&] { return sampled_max_nil(mu64, 200, field, seed) == 6; }});
  rows.push_back({"(5,3) random shapes lie in the 17-element list", [&] {
                    ShapeSetOptions o;
                    o.field = field;
                    o.seed = seed;
                    const auto known = known_commutant_shapes_5_3();
                    for (const auto& s : shape_set(mu53, o).observed()) {
                      if (std::find(known.begin(), known.end(), s) == known.end()) return false;
                    }
                    return true;
                  }});
  rows.push_back({"(6,4): no (6,3,1) in 10^4 samples", [&] {
                    ShapeSetOptions o;
                    o.field = field;
                    o.seed = seed;
                    o.budget = 10000;
                    return !shape_set(mu64, o).shapes.contains(Partition({6, 3, 1}));
                  }});

  print_header(field, seed);
  int failed = 0;
  for (const auto& row : rows) {
    bool ok = false;
    try {
      ok = row.check();
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok) ++failed;
    std::printf("%-4s  %s\n", ok ? "PASS" : "FAIL", row.name.c_str());
  }
  std::printf("%zu/%zu passed\n", rows.size() - static_cast<std::size_t>(failed), rows.size());
  return failed == 0 ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nilpotent matrices commuting with a nilpotent Jordan matrix"};
  app.require_subcommand(0, 1);
  Options o;
  std::function<int()> action;

  auto add_prime = [&](CLI::App* sub) {
    sub->add_option("--prime", o.prime_text, "field prime below 2^31, or 'random'");
  };
  auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", o.seed, "random seed"); };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "emit JSON"); };
  auto add_dot = [&](CLI::App* sub) { sub->add_option("--dot", o.dot_path, "write DOT to this path ('-' for stdout)"); };

  auto* maxnil = app.add_subcommand("maxnil", "maximal nilpotency index over the commutant");
  maxnil->add_option("partition", o.partition)->required();
  add_json(maxnil);
  maxnil->callback([&] {
    action = [&] {
      const auto mu = partition_arg(o.partition);
      const auto report = max_nilpotency_index(mu);
      if (o.json) {
        std::cout << maxnil_to_json(mu, report).dump(2) << "\n";
        return kOk;
      }
      std::cout << report.value << "\n";
      for (const auto& c : report.candidates) {
        std::cout << "  i=" << c.i << " r=" << c.r << " value=" << c.value << (c.i == report.argmax_i ? " *" : "")
                  << "\n";
      }
      return kOk;
    };
  });

  auto* rp = app.add_subcommand("rp", "rpt(n,t); all t if t is omitted");
  rp->add_option("n", o.n)->required()->check(CLI::PositiveNumber);
  rp->add_option("t", o.t)->check(CLI::PositiveNumber);
  rp->callback([&] {
    action = [&] {
      if (o.t > o.n) throw UsageError("t=" + std::to_string(o.t) + " exceeds n=" + std::to_string(o.n));
      if (o.t > 0) {
        std::cout << rpt(o.n, o.t).to_string() << "\n";
      } else {
        for (int t = 1; t <= o.n; ++t) std::cout << rpt(o.n, t).to_string() << "\n";
      }
      return kOk;
    };
  });

  auto* rpset = app.add_subcommand("rpset", "the set R(n), reverse-lexicographic");
  rpset->add_option("n", o.n)->required()->check(CLI::PositiveNumber);
  rpset->callback([&] {
    action = [&] {
      std::cout << join(rp_set(o.n));
      return kOk;
    };
  });

  auto* rpof = app.add_subcommand("rpof", "the set R(mu) of ordered merges");
  rpof->add_option("partition", o.partition)->required();
  rpof->callback([&] {
    action = [&] {
      std::cout << join(rp_of_partition(partition_arg(o.partition)));
      return kOk;
    };
  });

  auto* basili = app.add_subcommand("basili", "r_B and the start indices k_i");
  basili->add_option("partition", o.partition)->required();
  basili->callback([&] {
    action = [&] {
      const auto b = basili_indices(partition_arg(o.partition));
      std::cout << "r_B=" << b.r_b << " k=";
      for (std::size_t i = 0; i < b.starts.size(); ++i) std::cout << (i ? "," : "") << b.starts[i];
      std::cout << "\n";
      return kOk;
    };
  });

  auto* pattern = app.add_subcommand("pattern", "full commutant pattern as JSON");
  pattern->add_option("partition", o.partition)->required();
  pattern->callback([&] {
    action = [&] {
      std::cout << pattern_to_json(full_pattern(partition_arg(o.partition))).dump(2) << "\n";
      return kOk;
    };
  });

  auto* shape = app.add_subcommand("shape", "Jordan shape of a nilpotent matrix file");
  shape->add_option("file", o.file)->required();
  add_prime(shape);
  shape->callback([&] {
    action = [&] {
      const auto field = field_arg(o);
      const auto m = read_input(o.file, [&](std::istream& in) { return read_matrix(in, field); });
      try {
        std::cout << shape_of(m).to_string() << "\n";
      } catch (const std::runtime_error& e) {
        throw UsageError(o.file + ": " + e.what());
      }
      return kOk;
    };
  });

  auto* delta = app.add_subcommand("delta", "Delta sequence of a digraph file");
  delta->add_option("file", o.file)->required();
  add_dot(delta);
  add_json(delta);
  delta->callback([&] {
    action = [&] {
      const auto g = read_input(o.file, [](std::istream& in) { return read_digraph(in); });
      const auto seq = delta_sequence(g);
      if (!o.dot_path.empty()) write_dot(o.dot_path, to_dot(g));
      if (o.json) {
        std::cout << json{{"dhat", seq.dhat}, {"delta", seq.delta}}.dump(2) << "\n";
      } else if (o.dot_path != "-") {
        std::cout << seq.as_partition().to_string() << "\n";
      }
      return kOk;
    };
  });

  auto* longest = app.add_subcommand("longest", "vertex count of a longest path in a digraph file");
  longest->add_option("file", o.file)->required();
  longest->callback([&] {
    action = [&] {
      const auto g = read_input(o.file, [](std::istream& in) { return read_digraph(in); });
      std::cout << longest_path(g) << "\n";
      return kOk;
    };
  });

  auto* bpath = app.add_subcommand("bpath", "the B_k-path of a partition");
  bpath->add_option("partition", o.partition)->required();
  bpath->add_option("k", o.k)->required()->check(CLI::PositiveNumber);
  add_json(bpath);
  bpath->callback([&] {
    action = [&] {
      const auto mu = partition_arg(o.partition);
      BPathReport r;
      try {
        r = b_path(mu, o.k);
      } catch (const std::domain_error& e) {
        throw UsageError(e.what());
      }
      if (o.json) {
        std::cout << bpath_to_json(r).dump(2) << "\n";
        return kOk;
      }
      std::cout << "k=" << r.k << " s=" << r.width << " w=" << r.w << " z=" << r.z << " length=" << r.length
                << "\n";
      std::cout << "V_B: " << vertex_list(r.block_set) << "\n";
      std::cout << "vertices: " << vertex_list(r.table_vertices()) << "\n";
      std::cout << "path: " << vertex_list(r.vertices) << "\n";
      return kOk;
    };
  });

  auto* witness = app.add_subcommand("witness", "pattern whose digraph attains the maximal index");
  witness->add_option("partition", o.partition)->required();
  add_json(witness);
  add_dot(witness);
  witness->callback([&] {
    action = [&] {
      const auto mu = partition_arg(o.partition);
      const auto w = witness_pattern(mu);
      const auto g = build(w);
      if (!o.dot_path.empty()) write_dot(o.dot_path, to_dot(g, vertex_labels(mu)));
      if (o.json) {
        std::cout << json{{"mu", mu.to_string()},
                          {"params", pattern_to_json(w)},
                          {"longest_path", longest_path(g)},
                          {"maxnil", max_nilpotency_index(mu).value}}
                         .dump(2)
                  << "\n";
      } else if (o.dot_path != "-") {
        for (const auto& p : w.params()) std::cout << "(" << p.x << "," << p.y << "," << p.k << ")\n";
        std::cout << "longest path " << longest_path(g) << "\n";
      }
      return longest_path(g) == max_nilpotency_index(mu).value ? kOk : kVerifyFailed;
    };
  });

  auto* sample = app.add_subcommand("sample", "shape census of the commutant pattern");
  sample->add_option("--shape", o.partition, "Jordan shape mu")->required();
  sample->add_option("--mode", o.mode, "random | exhaustive | value-sample");
  sample->add_option("--values", o.values, "comma-separated value set");
  sample->add_option("--budget", o.budget, "trials (or the exhaustive cap)");
  sample->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  add_prime(sample);
  add_seed(sample);
  add_json(sample);
  sample->callback([&] {
    action = [&] {
      ShapeSetOptions opts;
      try {
        opts.mode = parse_sample_mode(o.mode);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      opts.values = values_arg(o.values);
      opts.budget = o.budget;
      opts.field = field_arg(o);
      opts.seed = o.seed;
      opts.jobs = o.jobs;
      const auto mu = partition_arg(o.partition);
      ShapeSetReport report{full_pattern(mu)};
      try {
        report = shape_set(mu, opts);
      } catch (const std::length_error& e) {
        throw UsageError(e.what());
      }
      if (o.json) {
        std::cout << shape_report_to_json(report).dump(2) << "\n";
        return kOk;
      }
      print_header(opts.field, opts.seed);
      std::cout << "# mode=" << to_string(report.mode) << " trials=" << report.trials << "\n";
      for (const auto& [s, w] : report.shapes) std::cout << s.to_string() << "  (trial " << w.trial << ")\n";
      return kOk;
    };
  });

  auto* gs = app.add_subcommand("verify-gs", "compare Delta with the shape of generic matrices");
  gs->add_option("file", o.file)->required();
  gs->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  gs->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
  add_prime(gs);
  add_seed(gs);
  add_json(gs);
  gs->callback([&] {
    action = [&] {
      const auto field = field_arg(o);
      const auto g = read_input(o.file, [](std::istream& in) { return read_digraph(in); });
      const auto r = verify_gansner_saks(g, field, o.trials, o.seed, o.jobs);
      const bool ok = r.agree && r.violations == 0;
      if (o.json) {
        std::cout << json{{"prime", field.prime()},         {"seed", o.seed},
                          {"agree", r.agree},               {"delta", r.delta.to_string()},
                          {"shape", r.shape.to_string()},   {"trials", r.trials},
                          {"matching_trials", r.matching_trials}, {"violations", r.violations}}
                         .dump(2)
                  << "\n";
      } else {
        print_header(field, o.seed);
        std::cout << "delta " << r.delta.to_string() << "\nshape " << r.shape.to_string() << "\n"
                  << r.matching_trials << "/" << r.trials << " trials match, " << r.violations
                  << " violations\n" << (ok ? "agree" : "DISAGREE") << "\n";
      }
      return ok ? kOk : kVerifyFailed;
    };
  });

  auto* suite = app.add_subcommand("paper-suite", "run every worked example as a pass/fail table");
  add_prime(suite);
  add_seed(suite);
  suite->callback([&] { action = [&] { return run_paper_suite(field_arg(o), o.seed); }; });

  auto* nbgraph = app.add_subcommand("nbgraph", "digraph of a parameter set");
  nbgraph->add_option("partition", o.partition)->required();
  nbgraph->add_option("--params", o.params_file, "pattern JSON file")->required();
  add_dot(nbgraph);
  nbgraph->callback([&] {
    action = [&] {
      const auto mu = partition_arg(o.partition);
      const auto doc = read_input(o.params_file, [&](std::istream& in) {
        json j;
        try {
          in >> j;
        } catch (const json::exception& e) {
          throw std::invalid_argument(e.what());
        }
        return pattern_from_json(mu, j);
      });
      const auto g = build(doc.pattern);
      if (!o.dot_path.empty()) write_dot(o.dot_path, to_dot(g, vertex_labels(mu)));
      if (o.dot_path != "-") {
        const auto labels = vertex_labels(mu);
        for (const auto& [u, v] : g.edges()) {
          std::cout << labels[static_cast<std::size_t>(u - 1)] << " -> " << labels[static_cast<std::size_t>(v - 1)]
                    << "\n";
        }
        std::cout << "delta " << delta_sequence(g).as_partition().to_string() << "\n";
      }
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  if (!action) {
    std::cerr << app.help() << "error: a subcommand is required\n";
    return kUsage;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kVerifyFailed;
  }
}
