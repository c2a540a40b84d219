#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "nilcomm/commutant.hpp"
#include "nilcomm/digraph.hpp"
#include "nilcomm/field_matrix.hpp"
#include "nilcomm/json_io.hpp"
#include "nilcomm/maxnil.hpp"
#include "nilcomm/nb_digraph.hpp"
#include "nilcomm/oracle.hpp"
#include "nilcomm/partition.hpp"

namespace py = pybind11;
using namespace nilcomm;

namespace {

using Parts = std::vector<int>;
using Rows = std::vector<std::vector<std::int64_t>>;

// Partitions cross the boundary as "4,3,2^2,1" strings or integer sequences.
Partition to_partition(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return parse_partition(obj.cast<std::string>());
  return Partition(obj.cast<Parts>());
}

std::vector<Parts> to_lists(const std::vector<Partition>& set) {
  std::vector<Parts> out;
  for (const auto& p : set) out.push_back(p.parts());
  return out;
}

py::tuple param_tuple(const ToeplitzParam& p) { return py::make_tuple(p.x, p.y, p.k); }

std::vector<ToeplitzParam> to_params(const std::vector<std::tuple<int, int, int>>& raw) {
  std::vector<ToeplitzParam> out;
  for (const auto& [x, y, k] : raw) out.push_back({x, y, k});
  return out;
}

py::dict bpath_dict(const BPathReport& r) {
  auto pairs = [](const std::vector<BlockVertex>& vs) {
    py::list out;
    for (const auto& v : vs) out.append(py::make_tuple(v.x, v.y));
    return out;
  };
  py::dict d;
  d["k"] = r.k;
  d["s"] = r.width;
  d["w"] = r.w;
  d["z"] = r.z;
  d["block_set"] = pairs(r.block_set);
  d["table_vertices"] = pairs(r.table_vertices());
  d["path"] = pairs(r.vertices);
  d["length"] = r.length;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Nilpotent matrices commuting with a nilpotent Jordan matrix";
  m.attr("DEFAULT_PRIME") = kDefaultPrime;

  m.def("rpt", [](int n, int t) { return rpt(n, t).parts(); }, py::arg("n"), py::arg("t"));
  m.def("rp_set", [](int n) { return to_lists(rp_set(n)); }, py::arg("n"));
  m.def("rp_of_partition", [](const py::object& mu) { return to_lists(rp_of_partition(to_partition(mu))); },
        py::arg("mu"));
  m.def("ord_merge", [](const std::vector<py::object>& seqs) {
    std::vector<Partition> parts;
    for (const auto& s : seqs) parts.push_back(to_partition(s));
    return ord_merge(parts).parts();
  });
  m.def("conjugate", [](const py::object& mu) { return conjugate(to_partition(mu)).parts(); }, py::arg("mu"));
  m.def("partitions_of", [](int n) { return to_lists(partitions_of(n)); }, py::arg("n"));
  m.def("basili_indices", [](const py::object& mu) {
    const auto b = basili_indices(to_partition(mu));
    return py::make_tuple(b.r_b, b.starts);
  }, py::arg("mu"));

  m.def("max_nilpotency_index", [](const py::object& mu) {
    const auto r = max_nilpotency_index(to_partition(mu));
    py::list candidates;
    for (const auto& c : r.candidates) candidates.append(py::make_tuple(c.i, c.r, c.value));
    py::dict d;
    d["value"] = r.value;
    d["argmax_i"] = r.argmax_i;
    d["candidates"] = candidates;
    return d;
  }, py::arg("mu"));

  m.def("full_pattern", [](const py::object& mu) {
    const auto pattern = full_pattern(to_partition(mu));
    py::list out;
    for (const auto& p : pattern.params()) out.append(param_tuple(p));
    return out;
  }, py::arg("mu"));
  m.def("instantiate", [](const py::object& mu, const std::vector<std::tuple<int, int, int>>& params,
                          const std::vector<std::int64_t>& values, std::uint64_t prime) {
    const PrimeField field(prime);
    const CommutantPattern pattern(to_partition(mu), to_params(params));
    if (values.size() != params.size()) throw std::invalid_argument("one value per parameter is required");
    std::map<ToeplitzParam, std::uint64_t> assignment;
    for (std::size_t i = 0; i < params.size(); ++i) {
      const auto& [x, y, k] = params[i];
      assignment[{x, y, k}] = field.from_signed(values[i]);
    }
    return instantiate(pattern, assignment, field).to_signed_rows();
  }, py::arg("mu"), py::arg("params"), py::arg("values"), py::arg("prime") = kDefaultPrime);

  m.def("jordan_matrix", [](const py::object& mu) { return jordan_matrix(to_partition(mu)).to_signed_rows(); },
        py::arg("mu"));
  m.def("shape_of", [](const Rows& rows, std::uint64_t prime) {
    return shape_of(FieldMatrix::from_rows(rows, PrimeField(prime))).parts();
  }, py::arg("matrix"), py::arg("prime") = kDefaultPrime);
  m.def("nilpotency_index", [](const Rows& rows, std::uint64_t prime) {
    return nilpotency_index(FieldMatrix::from_rows(rows, PrimeField(prime)));
  }, py::arg("matrix"), py::arg("prime") = kDefaultPrime);
  m.def("rank", [](const Rows& rows, std::uint64_t prime) {
    return rank(FieldMatrix::from_rows(rows, PrimeField(prime)));
  }, py::arg("matrix"), py::arg("prime") = kDefaultPrime);

  m.def("d_hat", [](int n, const std::vector<Edge>& edges, int k) { return d_hat(AcyclicDigraph(n, edges), k); },
        py::arg("n"), py::arg("edges"), py::arg("k"));
  m.def("delta_sequence", [](int n, const std::vector<Edge>& edges) {
    return delta_sequence(AcyclicDigraph(n, edges)).delta;
  }, py::arg("n"), py::arg("edges"));
  m.def("longest_path", [](int n, const std::vector<Edge>& edges) { return longest_path(AcyclicDigraph(n, edges)); },
        py::arg("n"), py::arg("edges"));
  m.def("verify_gansner_saks", [](int n, const std::vector<Edge>& edges, int trials, std::uint64_t seed,
                                  std::uint64_t prime, int jobs) {
    const auto r = verify_gansner_saks(AcyclicDigraph(n, edges), PrimeField(prime), trials, seed, jobs);
    py::dict d;
    d["agree"] = r.agree;
    d["shape"] = r.shape.parts();
    d["delta"] = r.delta.parts();
    d["matching_trials"] = r.matching_trials;
    d["violations"] = r.violations;
    return d;
  }, py::arg("n"), py::arg("edges"), py::arg("trials") = 10, py::arg("seed") = 0,
     py::arg("prime") = kDefaultPrime, py::arg("jobs") = 1);

  m.def("nb_digraph", [](const py::object& mu, const std::vector<std::tuple<int, int, int>>& params) {
    return build(to_partition(mu), to_params(params)).edges();
  }, py::arg("mu"), py::arg("params"));
  m.def("b_path", [](const py::object& mu, int k) { return bpath_dict(b_path(to_partition(mu), k)); },
        py::arg("mu"), py::arg("k"));
  m.def("witness_pattern", [](const py::object& mu) {
    const auto pattern = witness_pattern(to_partition(mu));
    py::list out;
    for (const auto& p : pattern.params()) out.append(param_tuple(p));
    return out;
  }, py::arg("mu"));

  m.def("shape_set", [](const py::object& mu, const std::string& mode, std::uint64_t budget,
                        const std::vector<std::int64_t>& values, std::uint64_t prime, std::uint64_t seed, int jobs) {
    ShapeSetOptions o;
    o.mode = parse_sample_mode(mode);
    o.budget = budget;
    o.values = values;
    o.field = PrimeField(prime);
    o.seed = seed;
    o.jobs = jobs;
    ShapeSetReport report{full_pattern(to_partition(mu))};
    {
      py::gil_scoped_release release;
      report = shape_set(report.mu(), o);
    }
    return shape_report_to_json(report).dump();
  }, py::arg("mu"), py::arg("mode") = "random", py::arg("budget") = 1000,
     py::arg("values") = std::vector<std::int64_t>{-1, 0, 1}, py::arg("prime") = kDefaultPrime,
     py::arg("seed") = 0, py::arg("jobs") = 1);
  m.def("sampled_max_nil", [](const py::object& mu, std::uint64_t trials, std::uint64_t prime, std::uint64_t seed,
                              int jobs) {
    const auto p = to_partition(mu);
    py::gil_scoped_release release;
    return sampled_max_nil(p, trials, PrimeField(prime), seed, jobs);
  }, py::arg("mu"), py::arg("trials") = 200, py::arg("prime") = kDefaultPrime, py::arg("seed") = 0,
     py::arg("jobs") = 1);
  m.def("expjor2_witness", [](const py::object& mu, const std::vector<int>& s) {
    return expjor2_witness(to_partition(mu), s).to_signed_rows();
  }, py::arg("mu"), py::arg("s"));
}
