#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ghmetric/bead.hpp"
#include "ghmetric/box.hpp"
#include "ghmetric/experiments.hpp"
#include "ghmetric/gh_solver.hpp"
#include "ghmetric/json_io.hpp"
#include "ghmetric/metric_space.hpp"
#include "ghmetric/random_metric.hpp"

namespace py = pybind11;
using namespace ghmetric;

namespace {

Correspondence corr_from(const std::vector<IndexPair>& pairs, int nx, int ny) {
  return make_correspondence(pairs, nx, ny);
}

ExperimentConfig config_from(std::uint64_t seed, int trials, int blocks, int max_points,
                             const std::vector<double>& r, double tolerance,
                             std::uint64_t budget, int jobs) {
  ExperimentConfig cfg;
  cfg.seed = seed;
  cfg.trials = trials;
  cfg.blocks = r.empty() ? blocks : static_cast<int>(r.size());
  cfg.max_block_points = max_points;
  cfg.r = r;
  cfg.tolerance = tolerance;
  cfg.node_budget = budget;
  cfg.jobs = jobs;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite metric spaces, exact Gromov-Hausdorff distances and bead constructions";

  py::register_exception<Error>(m, "GHMetricError", PyExc_RuntimeError);
  py::register_exception<SearchTooLarge>(m, "SearchTooLarge", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "GHMetricInputError", PyExc_ValueError);

  py::class_<FiniteMetricSpace>(m, "Space")
      .def(py::init([](const std::vector<std::vector<double>>& matrix,
                       std::vector<std::string> labels, double tol) {
             return validate_metric(matrix, std::move(labels), tol);
           }),
           py::arg("matrix"), py::arg("labels") = std::vector<std::string>{},
           py::arg("tol") = kDefaultTolerance)
      .def_property_readonly("size", &FiniteMetricSpace::size)
      .def_property_readonly("labels", &FiniteMetricSpace::labels)
      .def_property_readonly("tolerance", &FiniteMetricSpace::tolerance)
      .def("matrix", &FiniteMetricSpace::rows)
      .def("dist", &FiniteMetricSpace::dist, py::arg("i"), py::arg("j"))
      .def("__repr__", [](const FiniteMetricSpace& s) {
        return "<Space n=" + std::to_string(s.size()) + ">";
      });

  m.def("check_metric",
        [](const std::vector<std::vector<double>>& matrix, double tol) {
          std::vector<std::string> out;
          for (const auto& v : check_metric(matrix, tol)) out.push_back(v.describe());
          return out;
        },
        py::arg("matrix"), py::arg("tol") = kDefaultTolerance,
        "Violation descriptions, empty when the matrix is a metric.");
  m.def("one_point", &one_point, py::arg("label") = "p0");
  m.def("two_point", &two_point, py::arg("s"),
        "Two points at distance 2*s (the pair {-s, +s} on the line).");
  m.def("diameter", &diameter);
  m.def("scale", &scale, py::arg("space"), py::arg("t"));
  m.def("is_isometric",
        [](const FiniteMetricSpace& a, const FiniteMetricSpace& b, double tol, int cap) {
          const IsometryMatch match = is_isometric(a, b, tol, cap);
          return py::make_tuple(match.isometric, match.mapping);
        },
        py::arg("a"), py::arg("b"), py::arg("tol") = kDefaultTolerance,
        py::arg("max_points") = kIsometrySearchCap);

  m.def("distortion",
        [](const FiniteMetricSpace& X, const FiniteMetricSpace& Y,
           const std::vector<IndexPair>& pairs) {
          return distortion(X, Y, corr_from(pairs, X.size(), Y.size()));
        },
        py::arg("X"), py::arg("Y"), py::arg("pairs"));

  py::class_<GHResult>(m, "GHResult")
      .def_readonly("value", &GHResult::value)
      .def_property_readonly("pairs",
                             [](const GHResult& r) { return r.optimal.pairs; })
      .def_readonly("nodes", &GHResult::nodes_explored)
      .def_readonly("lower_bound", &GHResult::lower_bound_used)
      .def_property_readonly("method",
                             [](const GHResult& r) { return std::string(to_string(r.method)); })
      .def_readonly("optimal", &GHResult::is_optimal)
      .def("to_json", &gh_result_to_json)
      .def("__repr__", [](const GHResult& r) {
        return "<GHResult value=" + std::to_string(r.value) + ">";
      });

  m.def("gh_bruteforce", &gh_bruteforce, py::arg("X"), py::arg("Y"));
  m.def("gh_exact",
        [](const FiniteMetricSpace& X, const FiniteMetricSpace& Y, std::uint64_t budget,
           const std::vector<std::vector<IndexPair>>& hints) {
          std::vector<Correspondence> hc;
          hc.reserve(hints.size());
          for (const auto& h : hints) hc.push_back(corr_from(h, X.size(), Y.size()));
          return gh_exact(X, Y, budget, hc);
        },
        py::arg("X"), py::arg("Y"), py::arg("budget") = kDefaultNodeBudget,
        py::arg("hints") = std::vector<std::vector<IndexPair>>{});
  m.def("gh_bounds", [](const FiniteMetricSpace& X, const FiniteMetricSpace& Y) {
    const GHBounds b = gh_bounds(X, Y);
    return py::make_tuple(b.lower, b.upper);
  });

  py::class_<GapSequence>(m, "GapSequence")
      .def_readonly("terms", &GapSequence::terms)
      .def_readonly("total", &GapSequence::total)
      .def_readonly("gaps", &GapSequence::gaps)
      .def_property_readonly("block_count", &GapSequence::block_count);

  m.def("gap_sequence", &gap_sequence, py::arg("r"));
  m.def("bead_gap",
        [](const GapSequence& g, int a, int b) { return bead_gap(g, {a}, {b}); },
        py::arg("gaps"), py::arg("a"), py::arg("b"),
        "Gap between block ranks a < b; omega is rank N+1.");

  py::class_<BeadSpace>(m, "BeadSpace")
      .def_readonly("space", &BeadSpace::space)
      .def_readonly("gaps", &BeadSpace::gaps)
      .def_readonly("block_of", &BeadSpace::block_of)
      .def_readonly("block_offset", &BeadSpace::block_offset)
      .def_property_readonly("block_count", &BeadSpace::block_count);

  m.def("build_bead", &build_bead, py::arg("r"), py::arg("blocks"));
  m.def("block_union_distortion",
        [](const BeadSpace& bx, const BeadSpace& by,
           const std::vector<std::vector<IndexPair>>& per_block) {
          std::vector<Correspondence> rs;
          for (int n = 1; n <= bx.block_count(); ++n) {
            rs.push_back(corr_from(per_block[n - 1], bx.block_size(n), by.block_size(n)));
          }
          const BlockUnion u = block_union_distortion(bx, by, rs);
          return py::make_tuple(u.corr.pairs, u.distortion);
        },
        py::arg("bead_x"), py::arg("bead_y"), py::arg("per_block"));

  m.def("box_linf_distance",
        [](const std::vector<double>& r, const std::vector<double>& x,
           const std::vector<double>& y) {
          return box_linf_distance(make_box_point(x, r), make_box_point(y, r));
        },
        py::arg("r"), py::arg("x"), py::arg("y"));
  m.def("embed_box_point",
        [](const std::vector<double>& r, const std::vector<double>& x) {
          return embed_box_point(make_box_point(x, r));
        },
        py::arg("r"), py::arg("x"));

  m.def("gen_random_metric",
        [](int n, double diam_bound, std::uint64_t seed) {
          SplitMix64 rng(seed);
          return gen_random_metric(n, diam_bound, rng);
        },
        py::arg("n"), py::arg("diam_bound"), py::arg("seed"));

  py::class_<TheoremTrial>(m, "TheoremTrial")
      .def_readonly("index", &TheoremTrial::index)
      .def_readonly("lhs", &TheoremTrial::lhs)
      .def_readonly("rhs", &TheoremTrial::rhs)
      .def_readonly("deviation", &TheoremTrial::deviation)
      .def_readonly("nodes", &TheoremTrial::nodes)
      .def_readonly("complete", &TheoremTrial::complete);

  py::class_<TheoremReport>(m, "TheoremReport")
      .def_readonly("trials", &TheoremReport::trials)
      .def_readonly("max_deviation", &TheoremReport::max_deviation)
      .def_readonly("failures", &TheoremReport::failures)
      .def_readonly("incomplete", &TheoremReport::incomplete)
      .def("render", &render_theorem_report);

  m.def("check_theorem", [](std::uint64_t seed, int trials, int blocks, int max_points,
                            const std::vector<double>& r, double tolerance,
                            std::uint64_t budget, int jobs) {
          return check_theorem(
              config_from(seed, trials, blocks, max_points, r, tolerance, budget, jobs));
        },
        py::arg("seed") = kDefaultSeed, py::arg("trials") = 25, py::arg("blocks") = 2,
        py::arg("max_points") = 2, py::arg("r") = std::vector<double>{},
        py::arg("tolerance") = 1e-9, py::arg("budget") = kDefaultNodeBudget,
        py::arg("jobs") = 1);

  py::class_<AxiomCheck>(m, "AxiomCheck")
      .def_readonly("property", &AxiomCheck::property)
      .def_readonly("checks", &AxiomCheck::checks)
      .def_readonly("max_violation", &AxiomCheck::max_violation)
      .def_readonly("limit", &AxiomCheck::limit)
      .def("ok", &AxiomCheck::ok);

  py::class_<AxiomReport>(m, "AxiomReport")
      .def_readonly("entries", &AxiomReport::entries)
      .def("all_pass", &AxiomReport::all_pass)
      .def("render", &render_axiom_report);

  m.def("check_axioms", [](std::uint64_t seed, std::uint64_t budget) {
          ExperimentConfig cfg;
          cfg.seed = seed;
          cfg.node_budget = budget;
          return check_axioms(cfg);
        },
        py::arg("seed") = kDefaultSeed, py::arg("budget") = kDefaultNodeBudget);

  m.def("space_to_json", &space_to_json);
  m.def("space_from_json", &space_from_json, py::arg("text"),
        py::arg("tol") = kDefaultTolerance);
}
