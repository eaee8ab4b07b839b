#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ghmetric/bead.hpp"
#include "ghmetric/box.hpp"
#include "ghmetric/experiments.hpp"
#include "ghmetric/format.hpp"
#include "ghmetric/gh_solver.hpp"
#include "ghmetric/json_io.hpp"
#include "ghmetric/metric_space.hpp"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;
using namespace ghmetric;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudgetExhausted = 3;

int cmd_validate(const std::string& path, double tol) {
  const SpaceDocument doc = read_space_file(path);
  const auto violations = check_metric(doc.matrix, tol);
  if (violations.empty()) {
    const FiniteMetricSpace space = validate_metric(doc.matrix, doc.labels, tol);
    std::cout << "valid: " << space.size() << " point(s), diameter " << fmt12(diameter(space))
              << "\n";
    return kExitOk;
  }
  for (const auto& v : violations) std::cout << v.describe() << "\n";
  std::cout << violations.size() << " violation(s)\n";
  return kExitPropertyFailure;
}

int cmd_diam(const std::string& path) {
  std::cout << fmt12(diameter(load_space(path))) << "\n";
  return kExitOk;
}

int cmd_scale(const std::string& path, double t) {
  std::cout << space_to_json(scale(load_space(path), t)) << "\n";
  return kExitOk;
}

int cmd_gh(const std::string& path_x, const std::string& path_y, const std::string& method,
           std::uint64_t budget, bool as_json) {
  const FiniteMetricSpace X = load_space(path_x);
  const FiniteMetricSpace Y = load_space(path_y);

  if (method == "bounds") {
    const GHBounds b = gh_bounds(X, Y);
    if (as_json) {
      GHResult r;
      r.value = b.upper;
      if (b.witness_attains) r.optimal = b.witness;
      r.lower_bound_used = b.lower;
      r.method = SolveMethod::bounds_only;
      r.is_optimal = b.upper == b.lower;
      std::cout << gh_result_to_json(r) << "\n";
    } else {
      std::cout << "lower=" << fmt12(b.lower) << " upper=" << fmt12(b.upper) << "\n";
    }
    return kExitOk;
  }

  const GHResult r = method == "bruteforce" ? gh_bruteforce(X, Y) : gh_exact(X, Y, budget);
  if (as_json) {
    std::cout << gh_result_to_json(r) << "\n";
  } else {
    std::cout << fmt12(r.value) << "\n";
  }
  if (!r.is_optimal) {
    std::cerr << "node budget exhausted; value is the best incumbent (lower bound "
              << fmt12(r.lower_bound_used) << ")\n";
    return kExitBudgetExhausted;
  }
  return kExitOk;
}

json bead_sidecar(const BeadSpace& bead) {
  json meta;
  meta["c"] = bead.gaps.total;
  meta["diameter"] = diameter(bead.space);
  meta["block_of"] = bead.block_of;
  return meta;
}

int cmd_bead(const std::string& manifest_path, const std::string& out_path) {
  json manifest;
  try {
    manifest = json::parse(read_text_file(manifest_path));
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid manifest JSON: ") + e.what());
  }
  if (!manifest.is_object() || !manifest.contains("r") || !manifest.contains("blocks")) {
    throw InputError("bead manifest must carry \"r\" and \"blocks\"");
  }
  const std::vector<double> r = manifest["r"].get<std::vector<double>>();
  const fs::path base = fs::path(manifest_path).parent_path();
  std::vector<FiniteMetricSpace> blocks;
  for (const json& entry : manifest["blocks"]) {
    if (!entry.is_string()) throw InputError("\"blocks\" must list file paths");
    fs::path p(entry.get<std::string>());
    if (p.is_relative()) p = base / p;
    blocks.push_back(load_space(p.string()));
  }

  const BeadSpace bead = build_bead(r, blocks);
  const std::string space_doc = space_to_json(bead.space);
  const std::string meta_doc = bead_sidecar(bead).dump();
  if (out_path.empty()) {
    std::cout << space_doc << "\n" << meta_doc << "\n";
  } else {
    write_text_file(out_path, space_doc + "\n");
    fs::path side(out_path);
    side.replace_extension("");
    side += ".meta.json";
    write_text_file(side.string(), meta_doc + "\n");
    std::cerr << "wrote " << out_path << " and " << side.string() << "\n";
  }
  return kExitOk;
}

BoxPoint box_point_from(const json& doc, const char* key) {
  return make_box_point(doc.at(key).get<std::vector<double>>(),
                        doc.at("r").get<std::vector<double>>());
}

json parse_json_file(const std::string& path) {
  try {
    return json::parse(read_text_file(path));
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

int cmd_embed_box(const std::string& spec_path) {
  const json doc = parse_json_file(spec_path);
  if (!doc.is_object() || !doc.contains("r") || !doc.contains("x")) {
    throw InputError("embed-box spec must carry \"r\" and \"x\"");
  }
  const BeadSpace bead = embed_box_point(box_point_from(doc, "x"));
  std::cout << space_to_json(bead.space) << "\n";
  return kExitOk;
}

int cmd_box_distance(const std::string& spec_path) {
  const json doc = parse_json_file(spec_path);
  if (!doc.is_object() || !doc.contains("r") || !doc.contains("x") || !doc.contains("y")) {
    throw InputError("box-distance spec must carry \"r\", \"x\" and \"y\"");
  }
  std::cout << fmt12(box_linf_distance(box_point_from(doc, "x"), box_point_from(doc, "y")))
            << "\n";
  return kExitOk;
}

int cmd_check_theorem(const ExperimentConfig& cfg) {
  const TheoremReport report = check_theorem(cfg);
  std::cout << render_theorem_report(report);
  double total_ms = 0.0, worst_ms = 0.0;
  for (const auto& t : report.trials) {
    total_ms += t.wall_ms;
    worst_ms = std::max(worst_ms, t.wall_ms);
  }
  std::cerr << "wall: total " << fmt12(total_ms) << " ms, slowest trial " << fmt12(worst_ms)
            << " ms\n";
  if (report.failures > 0) return kExitPropertyFailure;
  if (report.incomplete > 0) return kExitBudgetExhausted;
  return kExitOk;
}

int cmd_check_axioms(const ExperimentConfig& cfg) {
  const AxiomReport report = check_axioms(cfg);
  std::cout << render_axiom_report(report);
  return report.all_pass() ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite metric spaces, exact Gromov-Hausdorff distances and bead constructions"};
  app.require_subcommand(1);

  std::string path_a, path_b, out_path;
  double tol = kDefaultTolerance;
  double factor = 1.0;
  std::string method = "exact";
  std::uint64_t budget = kDefaultNodeBudget;
  bool as_json = false;
  ExperimentConfig cfg;
  bool blocks_given = false;

  auto* validate_cmd = app.add_subcommand("validate", "check a space file against the metric axioms");
  validate_cmd->add_option("file", path_a)->required();
  validate_cmd->add_option("--tol", tol, "validation tolerance (0 for strict)");

  auto* diam_cmd = app.add_subcommand("diam", "print the diameter of a space");
  diam_cmd->add_option("file", path_a)->required();

  auto* scale_cmd = app.add_subcommand("scale", "multiply every distance by t");
  scale_cmd->add_option("file", path_a)->required();
  scale_cmd->add_option("t", factor)->required();

  auto* gh_cmd = app.add_subcommand("gh", "Gromov-Hausdorff distance between two spaces");
  gh_cmd->add_option("fileX", path_a)->required();
  gh_cmd->add_option("fileY", path_b)->required();
  gh_cmd->add_option("--method", method)->check(CLI::IsMember({"exact", "bruteforce", "bounds"}));
  gh_cmd->add_option("--budget", budget, "node budget for the exact search");
  gh_cmd->add_flag("--json", as_json, "emit the result as JSON");

  auto* bead_cmd = app.add_subcommand("bead", "assemble a bead space from a manifest");
  bead_cmd->add_option("manifest", path_a)->required();
  bead_cmd->add_option("-o,--output", out_path, "write the space here plus a .meta.json sidecar");

  auto* embed_cmd = app.add_subcommand("embed-box", "embed a box point as a bead space");
  embed_cmd->add_option("spec", path_a)->required();

  auto* boxd_cmd = app.add_subcommand("box-distance", "sup distance between two box points");
  boxd_cmd->add_option("spec", path_a)->required();

  auto* thm_cmd = app.add_subcommand("check-theorem",
                                     "verify GH(bead, bead) = blockwise max on random instances");
  thm_cmd->add_option("--seed", cfg.seed);
  thm_cmd->add_option("--trials", cfg.trials);
  auto* blocks_opt = thm_cmd->add_option("--blocks", cfg.blocks);
  thm_cmd->add_option("--max-points", cfg.max_block_points);
  thm_cmd->add_option("--r", cfg.r, "gap terms r_1,r_2,...")->delimiter(',');
  thm_cmd->add_option("--budget", cfg.node_budget);
  thm_cmd->add_option("--tolerance", cfg.tolerance);
  thm_cmd->add_option("--jobs", cfg.jobs, "concurrent trials");

  auto* ax_cmd = app.add_subcommand("check-axioms", "run the GH axiom battery on a seeded pool");
  ax_cmd->add_option("--seed", cfg.seed);
  ax_cmd->add_option("--budget", cfg.node_budget);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }
  blocks_given = blocks_opt->count() > 0;

  try {
    if (validate_cmd->parsed()) return cmd_validate(path_a, tol);
    if (diam_cmd->parsed()) return cmd_diam(path_a);
    if (scale_cmd->parsed()) return cmd_scale(path_a, factor);
    if (gh_cmd->parsed()) return cmd_gh(path_a, path_b, method, budget, as_json);
    if (bead_cmd->parsed()) return cmd_bead(path_a, out_path);
    if (embed_cmd->parsed()) return cmd_embed_box(path_a);
    if (boxd_cmd->parsed()) return cmd_box_distance(path_a);
    if (thm_cmd->parsed()) {
      if (!cfg.r.empty()) {
        if (blocks_given && static_cast<int>(cfg.r.size()) != cfg.blocks) {
          throw InputError("--r length must match --blocks");
        }
        cfg.blocks = static_cast<int>(cfg.r.size());
      }
      return cmd_check_theorem(cfg);
    }
    if (ax_cmd->parsed()) return cmd_check_axioms(cfg);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
