#pragma once

#include <string>
#include <vector>

#include "ghmetric/metric_space.hpp"

namespace ghmetric {

// Raw contents of a space document, prior to metric validation.
struct SpaceDocument {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> matrix;
};

// Parses {"labels": [...], "matrix": [[...]...]}. The matrix must be fully
// materialized; non-finite numbers are rejected. "labels" may be omitted.
SpaceDocument parse_space_json(const std::string& text);

SpaceDocument read_space_file(const std::string& path);

// Parse + validate in one step.
FiniteMetricSpace load_space(const std::string& path, double tol = kDefaultTolerance);
FiniteMetricSpace space_from_json(const std::string& text, double tol = kDefaultTolerance);

// Compact document with shortest round-trip number encoding, so written
// matrices read back bit-identical.
std::string space_to_json(const FiniteMetricSpace& space);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace ghmetric
