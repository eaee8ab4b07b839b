#include "ghmetric/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ghmetric {

namespace {
using nlohmann::json;
}

SpaceDocument parse_space_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("matrix")) {
    throw InputError("space document must be an object with a \"matrix\" field");
  }
  const json& rows = doc["matrix"];
  if (!rows.is_array() || rows.empty()) {
    throw InputError("\"matrix\" must be a non-empty array of rows");
  }

  SpaceDocument out;
  out.matrix.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const json& row = rows[i];
    if (!row.is_array()) throw InputError("matrix row " + std::to_string(i) + " is not an array");
    std::vector<double> r;
    r.reserve(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
      const json& cell = row[j];
      if (!cell.is_number()) {
        throw InputError("matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                         ") is not a number");
      }
      const double v = cell.get<double>();
      if (!std::isfinite(v)) {
        throw InputError("matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                         ") is not finite");
      }
      r.push_back(v);
    }
    out.matrix.push_back(std::move(r));
  }

  if (doc.contains("labels")) {
    const json& labels = doc["labels"];
    if (!labels.is_array()) throw InputError("\"labels\" must be an array of strings");
    for (const json& l : labels) {
      if (!l.is_string()) throw InputError("\"labels\" must be an array of strings");
      out.labels.push_back(l.get<std::string>());
    }
    if (out.labels.size() != out.matrix.size()) {
      throw InputError("label count does not match matrix size");
    }
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

SpaceDocument read_space_file(const std::string& path) {
  return parse_space_json(read_text_file(path));
}

FiniteMetricSpace space_from_json(const std::string& text, double tol) {
  SpaceDocument doc = parse_space_json(text);
  return validate_metric(doc.matrix, std::move(doc.labels), tol);
}

FiniteMetricSpace load_space(const std::string& path, double tol) {
  SpaceDocument doc = read_space_file(path);
  return validate_metric(doc.matrix, std::move(doc.labels), tol);
}

std::string space_to_json(const FiniteMetricSpace& space) {
  json doc;
  doc["labels"] = space.labels();
  doc["matrix"] = space.rows();
  return doc.dump();
}

}  // namespace ghmetric
