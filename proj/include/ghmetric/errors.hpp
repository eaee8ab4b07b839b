#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ghmetric {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed files, bad shapes, out-of-range parameters. CLI maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

class NonpositiveScale : public InputError {
 public:
  explicit NonpositiveScale(double t)
      : InputError("scale factor must be positive, got " + std::to_string(t)) {}
};

class SearchTooLarge : public Error {
 public:
  using Error::Error;
};

class NotACorrespondence : public InputError {
 public:
  using InputError::InputError;
};

class EmptySequence : public InputError {
 public:
  EmptySequence() : InputError("gap sequence needs at least one term") {}
};

class NonpositiveTerm : public InputError {
 public:
  NonpositiveTerm(int index_1based, double value)
      : InputError("gap sequence term r_" + std::to_string(index_1based) +
                   " must be positive, got " + std::to_string(value)),
        index(index_1based) {}
  int index;
};

class BadOrder : public InputError {
 public:
  BadOrder(int a, int b)
      : InputError("bead indices out of order: " + std::to_string(a) +
                   " is not below " + std::to_string(b)) {}
};

class BlockTooLarge : public InputError {
 public:
  BlockTooLarge(int index_1based, double diam, double bound)
      : InputError("block " + std::to_string(index_1based) + " has diameter " +
                   std::to_string(diam) + " exceeding its bound " + std::to_string(bound)),
        index(index_1based) {}
  int index;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

enum class ViolationKind {
  NotSquare,
  NegativeEntry,
  AsymmetricEntry,
  NonzeroDiagonal,
  ZeroOffDiagonal,
  TriangleViolation,
};

// One failed metric axiom. For TriangleViolation, (i, j) are the endpoints, k the
// midpoint and slack = d(i,j) - d(i,k) - d(k,j). For entry-level violations slack
// carries the offending value (or the asymmetry difference).
struct MetricViolation {
  ViolationKind kind;
  int i = -1;
  int j = -1;
  int k = -1;
  double slack = 0.0;

  std::string describe() const;
};

class MetricError : public InputError {
 public:
  explicit MetricError(std::vector<MetricViolation> violations);
  std::vector<MetricViolation> violations;
};

}  // namespace ghmetric
