#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lipext {

// Base class for everything this library throws on bad input or a broken
// internal certificate.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// One broken metric axiom, with the entries that break it.
struct MetricViolation {
  enum class Kind {
    NonSquare,
    Asymmetric,       // dist[i][j] != dist[j][i]
    Negative,         // dist[i][j] < 0
    NonzeroDiagonal,  // dist[i][i] != 0
    ZeroOffDiagonal,  // dist[i][j] == 0 for i != j
    Triangle,         // dist[i][k] > dist[i][j] + dist[j][k] + tol
  };

  Kind kind = Kind::NonSquare;
  int i = -1;
  int j = -1;
  int k = -1;
  double slack = 0.0;  // Triangle only: by how much the inequality fails

  std::string describe() const;
};

// Carries the full list of violated axioms, not just the first one found.
class MetricError : public Error {
 public:
  explicit MetricError(std::vector<MetricViolation> violations);
  const std::vector<MetricViolation>& violations() const { return violations_; }

 private:
  static std::string summarize(const std::vector<MetricViolation>& violations);
  std::vector<MetricViolation> violations_;
};

class EnumerationCapExceeded : public Error {
 public:
  EnumerationCapExceeded(double attempted, std::uint64_t cap);
  double attempted() const { return attempted_; }
  std::uint64_t cap() const { return cap_; }

 private:
  double attempted_;
  std::uint64_t cap_;
};

// Raised by glue() when the inner extension disagrees with the map it was
// supposed to extend. index is the 1-based position of the offending anchor
// point in the shared domain.
class AgreementViolation : public Error {
 public:
  AgreementViolation(int index, int point, double discrepancy);
  int index() const { return index_; }
  int point() const { return point_; }
  double discrepancy() const { return discrepancy_; }

 private:
  int index_;
  int point_;
  double discrepancy_;
};

// A runtime-checked inequality failed. This is an implementation bug, never
// an expected outcome on valid inputs.
class CertificationFailure : public Error {
 public:
  CertificationFailure(const std::string& context, int a, int b,
                       double achieved, double certified);
  int pair_a() const { return a_; }
  int pair_b() const { return b_; }
  double achieved() const { return achieved_; }
  double certified() const { return certified_; }

 private:
  int a_;
  int b_;
  double achieved_;
  double certified_;
};

}  // namespace lipext
