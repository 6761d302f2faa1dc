#include "lipext/errors.hpp"

#include <sstream>

namespace lipext {

std::string MetricViolation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::NonSquare:
      os << "matrix is not square";
      break;
    case Kind::Asymmetric:
      os << "asymmetric entry at (" << i << "," << j << ")";
      break;
    case Kind::Negative:
      os << "negative entry at (" << i << "," << j << ")";
      break;
    case Kind::NonzeroDiagonal:
      os << "nonzero diagonal entry at (" << i << "," << i << ")";
      break;
    case Kind::ZeroOffDiagonal:
      os << "zero off-diagonal entry at (" << i << "," << j << ")";
      break;
    case Kind::Triangle:
      os << "triangle violation for (" << i << "," << j << "," << k
         << "), slack " << slack;
      break;
  }
  return os.str();
}

MetricError::MetricError(std::vector<MetricViolation> violations)
    : Error(summarize(violations)), violations_(std::move(violations)) {}

std::string MetricError::summarize(
    const std::vector<MetricViolation>& violations) {
  std::ostringstream os;
  os << "invalid metric: " << violations.size() << " violation(s)";
  for (const auto& v : violations) {
    os << "; " << v.describe();
  }
  return os.str();
}

EnumerationCapExceeded::EnumerationCapExceeded(double attempted,
                                               std::uint64_t cap)
    : Error("enumeration would scan " + std::to_string(attempted) +
            " assignments, cap is " + std::to_string(cap)),
      attempted_(attempted),
      cap_(cap) {}

AgreementViolation::AgreementViolation(int index, int point,
                                       double discrepancy)
    : Error("extension disagrees with the map it extends at anchor " +
            std::to_string(index) + " (point " + std::to_string(point) +
            "), discrepancy " + std::to_string(discrepancy)),
      index_(index),
      point_(point),
      discrepancy_(discrepancy) {}

CertificationFailure::CertificationFailure(const std::string& context, int a,
                                           int b, double achieved,
                                           double certified)
    : Error("certification failure [" + context + "] pair (" +
            std::to_string(a) + "," + std::to_string(b) + "): achieved " +
            std::to_string(achieved) + " > certified " +
            std::to_string(certified)),
      a_(a),
      b_(b),
      achieved_(achieved),
      certified_(certified) {}

}  // namespace lipext
