#include "qons/matrix.hpp"

#include <sstream>

namespace qons {

RationalMatrix evaluate(const ScalarMatrix& m, const EvaluationPoint& p) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).evaluate(p);
  }
  return r;
}

ScalarMatrix specialize(const ScalarMatrix& m, const EvaluationPoint& p) {
  ScalarMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).specialize(p);
  }
  return r;
}

ScalarMatrix to_scalar(const RationalMatrix& m) {
  ScalarMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Scalar(m(i, j));
  }
  return r;
}

std::vector<std::string> nonzero_entries(const ScalarMatrix& m) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      out.push_back("(" + std::to_string(i) + "," + std::to_string(j) + "): " + m(i, j).to_string());
    }
  }
  return out;
}

std::vector<std::string> nonzero_entries(const RationalMatrix& m) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      out.push_back("(" + std::to_string(i) + "," + std::to_string(j) + "): " + m(i, j).get_str());
    }
  }
  return out;
}

std::string to_string(const ScalarMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace qons
