#include "densecap/matrix.hpp"

#include <cmath>
#include <string>

#include "densecap/errors.hpp"

namespace densecap {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()) + ")");
  }
}

}  // namespace

bool ComplexMatrix::finite() const {
  for (const complexd& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "add");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "subtract");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(complexd scale) {
  for (complexd& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(complexd scale, ComplexMatrix a) { return a *= scale; }
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "matmul");
  const int n = a.dim();
  ComplexMatrix c(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const complexd aik = a(i, k);
      if (aik == complexd{}) continue;
      for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, int max_dim) {
  const long long prod = static_cast<long long>(a.dim()) * b.dim();
  if (prod > max_dim) {
    throw DimensionError("kron: composite dimension " + std::to_string(prod) +
                         " exceeds maximum " + std::to_string(max_dim));
  }
  const int da = a.dim();
  const int db = b.dim();
  ComplexMatrix c(da * db);
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < da; ++j) {
      const complexd aij = a(i, j);
      if (aij == complexd{}) continue;
      for (int k = 0; k < db; ++k) {
        for (int l = 0; l < db; ++l) {
          c(i * db + k, j * db + l) = aij * b(k, l);
        }
      }
    }
  }
  return c;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
  const int n = a.dim();
  ComplexMatrix c(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) c(i, j) = std::conj(a(j, i));
  }
  return c;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "commutator");
  return matmul(a, b) - matmul(b, a);
}

double frobenius_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) sum += std::norm(a(i, j));
  }
  return std::sqrt(sum);
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "frobenius_distance");
  double sum = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) sum += std::norm(a(i, j) - b(i, j));
  }
  return std::sqrt(sum);
}

double hermiticity_defect(const ComplexMatrix& a) {
  double worst = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
    }
  }
  return worst;
}

}  // namespace densecap
