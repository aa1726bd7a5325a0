#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace densecap {

using complexd = std::complex<double>;

// Largest composite dimension the library handles (supports qudit pairs up
// to 8x8). Bounds the O(dim^3)-per-sweep eigensolver.
inline constexpr int kMaxCompositeDim = 64;

// Dense square complex matrix, row-major storage.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim) * dim) {}

  static ComplexMatrix identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  int dim() const { return dim_; }

  complexd& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * dim_ + j]; }
  const complexd& operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * dim_ + j];
  }

  complexd trace() const {
    complexd t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  bool finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(complexd scale);

  bool operator==(const ComplexMatrix& other) const {
    return dim_ == other.dim_ && data_ == other.data_;
  }

 private:
  int dim_ = 0;
  std::vector<complexd> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(complexd scale, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

// Standard matrix product; operands must share a dimension.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

// Tensor product with block structure a_ij * b. Rejects products whose
// dimension would exceed max_dim.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, int max_dim = kMaxCompositeDim);

// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& a);

// ab - ba.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

double frobenius_norm(const ComplexMatrix& a);
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

// max_ij |a_ij - a*_ji|; zero for exactly Hermitian input.
double hermiticity_defect(const ComplexMatrix& a);

}  // namespace densecap
