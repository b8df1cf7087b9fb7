#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace niche {

// Row-major dense matrix.
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), data(r * c, fill) {}

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  std::span<double> row(std::size_t i) { return {data.data() + i * cols, cols}; }
  std::span<const double> row(std::size_t i) const {
    return {data.data() + i * cols, cols};
  }
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transposed(const Matrix& a);

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);

// Thin Householder QR of a (rows >= cols): q has orthonormal columns,
// r is upper triangular with nonnegative diagonal.
struct QrResult {
  Matrix q;  // m x n
  Matrix r;  // n x n
};
QrResult householder_qr(const Matrix& a);

// Solve r x = b for upper-triangular r.
std::vector<double> solve_upper(const Matrix& r, std::span<const double> b);
// Inverse of an upper-triangular matrix.
Matrix invert_upper(const Matrix& r);

// Cyclic Jacobi eigendecomposition of a symmetric matrix.
// Eigenvalues descending; vectors.col(j) is the eigenvector for values[j].
struct EigResult {
  std::vector<double> values;
  Matrix vectors;
};
EigResult jacobi_eigh(Matrix a);

}  // namespace niche
