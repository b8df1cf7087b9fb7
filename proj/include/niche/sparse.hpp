#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

#include "niche/linalg.hpp"

namespace niche {

// Compressed sparse row matrix; zero entries are implicit.
struct SparseMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::size_t> indptr;     // size rows+1
  std::vector<std::uint32_t> indices;  // column of each stored value
  std::vector<double> values;

  std::size_t nnz() const { return values.size(); }
};

SparseMatrix transpose_sparse(const SparseMatrix& a);

// out = a * x; parallel over output rows, each row reduced sequentially.
Matrix spmm(const SparseMatrix& a, const Matrix& x);

double frobenius_sq(const SparseMatrix& a);

// Per-column means (sum / rows).
std::vector<double> col_means(const SparseMatrix& a);

Matrix to_dense(const SparseMatrix& a);

}  // namespace niche
