#include "niche/sparse.hpp"

#include "niche/parallel.hpp"

namespace niche {

SparseMatrix transpose_sparse(const SparseMatrix& a) {
  SparseMatrix t;
  t.rows = a.cols;
  t.cols = a.rows;
  t.indptr.assign(a.cols + 1, 0);
  for (std::uint32_t j : a.indices) t.indptr[j + 1]++;
  for (std::size_t j = 0; j < a.cols; ++j) t.indptr[j + 1] += t.indptr[j];
  t.indices.resize(a.nnz());
  t.values.resize(a.nnz());
  std::vector<std::size_t> next(t.indptr.begin(), t.indptr.end() - 1);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t p = a.indptr[i]; p < a.indptr[i + 1]; ++p) {
      const std::size_t slot = next[a.indices[p]]++;
      t.indices[slot] = static_cast<std::uint32_t>(i);
      t.values[slot] = a.values[p];
    }
  }
  return t;
}

Matrix spmm(const SparseMatrix& a, const Matrix& x) {
  Matrix out(a.rows, x.cols, 0.0);
  par::for_each(a.rows, [&](std::size_t i) {
    double* orow = out.data.data() + i * out.cols;
    for (std::size_t p = a.indptr[i]; p < a.indptr[i + 1]; ++p) {
      const double v = a.values[p];
      const double* xrow = x.data.data() + a.indices[p] * x.cols;
      for (std::size_t j = 0; j < x.cols; ++j) orow[j] += v * xrow[j];
    }
  });
  return out;
}

double frobenius_sq(const SparseMatrix& a) {
  return par::sum(a.nnz(), [&](std::size_t p) { return a.values[p] * a.values[p]; });
}

std::vector<double> col_means(const SparseMatrix& a) {
  std::vector<double> mu(a.cols, 0.0);
  for (std::size_t p = 0; p < a.nnz(); ++p) mu[a.indices[p]] += a.values[p];
  if (a.rows > 0)
    for (double& m : mu) m /= static_cast<double>(a.rows);
  return mu;
}

Matrix to_dense(const SparseMatrix& a) {
  Matrix d(a.rows, a.cols, 0.0);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t p = a.indptr[i]; p < a.indptr[i + 1]; ++p)
      d(i, a.indices[p]) = a.values[p];
  return d;
}

}  // namespace niche
