#include "niche/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "niche/common.hpp"
#include "niche/parallel.hpp"

namespace niche {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

Matrix matmul(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows, b.cols, 0.0);
  par::for_each(a.rows, [&](std::size_t i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      const double* brow = b.data.data() + k * b.cols;
      double* orow = out.data.data() + i * out.cols;
      for (std::size_t j = 0; j < b.cols; ++j) orow[j] += aik * brow[j];
    }
  });
  return out;
}

Matrix transposed(const Matrix& a) {
  Matrix t(a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
  return t;
}

QrResult householder_qr(const Matrix& a) {
  const std::size_t m = a.rows, n = a.cols;
  if (m < n) throw NumericError("householder_qr: matrix has more columns than rows");
  Matrix work = a;                        // reduced in place
  std::vector<std::vector<double>> vs;    // householder vectors
  vs.reserve(n);

  for (std::size_t k = 0; k < n; ++k) {
    // Build the reflector for column k from the trailing part.
    std::vector<double> v(m - k);
    for (std::size_t i = k; i < m; ++i) v[i - k] = work(i, k);
    double alpha = norm2(v);
    if (v[0] > 0) alpha = -alpha;
    v[0] -= alpha;
    const double vnorm = norm2(v);
    if (vnorm > 0) {
      for (double& x : v) x /= vnorm;
      // Apply I - 2 v v^T to the trailing columns; parallel over columns,
      // each column handled sequentially so results are thread-count stable.
      par::for_each(n - k, [&](std::size_t jj) {
        const std::size_t j = k + jj;
        double s = 0.0;
        for (std::size_t i = k; i < m; ++i) s += v[i - k] * work(i, j);
        s *= 2.0;
        for (std::size_t i = k; i < m; ++i) work(i, j) -= s * v[i - k];
      });
    }
    vs.push_back(std::move(v));
  }

  QrResult res;
  res.r = Matrix(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) res.r(i, j) = work(i, j);

  // Accumulate the thin Q by applying reflectors to the first n identity cols.
  res.q = Matrix(m, n, 0.0);
  for (std::size_t j = 0; j < n; ++j) res.q(j, j) = 1.0;
  for (std::size_t k = n; k-- > 0;) {
    const auto& v = vs[k];
    par::for_each(n, [&](std::size_t j) {
      double s = 0.0;
      for (std::size_t i = k; i < m; ++i) s += v[i - k] * res.q(i, j);
      s *= 2.0;
      for (std::size_t i = k; i < m; ++i) res.q(i, j) -= s * v[i - k];
    });
  }

  // Normalize sign so that diag(R) >= 0.
  for (std::size_t k = 0; k < n; ++k) {
    if (res.r(k, k) < 0) {
      for (std::size_t j = k; j < n; ++j) res.r(k, j) = -res.r(k, j);
      for (std::size_t i = 0; i < m; ++i) res.q(i, k) = -res.q(i, k);
    }
  }
  return res;
}

std::vector<double> solve_upper(const Matrix& r, std::span<const double> b) {
  const std::size_t n = r.rows;
  std::vector<double> x(b.begin(), b.end());
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) x[i] -= r(i, j) * x[j];
    if (r(i, i) == 0.0) throw NumericError("solve_upper: zero pivot");
    x[i] /= r(i, i);
  }
  return x;
}

Matrix invert_upper(const Matrix& r) {
  const std::size_t n = r.rows;
  Matrix inv(n, n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> e(n, 0.0);
    e[j] = 1.0;
    auto col = solve_upper(r, e);
    for (std::size_t i = 0; i <= j; ++i) inv(i, j) = col[i];
  }
  return inv;
}

EigResult jacobi_eigh(Matrix a) {
  const std::size_t n = a.rows;
  Matrix v(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

  const int max_sweeps = 80;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-28 * (n * n + 1)) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double app = a(p, p), aqq = a(q, q);
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t i = 0; i < n; ++i) {
          const double aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - s * aiq;
          a(i, q) = s * aip + c * aiq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double api = a(p, i), aqi = a(q, i);
          a(p, i) = c * api - s * aqi;
          a(q, i) = s * api + c * aqi;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - s * viq;
          v(i, q) = s * vip + c * viq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

  EigResult res;
  res.values.resize(n);
  res.vectors = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    res.values[j] = a(order[j], order[j]);
    for (std::size_t i = 0; i < n; ++i) res.vectors(i, j) = v(i, order[j]);
  }
  return res;
}

}  // namespace niche
