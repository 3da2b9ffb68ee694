#include "ec3/kernels.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "ec3/errors.hpp"

namespace ec3 {

namespace {

void check_matmul_shapes(const Matrix& a, const Matrix& b, std::size_t inner) {
  if (inner != b.rows())
    throw ValidationError("matmul: inner dimensions disagree");
  (void)a;
}

}  // namespace

namespace kernels {

void matmul(const Matrix& a, const Matrix& b, Matrix& product) {
  check_matmul_shapes(a, b, a.cols());
  const std::int64_t m = static_cast<std::int64_t>(a.rows());
  const std::size_t k = a.cols(), n = b.cols();
  product = Matrix(a.rows(), n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < m; ++i) {
    const double* ai = a.row(static_cast<std::size_t>(i));
    double* out = product.row(static_cast<std::size_t>(i));
    for (std::size_t p = 0; p < k; ++p) {
      const double aip = ai[p];
      if (aip == 0.0) continue;
      const double* bp = b.row(p);
      for (std::size_t j = 0; j < n; ++j) out[j] += aip * bp[j];
    }
  }
}

void matmul_transposed(const Matrix& a, const Matrix& b, Matrix& product) {
  check_matmul_shapes(a, b, a.rows());
  const std::int64_t g = static_cast<std::int64_t>(a.cols());
  const std::size_t m = a.rows(), n = b.cols();
  product = Matrix(a.cols(), n);
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < g; ++j) {
    double* out = product.row(static_cast<std::size_t>(j));
    for (std::size_t i = 0; i < m; ++i) {
      const double aij = a(i, static_cast<std::size_t>(j));
      if (aij == 0.0) continue;
      const double* bi = b.row(i);
      for (std::size_t c = 0; c < n; ++c) out[c] += aij * bi[c];
    }
  }
}

void gram(const Matrix& a, Matrix& product) {
  const std::int64_t m = static_cast<std::int64_t>(a.rows());
  const std::size_t k = a.cols();
  product = Matrix(a.rows(), a.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < m; ++i) {
    const double* ai = a.row(static_cast<std::size_t>(i));
    for (std::size_t j = static_cast<std::size_t>(i); j < a.rows(); ++j) {
      const double* aj = a.row(j);
      double dot = 0.0;
      for (std::size_t p = 0; p < k; ++p) dot += ai[p] * aj[p];
      product(static_cast<std::size_t>(i), j) = dot;
      product(j, static_cast<std::size_t>(i)) = dot;
    }
  }
}

std::vector<double> row_sums(const Matrix& a) {
  const std::int64_t m = static_cast<std::int64_t>(a.rows());
  std::vector<double> sums(a.rows(), 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < m; ++i) {
    const double* ai = a.row(static_cast<std::size_t>(i));
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += ai[j];
    sums[static_cast<std::size_t>(i)] = s;
  }
  return sums;
}

std::vector<double> col_sums(const Matrix& a) {
  const std::int64_t n = static_cast<std::int64_t>(a.cols());
  std::vector<double> sums(a.cols(), 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += a(i, static_cast<std::size_t>(j));
    sums[static_cast<std::size_t>(j)] = s;
  }
  return sums;
}

void scale_rows(Matrix& a, const std::vector<double>& factors) {
  const std::int64_t m = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < m; ++i) {
    double* ai = a.row(static_cast<std::size_t>(i));
    const double f = factors[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < a.cols(); ++j) ai[j] *= f;
  }
}

void scale_cols(Matrix& a, const std::vector<double>& factors) {
  const std::int64_t m = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < m; ++i) {
    double* ai = a.row(static_cast<std::size_t>(i));
    for (std::size_t j = 0; j < a.cols(); ++j) ai[j] *= factors[j];
  }
}

void geometric_symmetrize(Matrix& k) {
  const std::int64_t n = static_cast<std::int64_t>(k.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::size_t j = static_cast<std::size_t>(i); j < k.rows(); ++j) {
      const double kij = k(static_cast<std::size_t>(i), j);
      const double kji = k(j, static_cast<std::size_t>(i));
      // equal pairs pass through untouched so fixed points stay exact
      const double v = (kij == kji) ? kij : std::sqrt(kij * kji);
      k(static_cast<std::size_t>(i), j) = v;
      k(j, static_cast<std::size_t>(i)) = v;
    }
  }
}

double frobenius_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ValidationError("frobenius_distance: shape mismatch");
  const std::int64_t m = static_cast<std::int64_t>(a.rows());
  std::vector<double> partial(a.rows(), 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < m; ++i) {
    const double* ai = a.row(static_cast<std::size_t>(i));
    const double* bi = b.row(static_cast<std::size_t>(i));
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double d = ai[j] - bi[j];
      s += d * d;
    }
    partial[static_cast<std::size_t>(i)] = s;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return std::sqrt(total);
}

}  // namespace kernels

namespace reference {

void matmul(const Matrix& a, const Matrix& b, Matrix& product) {
  check_matmul_shapes(a, b, a.cols());
  const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
  product = Matrix(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    const double* ai = a.row(i);
    double* out = product.row(i);
    for (std::size_t p = 0; p < k; ++p) {
      const double aip = ai[p];
      if (aip == 0.0) continue;
      const double* bp = b.row(p);
      for (std::size_t j = 0; j < n; ++j) out[j] += aip * bp[j];
    }
  }
}

void matmul_transposed(const Matrix& a, const Matrix& b, Matrix& product) {
  check_matmul_shapes(a, b, a.rows());
  const std::size_t m = a.rows(), g = a.cols(), n = b.cols();
  product = Matrix(g, n);
  for (std::size_t j = 0; j < g; ++j) {
    double* out = product.row(j);
    for (std::size_t i = 0; i < m; ++i) {
      const double aij = a(i, j);
      if (aij == 0.0) continue;
      const double* bi = b.row(i);
      for (std::size_t c = 0; c < n; ++c) out[c] += aij * bi[c];
    }
  }
}

void gram(const Matrix& a, Matrix& product) {
  const std::size_t m = a.rows(), k = a.cols();
  product = Matrix(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const double* ai = a.row(i);
    for (std::size_t j = i; j < m; ++j) {
      const double* aj = a.row(j);
      double dot = 0.0;
      for (std::size_t p = 0; p < k; ++p) dot += ai[p] * aj[p];
      product(i, j) = dot;
      product(j, i) = dot;
    }
  }
}

std::vector<double> row_sums(const Matrix& a) {
  std::vector<double> sums(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const double* ai = a.row(i);
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += ai[j];
    sums[i] = s;
  }
  return sums;
}

std::vector<double> col_sums(const Matrix& a) {
  std::vector<double> sums(a.cols(), 0.0);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += a(i, j);
    sums[j] = s;
  }
  return sums;
}

void scale_rows(Matrix& a, const std::vector<double>& factors) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double* ai = a.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) ai[j] *= factors[i];
  }
}

void scale_cols(Matrix& a, const std::vector<double>& factors) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double* ai = a.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) ai[j] *= factors[j];
  }
}

void geometric_symmetrize(Matrix& k) {
  for (std::size_t i = 0; i < k.rows(); ++i) {
    for (std::size_t j = i; j < k.rows(); ++j) {
      const double kij = k(i, j);
      const double kji = k(j, i);
      const double v = (kij == kji) ? kij : std::sqrt(kij * kji);
      k(i, j) = v;
      k(j, i) = v;
    }
  }
}

double frobenius_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ValidationError("frobenius_distance: shape mismatch");
  std::vector<double> partial(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const double* ai = a.row(i);
    const double* bi = b.row(i);
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double d = ai[j] - bi[j];
      s += d * d;
    }
    partial[i] = s;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return std::sqrt(total);
}

}  // namespace reference

}  // namespace ec3
