#ifndef EC3_KERNELS_HPP
#define EC3_KERNELS_HPP

#include <vector>

#include "ec3/matrix.hpp"

// Hot dense loops, provided twice: ec3::kernels holds the OpenMP versions
// used by the library, ec3::reference holds plain serial loops kept for
// testing and benchmarking. Each output element is produced by a single
// serial inner loop and cross-element reductions sum fixed-size row
// partials in index order, so both versions return bitwise-identical
// results at any thread count.

namespace ec3 {

namespace kernels {

// product = a * b
void matmul(const Matrix& a, const Matrix& b, Matrix& product);

// product = a^T * b
void matmul_transposed(const Matrix& a, const Matrix& b, Matrix& product);

// product = a * a^T
void gram(const Matrix& a, Matrix& product);

std::vector<double> row_sums(const Matrix& a);
std::vector<double> col_sums(const Matrix& a);

// a(i, j) *= factors[i]
void scale_rows(Matrix& a, const std::vector<double>& factors);
// a(i, j) *= factors[j]
void scale_cols(Matrix& a, const std::vector<double>& factors);

// k(i, j) = k(j, i) = sqrt(k(i, j) * k(j, i))
void geometric_symmetrize(Matrix& k);

double frobenius_distance(const Matrix& a, const Matrix& b);

}  // namespace kernels

namespace reference {

void matmul(const Matrix& a, const Matrix& b, Matrix& product);
void matmul_transposed(const Matrix& a, const Matrix& b, Matrix& product);
void gram(const Matrix& a, Matrix& product);
std::vector<double> row_sums(const Matrix& a);
std::vector<double> col_sums(const Matrix& a);
void scale_rows(Matrix& a, const std::vector<double>& factors);
void scale_cols(Matrix& a, const std::vector<double>& factors);
void geometric_symmetrize(Matrix& k);
double frobenius_distance(const Matrix& a, const Matrix& b);

}  // namespace reference

}  // namespace ec3

#endif
