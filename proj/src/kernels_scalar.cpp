#include "mothernet/kernels.hpp"

namespace mothernet::kernels {

namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += x[i] * y[i];
  return sum;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void xpby_scalar(const double* x, double beta, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = x[i] + beta * y[i];
}

void multiply_scalar(const double* x, const double* y, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] * y[i];
}

void spmv_scalar(const std::uint32_t* row_offsets, const std::uint32_t* columns, const double* values,
                 std::size_t rows, const double* x, double* y) {
  for (std::size_t r = 0; r < rows; ++r) {
    double sum = 0.0;
    for (std::uint32_t j = row_offsets[r]; j < row_offsets[r + 1]; ++j) sum += values[j] * x[columns[j]];
    y[r] = sum;
  }
}

}  // namespace

const KernelSet& scalar_kernels() {
  static const KernelSet set{"scalar", dot_scalar, axpy_scalar, xpby_scalar, multiply_scalar, spmv_scalar};
  return set;
}

}  // namespace mothernet::kernels
