#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mothernet::kernels {

/// Row-compressed sparse matrix used by the iterative solver.
struct CsrMatrix {
  std::vector<std::uint32_t> row_offsets{0};
  std::vector<std::uint32_t> columns;
  std::vector<double> values;

  std::size_t rows() const { return row_offsets.size() - 1; }
};

/// One implementation of the solver's inner loops. Every backend must agree
/// with the scalar one up to floating-point reassociation.
struct KernelSet {
  const char* name;
  double (*dot)(const double* x, const double* y, std::size_t n);
  /// y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  /// y = x + beta * y
  void (*xpby)(const double* x, double beta, double* y, std::size_t n);
  /// out = x .* y
  void (*multiply)(const double* x, const double* y, double* out, std::size_t n);
  /// y = A x
  void (*spmv)(const std::uint32_t* row_offsets, const std::uint32_t* columns, const double* values,
               std::size_t rows, const double* x, double* y);
};

const KernelSet& scalar_kernels();

/// nullptr when the AVX2 backend was not compiled in or the CPU lacks AVX2/FMA.
const KernelSet* avx2_kernels();

/// Fastest supported backend, unless MOTHERNET_SIMD=scalar|avx2 pins one.
const KernelSet& active_kernels();

inline double dot(const KernelSet& k, std::span<const double> x, std::span<const double> y) {
  return k.dot(x.data(), y.data(), x.size());
}

inline void spmv(const KernelSet& k, const CsrMatrix& a, std::span<const double> x, std::span<double> y) {
  k.spmv(a.row_offsets.data(), a.columns.data(), a.values.data(), a.rows(), x.data(), y.data());
}

}  // namespace mothernet::kernels
