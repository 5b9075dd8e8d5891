#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mothernet/electric.hpp"
#include "mothernet/kernels.hpp"
#include "mothernet/schreier.hpp"

using namespace mothernet;
namespace k = mothernet::kernels;

namespace {

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

k::CsrMatrix random_csr(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  k::CsrMatrix a;
  std::uniform_int_distribution<std::size_t> per_row(0, 9);
  std::uniform_int_distribution<std::uint32_t> col(0, static_cast<std::uint32_t>(cols - 1));
  std::uniform_real_distribution<double> val(-2.0, 2.0);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t nnz = per_row(rng);
    for (std::size_t j = 0; j < nnz; ++j) {
      a.columns.push_back(col(rng));
      a.values.push_back(val(rng));
    }
    a.row_offsets.push_back(static_cast<std::uint32_t>(a.columns.size()));
  }
  return a;
}

std::vector<const k::KernelSet*> backends() {
  std::vector<const k::KernelSet*> out{&k::scalar_kernels()};
  if (const auto* simd = k::avx2_kernels()) out.push_back(simd);
  return out;
}

}  // namespace

TEST(Kernels, ScalarReference) {
  const auto& s = k::scalar_kernels();
  const std::vector<double> x{1, 2, 3}, y{4, 5, 6};
  EXPECT_DOUBLE_EQ(s.dot(x.data(), y.data(), 3), 32.0);
  std::vector<double> z = y;
  s.axpy(2.0, x.data(), z.data(), 3);
  EXPECT_EQ(z, (std::vector<double>{6, 9, 12}));
  z = y;
  s.xpby(x.data(), 0.5, z.data(), 3);
  EXPECT_EQ(z, (std::vector<double>{3, 4.5, 6}));
  s.multiply(x.data(), y.data(), z.data(), 3);
  EXPECT_EQ(z, (std::vector<double>{4, 10, 18}));
}

TEST(Kernels, ActiveIsSupported) {
  const auto& active = k::active_kernels();
  bool listed = false;
  for (const auto* b : backends()) listed = listed || b == &active;
  EXPECT_TRUE(listed) << active.name;
}

// Every backend agrees with the scalar loops, including remainder lanes.
TEST(Kernels, BackendsMatchScalar) {
  const auto& ref = k::scalar_kernels();
  std::mt19937_64 rng(7);
  for (const auto* b : backends()) {
    for (std::size_t n = 0; n <= 67; ++n) {
      const auto x = random_vector(rng, n), y = random_vector(rng, n);
      double norm = 0;
      for (std::size_t i = 0; i < n; ++i) norm += std::abs(x[i] * y[i]);
      EXPECT_NEAR(b->dot(x.data(), y.data(), n), ref.dot(x.data(), y.data(), n), 1e-14 * (norm + 1)) << b->name;

      auto y1 = y, y2 = y;
      b->axpy(0.37, x.data(), y1.data(), n);
      ref.axpy(0.37, x.data(), y2.data(), n);
      for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(y1[i], y2[i], 1e-15) << b->name;

      y1 = y, y2 = y;
      b->xpby(x.data(), -1.3, y1.data(), n);
      ref.xpby(x.data(), -1.3, y2.data(), n);
      for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(y1[i], y2[i], 1e-15) << b->name;

      b->multiply(x.data(), y.data(), y1.data(), n);
      ref.multiply(x.data(), y.data(), y2.data(), n);
      for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(y1[i], y2[i]) << b->name;
    }
  }
}

TEST(Kernels, SpmvMatchesScalar) {
  const auto& ref = k::scalar_kernels();
  std::mt19937_64 rng(11);
  for (const auto* b : backends()) {
    for (std::size_t rows : {1u, 3u, 17u, 200u}) {
      const auto a = random_csr(rng, rows, rows + 5);
      const auto x = random_vector(rng, rows + 5);
      std::vector<double> y1(rows), y2(rows);
      k::spmv(*b, a, x, y1);
      k::spmv(ref, a, x, y2);
      for (std::size_t i = 0; i < rows; ++i) EXPECT_NEAR(y1[i], y2[i], 1e-13) << b->name;
    }
  }
}

TEST(Kernels, SolverAgreesAcrossBackends) {
  const Network net = build_projected(2, TreeShape::constant(2), 9);
  const std::vector<VertexId> a{0};
  const auto b = net.vertices_in_positions(256, 512);
  std::vector<double> values;
  for (const auto* backend : backends()) {
    SolverOptions opts;
    opts.kernels = backend;
    const auto r = effective_resistance<double>(net, a, b, opts);
    EXPECT_LT(r.residual, 1e-10);
    values.push_back(r.value);
  }
  for (double v : values) EXPECT_NEAR(v, values.front(), 1e-10 * values.front());
}
