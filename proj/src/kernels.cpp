#include "cornerdet/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <utility>

#include "cornerdet/errors.hpp"

namespace cornerdet::kernels {

namespace {

bool g_parallel = true;

// Below these sizes thread startup costs more than the loop body.
constexpr int kLuThreshold = 96;
constexpr int kMatmulThreshold = 64;
constexpr int kConvThreshold = 256;

constexpr double kPivotFloor = 1e-300;

int lu_factor_impl(Cplx* a, int n, int* piv, int* singular_col, bool parallel) {
  int sign = 1;
  *singular_col = -1;
  for (int k = 0; k < n; ++k) {
    int p = k;
    double best = std::abs(a[k * n + k]);
    for (int i = k + 1; i < n; ++i) {
      double v = std::abs(a[i * n + k]);
      if (v > best) {
        best = v;
        p = i;
      }
    }
    piv[k] = p;
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    if (best < kPivotFloor) {
      if (*singular_col < 0) *singular_col = k;
      continue;
    }
    const Cplx inv = 1.0 / a[k * n + k];
    const Cplx* row_k = a + k * n;
#pragma omp parallel for schedule(static) if (parallel)
    for (int i = k + 1; i < n; ++i) {
      Cplx f = a[i * n + k] * inv;
      a[i * n + k] = f;
      Cplx* row_i = a + i * n;
      for (int j = k + 1; j < n; ++j) row_i[j] -= f * row_k[j];
    }
  }
  return sign;
}

void matmul_impl(const Cplx* a, const Cplx* b, Cplx* c, int n, int k, int m,
                 bool parallel) {
#pragma omp parallel for schedule(static) if (parallel)
  for (int i = 0; i < n; ++i) {
    Cplx* row_c = c + i * m;
    for (int j = 0; j < m; ++j) row_c[j] = 0.0;
    const Cplx* row_a = a + i * k;
    for (int l = 0; l < k; ++l) {
      Cplx av = row_a[l];
      if (av == Cplx(0.0)) continue;
      const Cplx* row_b = b + l * m;
      for (int j = 0; j < m; ++j) row_c[j] += av * row_b[j];
    }
  }
}

std::vector<Cplx> convolve_impl(const std::vector<Cplx>& u,
                                const std::vector<Cplx>& v, int half,
                                bool parallel) {
  const int len = 2 * half + 1;
  if (int(u.size()) != len || int(v.size()) != len)
    throw ShapeError("convolve: sequences must have length 2*half+1");
  std::vector<Cplx> w(len);
#pragma omp parallel for schedule(static) if (parallel)
  for (int idx = 0; idx < len; ++idx) {
    const int k = idx - half;
    const int m_lo = std::max(-half, k - half);
    const int m_hi = std::min(half, k + half);
    Cplx s = 0.0;
    for (int m = m_lo; m <= m_hi; ++m) s += u[m + half] * v[k - m + half];
    w[idx] = s;
  }
  return w;
}

}  // namespace

void set_parallel(bool on) { g_parallel = on; }
bool parallel_enabled() { return g_parallel; }

int lu_factor_serial(Cplx* a, int n, int* piv, int* singular_col) {
  return lu_factor_impl(a, n, piv, singular_col, false);
}

int lu_factor_parallel(Cplx* a, int n, int* piv, int* singular_col) {
  return lu_factor_impl(a, n, piv, singular_col, true);
}

int lu_factor(Cplx* a, int n, int* piv, int* singular_col) {
  bool par = g_parallel && n >= kLuThreshold;
  return lu_factor_impl(a, n, piv, singular_col, par);
}

void matmul_serial(const Cplx* a, const Cplx* b, Cplx* c, int n, int k, int m) {
  matmul_impl(a, b, c, n, k, m, false);
}

void matmul_parallel(const Cplx* a, const Cplx* b, Cplx* c, int n, int k, int m) {
  matmul_impl(a, b, c, n, k, m, true);
}

void matmul(const Cplx* a, const Cplx* b, Cplx* c, int n, int k, int m) {
  bool par = g_parallel && n >= kMatmulThreshold;
  matmul_impl(a, b, c, n, k, m, par);
}

std::vector<Cplx> convolve_serial(const std::vector<Cplx>& u,
                                  const std::vector<Cplx>& v, int half) {
  return convolve_impl(u, v, half, false);
}

std::vector<Cplx> convolve_parallel(const std::vector<Cplx>& u,
                                    const std::vector<Cplx>& v, int half) {
  return convolve_impl(u, v, half, true);
}

std::vector<Cplx> convolve(const std::vector<Cplx>& u,
                           const std::vector<Cplx>& v, int half) {
  bool par = g_parallel && half >= kConvThreshold;
  return convolve_impl(u, v, half, par);
}

}  // namespace cornerdet::kernels
