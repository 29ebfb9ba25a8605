// Scalar reference kernels. Compiled with -ffp-contract=off (see
// CMakeLists.txt) so the arithmetic is exactly the written sequence of IEEE
// operations; the SIMD variants of the elementwise kernels reproduce it
// bit for bit.

#include <cmath>
#include <cstring>

#include "kernels/kernels_table.hpp"

namespace flexarm::kernels {
namespace {

double dot_scalar(const double* a, const double* b, size_t n) {
  double s = 0.0;
  for (size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

void gemv_scalar(double* y, const double* W, const double* x, size_t rows, size_t cols) {
  for (size_t r = 0; r < rows; ++r) y[r] = dot_scalar(W + r * cols, x, cols);
}

void gemv_t_scalar(double* y, const double* W, const double* g, size_t rows, size_t cols) {
  std::memset(y, 0, cols * sizeof(double));
  for (size_t r = 0; r < rows; ++r) {
    const double gr = g[r];
    const double* row = W + r * cols;
    for (size_t c = 0; c < cols; ++c) y[c] += gr * row[c];
  }
}

void gemm_nt_scalar(double* C, const double* A, const double* B, size_t m, size_t n, size_t k) {
  for (size_t i = 0; i < m; ++i) {
    const double* a = A + i * k;
    for (size_t j = 0; j < n; ++j) {
      C[i * n + j] = dot_scalar(a, B + j * k, k);
    }
  }
}

void gemm_nn_scalar(double* C, const double* A, const double* B, size_t m, size_t n, size_t k) {
  for (size_t i = 0; i < m; ++i) {
    double* c = C + i * n;
    std::memset(c, 0, n * sizeof(double));
    for (size_t p = 0; p < k; ++p) {
      const double a = A[i * k + p];
      const double* b = B + p * n;
      for (size_t j = 0; j < n; ++j) c[j] += a * b[j];
    }
  }
}

void gemm_tn_scalar(double* C, const double* A, const double* B, size_t m, size_t n, size_t k) {
  for (size_t i = 0; i < m; ++i) {
    double* c = C + i * n;
    std::memset(c, 0, n * sizeof(double));
    for (size_t p = 0; p < k; ++p) {
      const double a = A[p * m + i];
      const double* b = B + p * n;
      for (size_t j = 0; j < n; ++j) c[j] += a * b[j];
    }
  }
}

void axpy_scalar(double* y, double a, const double* x, size_t n) {
  for (size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void lerp_towards_scalar(double* target, const double* online, double tau, size_t n) {
  const double keep = 1.0 - tau;
  for (size_t i = 0; i < n; ++i) target[i] = target[i] * keep + online[i] * tau;
}

void add_row_bias_scalar(double* Y, const double* b, size_t m, size_t n) {
  for (size_t i = 0; i < m; ++i) {
    double* row = Y + i * n;
    for (size_t j = 0; j < n; ++j) row[j] += b[j];
  }
}

void col_sum_scalar(double* out, const double* A, size_t m, size_t n) {
  std::memset(out, 0, n * sizeof(double));
  for (size_t i = 0; i < m; ++i) {
    const double* row = A + i * n;
    for (size_t j = 0; j < n; ++j) out[j] += row[j];
  }
}

void relu_inplace_scalar(double* x, size_t n) {
  for (size_t i = 0; i < n; ++i) x[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_backward_scalar(double* d, const double* z, size_t n) {
  for (size_t i = 0; i < n; ++i) d[i] = z[i] > 0.0 ? d[i] : 0.0;
}

bool adam_update_scalar(double* p, double* m, double* v, const double* g, size_t n,
                        const AdamScalars& s) {
  const double one_m_b1 = 1.0 - s.beta1;
  const double one_m_b2 = 1.0 - s.beta2;
  bool finite = true;
  for (size_t i = 0; i < n; ++i) {
    const double gi = g[i];
    const double mi = s.beta1 * m[i] + one_m_b1 * gi;
    const double vi = s.beta2 * v[i] + one_m_b2 * (gi * gi);
    m[i] = mi;
    v[i] = vi;
    const double mhat = mi / s.bias1;
    const double vhat = vi / s.bias2;
    const double upd = mhat / (std::sqrt(vhat) + s.eps) + s.weight_decay * p[i];
    const double pi = p[i] - s.lr * upd;
    p[i] = pi;
    finite = finite && std::isfinite(pi);
  }
  return finite;
}

}  // namespace

const KernelTable kScalarKernels = {
    dot_scalar,       gemv_scalar,         gemv_t_scalar,   gemm_nt_scalar,
    gemm_nn_scalar,   gemm_tn_scalar,      axpy_scalar,     lerp_towards_scalar,
    add_row_bias_scalar, col_sum_scalar,   relu_inplace_scalar,
    relu_backward_scalar, adam_update_scalar,
};

}  // namespace flexarm::kernels
