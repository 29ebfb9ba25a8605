#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace flexarm::kernels {

// Dense f64 kernels backing the neural nets. Every function has a scalar
// reference implementation and SIMD variants selected at runtime; the
// variants are equivalence-tested against the reference. Reductions (dot,
// gemv, gemm) may use FMA and differ from the reference by rounding only.
// Elementwise kernels (adam_update, lerp_towards, relu_*, add_row_bias,
// col_sum) are bitwise identical across variants.

enum class Isa { scalar = 0, avx2 = 1, avx512 = 2 };

const char* isa_name(Isa isa);

// ISAs usable on this machine, in increasing preference order. Always
// contains Isa::scalar.
std::vector<Isa> available_isas();

// Active variant. Defaults to the widest available; FLEXARM_ISA=scalar|avx2|
// avx512 overrides, as does force_isa().
Isa active_isa();
void force_isa(Isa isa);

struct AdamScalars {
  double lr;
  double beta1;
  double beta2;
  double eps;
  double weight_decay;  // decoupled; 0 disables
  double bias1;         // 1 - beta1^t
  double bias2;         // 1 - beta2^t
};

double dot(const double* a, const double* b, size_t n);

// y = W x, W row-major (rows x cols), x has cols entries.
void gemv(double* y, const double* W, const double* x, size_t rows, size_t cols);

// y = W^T g, y has cols entries, g has rows entries.
void gemv_t(double* y, const double* W, const double* g, size_t rows, size_t cols);

// C[m,n] = A[m,k] * B[n,k]^T   (row-major throughout)
void gemm_nt(double* C, const double* A, const double* B, size_t m, size_t n, size_t k);

// C[m,n] = A[m,k] * B[k,n]
void gemm_nn(double* C, const double* A, const double* B, size_t m, size_t n, size_t k);

// C[m,n] = A[k,m]^T * B[k,n]
void gemm_tn(double* C, const double* A, const double* B, size_t m, size_t n, size_t k);

// y += a * x
void axpy(double* y, double a, const double* x, size_t n);

// target = (1 - tau) * target + tau * online
void lerp_towards(double* target, const double* online, double tau, size_t n);

// Y[i,:] += b for each of the m rows.
void add_row_bias(double* Y, const double* b, size_t m, size_t n);

// out[j] = sum_i A[i,j]
void col_sum(double* out, const double* A, size_t m, size_t n);

void relu_inplace(double* x, size_t n);

// d[i] = z[i] > 0 ? d[i] : 0
void relu_backward(double* d, const double* z, size_t n);

// Bias-corrected Adam with decoupled weight decay:
//   m = b1*m + (1-b1)*g;  v = b2*v + (1-b2)*g*g
//   p -= lr * (m/bias1 / (sqrt(v/bias2) + eps) + weight_decay*p)
// Returns false if any updated parameter is non-finite.
bool adam_update(double* p, double* m, double* v, const double* g, size_t n,
                 const AdamScalars& s);

}  // namespace flexarm::kernels
