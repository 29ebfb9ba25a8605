#pragma once

#include <cstddef>

#include "kernels/kernels.hpp"

namespace flexarm::kernels {

// One entry per kernel; each ISA translation unit fills in a table.
struct KernelTable {
  double (*dot)(const double*, const double*, size_t);
  void (*gemv)(double*, const double*, const double*, size_t, size_t);
  void (*gemv_t)(double*, const double*, const double*, size_t, size_t);
  void (*gemm_nt)(double*, const double*, const double*, size_t, size_t, size_t);
  void (*gemm_nn)(double*, const double*, const double*, size_t, size_t, size_t);
  void (*gemm_tn)(double*, const double*, const double*, size_t, size_t, size_t);
  void (*axpy)(double*, double, const double*, size_t);
  void (*lerp_towards)(double*, const double*, double, size_t);
  void (*add_row_bias)(double*, const double*, size_t, size_t);
  void (*col_sum)(double*, const double*, size_t, size_t);
  void (*relu_inplace)(double*, size_t);
  void (*relu_backward)(double*, const double*, size_t);
  bool (*adam_update)(double*, double*, double*, const double*, size_t, const AdamScalars&);
};

extern const KernelTable kScalarKernels;
#ifdef FLEXARM_X86_KERNELS
extern const KernelTable kAvx2Kernels;
extern const KernelTable kAvx512Kernels;
#endif

}  // namespace flexarm::kernels
