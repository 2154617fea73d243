// AVX2 variants of the kernel table. Compiled with -mavx2 in its own TU;
// every routine follows the schedule documented in kernels.hpp so results
// are bit-identical to the scalar reference (no FMA: mul and add round
// separately, exactly like the scalar code).

#include "actprompt/core/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace actprompt::kernels {

const Ops* avx2_ops_or_null();
bool avx2_runtime_supported();

#if defined(__AVX2__)

namespace {

void avx2_add(std::size_t n, const double* a, const double* b, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(a + i),
                                            _mm256_loadu_pd(b + i)));
  }
  for (; i < n; ++i) out[i] = a[i] + b[i];
}

void avx2_sub(std::size_t n, const double* a, const double* b, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_loadu_pd(a + i),
                                            _mm256_loadu_pd(b + i)));
  }
  for (; i < n; ++i) out[i] = a[i] - b[i];
}

void avx2_mul(std::size_t n, const double* a, const double* b, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(a + i),
                                            _mm256_loadu_pd(b + i)));
  }
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

void avx2_scale(std::size_t n, double c, const double* a, double* out) {
  const __m256d vc = _mm256_set1_pd(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_mul_pd(vc, _mm256_loadu_pd(a + i)));
  }
  for (; i < n; ++i) out[i] = c * a[i];
}

void avx2_axpy(std::size_t n, double c, const double* x, double* y) {
  const __m256d vc = _mm256_set1_pd(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d prod = _mm256_mul_pd(vc, _mm256_loadu_pd(x + i));
    _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), prod));
  }
  for (; i < n; ++i) y[i] += c * x[i];
}

void avx2_madd(std::size_t n, const double* a, const double* b, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d prod =
        _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(out + i), prod));
  }
  for (; i < n; ++i) out[i] += a[i] * b[i];
}

void avx2_affine(std::size_t n, const double* x, double mu, double inv_std,
                 const double* gamma, const double* beta, double* out) {
  const __m256d vmu = _mm256_set1_pd(mu);
  const __m256d vs = _mm256_set1_pd(inv_std);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_sub_pd(_mm256_loadu_pd(x + i), vmu);
    v = _mm256_mul_pd(v, vs);
    v = _mm256_mul_pd(v, _mm256_loadu_pd(gamma + i));
    v = _mm256_add_pd(v, _mm256_loadu_pd(beta + i));
    _mm256_storeu_pd(out + i, v);
  }
  for (; i < n; ++i) out[i] = (x[i] - mu) * inv_std * gamma[i] + beta[i];
}

double avx2_dot(std::size_t n, const double* a, const double* b) {
  __m256d vacc = _mm256_setzero_pd();
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d prod =
        _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    vacc = _mm256_add_pd(vacc, prod);
  }
  alignas(32) double acc[4];
  _mm256_store_pd(acc, vacc);
  for (std::size_t i = n4; i < n; ++i) acc[i - n4] += a[i] * b[i];
  return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

double avx2_sum(std::size_t n, const double* a) {
  __m256d vacc = _mm256_setzero_pd();
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    vacc = _mm256_add_pd(vacc, _mm256_loadu_pd(a + i));
  }
  alignas(32) double acc[4];
  _mm256_store_pd(acc, vacc);
  for (std::size_t i = n4; i < n; ++i) acc[i - n4] += a[i];
  return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

double avx2_vmax(std::size_t n, const double* a) {
  if (n < 4) {
    double m = a[0];
    for (std::size_t i = 1; i < n; ++i) m = a[i] > m ? a[i] : m;
    return m;
  }
  __m256d vm = _mm256_loadu_pd(a);
  std::size_t i = 4;
  for (; i + 4 <= n; i += 4) vm = _mm256_max_pd(vm, _mm256_loadu_pd(a + i));
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, vm);
  double m = lanes[0];
  for (int k = 1; k < 4; ++k) m = lanes[k] > m ? lanes[k] : m;
  for (; i < n; ++i) m = a[i] > m ? a[i] : m;
  return m;
}

const Ops kAvx2Ops = {
    avx2_add, avx2_sub,  avx2_mul,  avx2_scale, avx2_axpy,
    avx2_madd, avx2_affine, avx2_dot, avx2_sum, avx2_vmax,
    "avx2",
};

}  // namespace

const Ops* avx2_ops_or_null() { return &kAvx2Ops; }

bool avx2_runtime_supported() {
#if defined(__GNUC__) || defined(__clang__)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

#else  // !__AVX2__

const Ops* avx2_ops_or_null() { return nullptr; }
bool avx2_runtime_supported() { return false; }

#endif

}  // namespace actprompt::kernels
