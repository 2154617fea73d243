#include "actprompt/core/kernels.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

namespace actprompt::kernels {

namespace {

void scalar_add(std::size_t n, const double* a, const double* b, double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
}

void scalar_sub(std::size_t n, const double* a, const double* b, double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
}

void scalar_mul(std::size_t n, const double* a, const double* b, double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void scalar_scale(std::size_t n, double c, const double* a, double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = c * a[i];
}

void scalar_axpy(std::size_t n, double c, const double* x, double* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += c * x[i];
}

void scalar_madd(std::size_t n, const double* a, const double* b, double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] += a[i] * b[i];
}

void scalar_affine(std::size_t n, const double* x, double mu, double inv_std,
                   const double* gamma, const double* beta, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = (x[i] - mu) * inv_std * gamma[i] + beta[i];
  }
}

double scalar_dot(std::size_t n, const double* a, const double* b) {
  double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0, acc3 = 0.0;
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    acc0 += a[i] * b[i];
    acc1 += a[i + 1] * b[i + 1];
    acc2 += a[i + 2] * b[i + 2];
    acc3 += a[i + 3] * b[i + 3];
  }
  double acc[4] = {acc0, acc1, acc2, acc3};
  for (std::size_t i = n4; i < n; ++i) acc[i - n4] += a[i] * b[i];
  return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

double scalar_sum(std::size_t n, const double* a) {
  double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0, acc3 = 0.0;
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    acc0 += a[i];
    acc1 += a[i + 1];
    acc2 += a[i + 2];
    acc3 += a[i + 3];
  }
  double acc[4] = {acc0, acc1, acc2, acc3};
  for (std::size_t i = n4; i < n; ++i) acc[i - n4] += a[i];
  return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

double scalar_vmax(std::size_t n, const double* a) {
  double m = a[0];
  for (std::size_t i = 1; i < n; ++i) m = a[i] > m ? a[i] : m;
  return m;
}

const Ops kScalarOps = {
    scalar_add, scalar_sub,  scalar_mul,  scalar_scale, scalar_axpy,
    scalar_madd, scalar_affine, scalar_dot, scalar_sum, scalar_vmax,
    "scalar",
};

std::atomic<const Ops*> g_active{nullptr};

const Ops* pick_default() {
  if (backend_available(Backend::kAvx2)) return &ops_for(Backend::kAvx2);
  return &kScalarOps;
}

}  // namespace

// Defined in kernels_avx2.cpp; null when the binary lacks AVX2 codegen.
const Ops* avx2_ops_or_null();
bool avx2_runtime_supported();

const Ops& scalar_ops() { return kScalarOps; }

bool backend_available(Backend b) {
  switch (b) {
    case Backend::kScalar:
      return true;
    case Backend::kAvx2:
      return avx2_ops_or_null() != nullptr && avx2_runtime_supported();
  }
  return false;
}

const Ops& ops_for(Backend b) {
  if (b == Backend::kScalar) return kScalarOps;
  if (b == Backend::kAvx2 && backend_available(b)) return *avx2_ops_or_null();
  throw std::invalid_argument("kernel backend not available on this machine");
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out{Backend::kScalar};
  if (backend_available(Backend::kAvx2)) out.push_back(Backend::kAvx2);
  return out;
}

const Ops& active() {
  const Ops* p = g_active.load(std::memory_order_acquire);
  if (p == nullptr) {
    p = pick_default();
    g_active.store(p, std::memory_order_release);
  }
  return *p;
}

void set_backend(Backend b) {
  g_active.store(&ops_for(b), std::memory_order_release);
}

std::string active_name() { return active().name; }

}  // namespace actprompt::kernels
