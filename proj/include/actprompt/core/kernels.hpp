#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace actprompt::kernels {

// Inner-loop primitives behind the tensor operations. Each backend implements
// the same fixed operation schedule: lane-parallel ops (add/sub/mul/scale/
// axpy/madd/affine) have one independent dependency chain per element, and
// reductions (dot/sum) use a 4-accumulator block schedule with the tail
// folded into accumulator (i - n4) and a final (a0+a1)+(a2+a3) combine.
// Under IEEE-754 this makes every backend produce bit-identical results,
// which the equivalence tests assert exactly.
struct Ops {
  void (*add)(std::size_t n, const double* a, const double* b, double* out);
  void (*sub)(std::size_t n, const double* a, const double* b, double* out);
  void (*mul)(std::size_t n, const double* a, const double* b, double* out);
  void (*scale)(std::size_t n, double c, const double* a, double* out);
  // y[i] += c * x[i]
  void (*axpy)(std::size_t n, double c, const double* x, double* y);
  // out[i] += a[i] * b[i]
  void (*madd)(std::size_t n, const double* a, const double* b, double* out);
  // out[i] = (x[i] - mu) * inv_std * gamma[i] + beta[i]
  void (*affine)(std::size_t n, const double* x, double mu, double inv_std,
                 const double* gamma, const double* beta, double* out);
  double (*dot)(std::size_t n, const double* a, const double* b);
  double (*sum)(std::size_t n, const double* a);
  // max over n >= 1 elements (exact; no rounding involved)
  double (*vmax)(std::size_t n, const double* a);
  const char* name;
};

enum class Backend { kScalar, kAvx2 };

const Ops& scalar_ops();
bool backend_available(Backend b);
const Ops& ops_for(Backend b);  // throws std::invalid_argument if unavailable
std::vector<Backend> available_backends();

// Active table. Selected once at startup (best available), overridable for
// tests and benchmarking.
const Ops& active();
void set_backend(Backend b);
std::string active_name();

}  // namespace actprompt::kernels
