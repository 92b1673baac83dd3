// Reference kernels. The reductions keep four independent accumulator lanes
// and combine them as (acc0+acc2)+(acc1+acc3), matching the AVX2 register
// layout, so both backends sum in the same order.

#include "kernels_core.hpp"

#include "helionics/kernels.hpp"

namespace helionics::kernels::detail {
namespace {

void vexp_scalar(const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = exp_core(x[i]);
}

void vlog_scalar(const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = log_core(x[i]);
}

void vxlogx_scalar(const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = xlogx_core(x[i], kDensityFloor);
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    const std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4) {
        acc[0] = std::fma(a[i + 0], b[i + 0], acc[0]);
        acc[1] = std::fma(a[i + 1], b[i + 1], acc[1]);
        acc[2] = std::fma(a[i + 2], b[i + 2], acc[2]);
        acc[3] = std::fma(a[i + 3], b[i + 3], acc[3]);
    }
    for (std::size_t i = n4; i < n; ++i)
        acc[i - n4] = std::fma(a[i], b[i], acc[i - n4]);
    // idle lanes still receive the +0.0 the masked vector tail adds
    for (std::size_t j = n - n4; j < 4 && n4 < n; ++j) acc[j] += 0.0;
    return (acc[0] + acc[2]) + (acc[1] + acc[3]);
}

double dot3_scalar(const double* a, const double* b, const double* c,
                   std::size_t n) {
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    const std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4) {
        acc[0] = std::fma(a[i + 0] * b[i + 0], c[i + 0], acc[0]);
        acc[1] = std::fma(a[i + 1] * b[i + 1], c[i + 1], acc[1]);
        acc[2] = std::fma(a[i + 2] * b[i + 2], c[i + 2], acc[2]);
        acc[3] = std::fma(a[i + 3] * b[i + 3], c[i + 3], acc[3]);
    }
    for (std::size_t i = n4; i < n; ++i)
        acc[i - n4] = std::fma(a[i] * b[i], c[i], acc[i - n4]);
    for (std::size_t j = n - n4; j < 4 && n4 < n; ++j) acc[j] += 0.0;
    return (acc[0] + acc[2]) + (acc[1] + acc[3]);
}

} // namespace

const KernelTable kScalarTable = {vexp_scalar, vlog_scalar, vxlogx_scalar,
                                  dot_scalar, dot3_scalar};

} // namespace helionics::kernels::detail
