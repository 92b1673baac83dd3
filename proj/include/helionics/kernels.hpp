#pragma once

#include <cstddef>
#include <span>
#include <string>

namespace helionics::kernels {

/// Densities below this value are treated as exact zero inside logarithms
/// (the 0*ln 0 = 0 convention).
inline constexpr double kDensityFloor = 1e-300;

enum class Backend {
    Auto,   // pick the widest supported instruction set at first use
    Scalar, // portable reference path
    Avx2,   // x86 AVX2+FMA variants
};

/// Backend currently driving the dispatch table.
Backend active_backend();

/// Force a backend (tests and the HELIONICS_SIMD env var use this).
/// Throws std::invalid_argument if the CPU does not support the request.
void set_backend(Backend b);

std::string backend_name(Backend b);

/// True when the running CPU can execute the AVX2+FMA variants.
bool cpu_has_avx2();

// Elementwise kernels. All backends produce bit-identical outputs: the
// scalar reference and the SIMD variants share the same polynomial cores,
// evaluated with the same exactly-rounded operation sequence.

/// y[i] = exp(x[i]); arguments are clamped to [-708, 708].
void vexp(std::span<const double> x, std::span<double> y);

/// y[i] = ln(x[i]); defined for x > 0 (callers floor their densities).
void vlog(std::span<const double> x, std::span<double> y);

/// y[i] = x[i]*ln(x[i]) with y = 0 wherever x < kDensityFloor.
void vxlogx(std::span<const double> x, std::span<double> y);

// Reductions. Summation uses four independent accumulator lanes combined
// as (acc0+acc2)+(acc1+acc3), so the result is identical for the scalar
// and vector paths and reproducible run to run.

/// sum_i a[i]*b[i]
double dot(std::span<const double> a, std::span<const double> b);

/// sum_i a[i]*b[i]*c[i]
double dot3(std::span<const double> a, std::span<const double> b,
            std::span<const double> c);

/// Fixed-order pairwise summation (backend independent).
double pairwise_sum(std::span<const double> x);

} // namespace helionics::kernels
