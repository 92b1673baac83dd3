#pragma once

// Shared polynomial cores for the elementwise kernels. The scalar reference
// path loops over these; the AVX2 path mirrors the exact operation sequence
// with intrinsics (and reuses these for loop tails), so both backends emit
// bit-identical values. Every operation here is exactly rounded (+,-,*,/,
// fma, rounding, bit moves), which is what makes that guarantee hold.
//
// Both kernel translation units are compiled with -ffp-contract=off so the
// compiler cannot fuse a*b+c behind our back.

#include <bit>
#include <cmath>
#include <cstdint>

namespace helionics::kernels::detail {

// exp: Cody-Waite range reduction, degree-(2,3) rational in r^2 (Cephes).
inline constexpr double kExpLo = -708.0;
inline constexpr double kExpHi = 708.0;
inline constexpr double kLog2E = 1.4426950408889634073599;
inline constexpr double kLn2Hi = 6.93145751953125e-1;
inline constexpr double kLn2Lo = 1.42860682030941723212e-6;
inline constexpr double kExpP0 = 1.26177193074810590878e-4;
inline constexpr double kExpP1 = 3.02994407707441961300e-2;
inline constexpr double kExpP2 = 9.99999999999999999910e-1;
inline constexpr double kExpQ0 = 3.00198505138664455042e-6;
inline constexpr double kExpQ1 = 2.52448340349684104192e-3;
inline constexpr double kExpQ2 = 2.27265548208155028766e-1;
inline constexpr double kExpQ3 = 2.00000000000000000005e0;

inline double exp_core(double x) {
    x = std::fmin(std::fmax(x, kExpLo), kExpHi);
    const double k = std::nearbyint(x * kLog2E);
    double r = std::fma(k, -kLn2Hi, x);
    r = std::fma(k, -kLn2Lo, r);
    const double z = r * r;
    const double p = r * std::fma(std::fma(kExpP0, z, kExpP1), z, kExpP2);
    const double q =
        std::fma(std::fma(std::fma(kExpQ0, z, kExpQ1), z, kExpQ2), z, kExpQ3);
    const double e = 1.0 + 2.0 * (p / (q - p));
    // scale by 2^k through the exponent field; k is in [-1022, 1022]
    const auto biased = static_cast<std::uint64_t>(static_cast<std::int64_t>(k) + 1023);
    const double two_k = std::bit_cast<double>(biased << 52);
    return e * two_k;
}

// log: frexp reduction to [sqrt(1/2), sqrt(2)), degree-(5,5) rational (Cephes).
inline constexpr double kSqrtHalf = 0.70710678118654752440;
inline constexpr double kLogP0 = 1.01875663804580931796e-4;
inline constexpr double kLogP1 = 4.97494994976747001425e-1;
inline constexpr double kLogP2 = 4.70579119878881725854e0;
inline constexpr double kLogP3 = 1.44989225341610930846e1;
inline constexpr double kLogP4 = 1.79368678507819816313e1;
inline constexpr double kLogP5 = 7.70838733755885391666e0;
inline constexpr double kLogQ0 = 1.12873587189167450590e1;
inline constexpr double kLogQ1 = 4.52279145837532221105e1;
inline constexpr double kLogQ2 = 8.29875266912776603211e1;
inline constexpr double kLogQ3 = 7.11544750618563894466e1;
inline constexpr double kLogQ4 = 2.31251620126765340583e1;
inline constexpr double kLn2LoNeg = -2.121944400546905827679e-4;
inline constexpr double kLn2Coarse = 0.693359375;

inline double log_core(double x) {
    // x must be a positive normal number; callers floor their inputs.
    const auto bits = std::bit_cast<std::uint64_t>(x);
    std::int64_t e = static_cast<std::int64_t>(bits >> 52) - 1022;
    double m = std::bit_cast<double>((bits & 0x000FFFFFFFFFFFFFull) |
                                     0x3FE0000000000000ull);
    if (m < kSqrtHalf) {
        m = m + m;
        e -= 1;
    }
    const double f = m - 1.0;
    const double z = f * f;
    const double pn = std::fma(
        std::fma(std::fma(std::fma(std::fma(kLogP0, f, kLogP1), f, kLogP2), f,
                          kLogP3),
                 f, kLogP4),
        f, kLogP5);
    const double qd = std::fma(
        std::fma(std::fma(std::fma(f + kLogQ0, f, kLogQ1), f, kLogQ2), f,
                 kLogQ3),
        f, kLogQ4);
    const double ed = static_cast<double>(e);
    double y = f * (z * (pn / qd));
    y = std::fma(ed, kLn2LoNeg, y);
    y = y - 0.5 * z;
    double r = f + y;
    r = std::fma(ed, kLn2Coarse, r);
    return r;
}

inline double xlogx_core(double x, double floor_value) {
    if (x < floor_value) return 0.0;
    return x * log_core(x);
}

// Function-pointer table one backend exports.
struct KernelTable {
    void (*vexp)(const double*, double*, std::size_t);
    void (*vlog)(const double*, double*, std::size_t);
    void (*vxlogx)(const double*, double*, std::size_t);
    double (*dot)(const double*, const double*, std::size_t);
    double (*dot3)(const double*, const double*, const double*, std::size_t);
};

extern const KernelTable kScalarTable;
#ifdef HELIONICS_HAVE_AVX2
extern const KernelTable kAvx2Table;
#endif

} // namespace helionics::kernels::detail
