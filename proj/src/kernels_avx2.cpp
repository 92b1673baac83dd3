// AVX2+FMA kernel variants. Each vector body mirrors the scalar core in
// kernels_core.hpp operation for operation; loop tails call the scalar core
// directly. Outputs are bit-identical to the scalar backend (the equivalence
// suite asserts this on random inputs).

#include "kernels_core.hpp"

#include "helionics/kernels.hpp"

#include <immintrin.h>

namespace helionics::kernels::detail {
namespace {

inline __m256d set1(double v) { return _mm256_set1_pd(v); }

inline __m256d exp4(__m256d x) {
    x = _mm256_max_pd(x, set1(kExpLo));
    x = _mm256_min_pd(x, set1(kExpHi));
    const __m256d k = _mm256_round_pd(
        _mm256_mul_pd(x, set1(kLog2E)),
        _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fmadd_pd(k, set1(-kLn2Hi), x);
    r = _mm256_fmadd_pd(k, set1(-kLn2Lo), r);
    const __m256d z = _mm256_mul_pd(r, r);
    const __m256d p = _mm256_mul_pd(
        r, _mm256_fmadd_pd(_mm256_fmadd_pd(set1(kExpP0), z, set1(kExpP1)), z,
                           set1(kExpP2)));
    const __m256d q = _mm256_fmadd_pd(
        _mm256_fmadd_pd(_mm256_fmadd_pd(set1(kExpQ0), z, set1(kExpQ1)), z,
                        set1(kExpQ2)),
        z, set1(kExpQ3));
    const __m256d w = _mm256_div_pd(p, _mm256_sub_pd(q, p));
    const __m256d e = _mm256_add_pd(set1(1.0), _mm256_mul_pd(set1(2.0), w));
    // 2^k via the exponent field; k+1023 is integral in [1, 2045], so its
    // value appears in the low mantissa bits after adding 1.5*2^52
    const __m256d magic = set1(6755399441055744.0); // 1.5 * 2^52
    const __m256d biased = _mm256_add_pd(k, set1(1023.0));
    __m256i mi = _mm256_castpd_si256(_mm256_add_pd(biased, magic));
    mi = _mm256_and_si256(mi, _mm256_set1_epi64x(0xFFF));
    const __m256d two_k = _mm256_castsi256_pd(_mm256_slli_epi64(mi, 52));
    return _mm256_mul_pd(e, two_k);
}

inline __m256d log4(__m256d x) {
    const __m256i bits = _mm256_castpd_si256(x);
    __m256i e = _mm256_sub_epi64(_mm256_srli_epi64(bits, 52),
                                 _mm256_set1_epi64x(1022));
    __m256d m = _mm256_castsi256_pd(_mm256_or_si256(
        _mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFll)),
        _mm256_set1_epi64x(0x3FE0000000000000ll)));
    const __m256d lt = _mm256_cmp_pd(m, set1(kSqrtHalf), _CMP_LT_OQ);
    m = _mm256_blendv_pd(m, _mm256_add_pd(m, m), lt);
    e = _mm256_add_epi64(e, _mm256_castpd_si256(lt)); // -1 where halved
    const __m256d f = _mm256_sub_pd(m, set1(1.0));
    const __m256d z = _mm256_mul_pd(f, f);
    const __m256d pn = _mm256_fmadd_pd(
        _mm256_fmadd_pd(
            _mm256_fmadd_pd(
                _mm256_fmadd_pd(_mm256_fmadd_pd(set1(kLogP0), f, set1(kLogP1)),
                                f, set1(kLogP2)),
                f, set1(kLogP3)),
            f, set1(kLogP4)),
        f, set1(kLogP5));
    const __m256d qd = _mm256_fmadd_pd(
        _mm256_fmadd_pd(
            _mm256_fmadd_pd(
                _mm256_fmadd_pd(_mm256_add_pd(f, set1(kLogQ0)), f,
                                set1(kLogQ1)),
                f, set1(kLogQ2)),
            f, set1(kLogQ3)),
        f, set1(kLogQ4));
    // exact int64 -> double for the small exponent values
    const __m256i emagic = _mm256_castpd_si256(set1(6755399441055744.0));
    const __m256d ed = _mm256_sub_pd(
        _mm256_castsi256_pd(_mm256_add_epi64(e, emagic)),
        set1(6755399441055744.0));
    __m256d y = _mm256_mul_pd(f, _mm256_mul_pd(z, _mm256_div_pd(pn, qd)));
    y = _mm256_fmadd_pd(ed, set1(kLn2LoNeg), y);
    y = _mm256_sub_pd(y, _mm256_mul_pd(set1(0.5), z));
    __m256d r = _mm256_add_pd(f, y);
    r = _mm256_fmadd_pd(ed, set1(kLn2Coarse), r);
    return r;
}

void vexp_avx2(const double* x, double* y, std::size_t n) {
    const std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4)
        _mm256_storeu_pd(y + i, exp4(_mm256_loadu_pd(x + i)));
    for (std::size_t i = n4; i < n; ++i) y[i] = exp_core(x[i]);
}

void vlog_avx2(const double* x, double* y, std::size_t n) {
    const std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4)
        _mm256_storeu_pd(y + i, log4(_mm256_loadu_pd(x + i)));
    for (std::size_t i = n4; i < n; ++i) y[i] = log_core(x[i]);
}

void vxlogx_avx2(const double* x, double* y, std::size_t n) {
    const __m256d floor_v = set1(kDensityFloor);
    const std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4) {
        const __m256d xv = _mm256_loadu_pd(x + i);
        const __m256d t = _mm256_max_pd(xv, floor_v);
        __m256d r = _mm256_mul_pd(t, log4(t));
        const __m256d below = _mm256_cmp_pd(xv, floor_v, _CMP_LT_OQ);
        r = _mm256_andnot_pd(below, r);
        _mm256_storeu_pd(y + i, r);
    }
    for (std::size_t i = n4; i < n; ++i)
        y[i] = xlogx_core(x[i], kDensityFloor);
}

inline __m256i tail_mask(std::size_t rem) {
    return _mm256_setr_epi64x(rem > 0 ? -1 : 0, rem > 1 ? -1 : 0,
                              rem > 2 ? -1 : 0, 0);
}

inline double hsum(__m256d acc) {
    const __m128d lo = _mm256_castpd256_pd128(acc);
    const __m128d hi = _mm256_extractf128_pd(acc, 1);
    __m128d s = _mm_add_pd(lo, hi); // [acc0+acc2, acc1+acc3]
    s = _mm_hadd_pd(s, s);
    return _mm_cvtsd_f64(s);
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    const std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i),
                              acc);
    if (n4 < n) {
        const __m256i mask = tail_mask(n - n4);
        acc = _mm256_fmadd_pd(_mm256_maskload_pd(a + n4, mask),
                              _mm256_maskload_pd(b + n4, mask), acc);
    }
    return hsum(acc);
}

double dot3_avx2(const double* a, const double* b, const double* c,
                 std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    const std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4) {
        const __m256d ab =
            _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_fmadd_pd(ab, _mm256_loadu_pd(c + i), acc);
    }
    if (n4 < n) {
        const __m256i mask = tail_mask(n - n4);
        const __m256d ab = _mm256_mul_pd(_mm256_maskload_pd(a + n4, mask),
                                         _mm256_maskload_pd(b + n4, mask));
        acc = _mm256_fmadd_pd(ab, _mm256_maskload_pd(c + n4, mask), acc);
    }
    return hsum(acc);
}

} // namespace

const KernelTable kAvx2Table = {vexp_avx2, vlog_avx2, vxlogx_avx2, dot_avx2,
                                dot3_avx2};

} // namespace helionics::kernels::detail
