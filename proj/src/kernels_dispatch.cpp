#include "helionics/kernels.hpp"

#include "kernels_core.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace helionics::kernels {

namespace {

using detail::KernelTable;

bool avx2_supported() {
#if defined(HELIONICS_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable* table_for(Backend b) {
    switch (b) {
    case Backend::Scalar:
        return &detail::kScalarTable;
    case Backend::Avx2:
#ifdef HELIONICS_HAVE_AVX2
        return &detail::kAvx2Table;
#else
        return nullptr;
#endif
    default:
        return nullptr;
    }
}

Backend resolve_auto() {
    if (const char* env = std::getenv("HELIONICS_SIMD")) {
        const std::string v(env);
        if (v == "scalar") return Backend::Scalar;
        if (v == "avx2") return Backend::Avx2;
        // anything else (including "auto") falls through to detection
    }
    return avx2_supported() ? Backend::Avx2 : Backend::Scalar;
}

struct State {
    std::atomic<const KernelTable*> table{nullptr};
    std::atomic<Backend> backend{Backend::Auto};
};

State& state() {
    static State s;
    return s;
}

const KernelTable& active_table() {
    State& s = state();
    const KernelTable* t = s.table.load(std::memory_order_acquire);
    if (t) return *t;
    Backend b = resolve_auto();
    if (b == Backend::Avx2 && !avx2_supported()) b = Backend::Scalar;
    s.backend.store(b, std::memory_order_relaxed);
    s.table.store(table_for(b), std::memory_order_release);
    return *s.table.load(std::memory_order_acquire);
}

} // namespace

Backend active_backend() {
    active_table();
    return state().backend.load(std::memory_order_relaxed);
}

void set_backend(Backend b) {
    if (b == Backend::Auto) {
        b = resolve_auto();
        if (b == Backend::Avx2 && !avx2_supported()) b = Backend::Scalar;
    }
    if (b == Backend::Avx2 && !avx2_supported())
        throw std::invalid_argument("avx2 backend not supported on this CPU");
    const KernelTable* t = table_for(b);
    if (!t) throw std::invalid_argument("backend not built in");
    state().backend.store(b, std::memory_order_relaxed);
    state().table.store(t, std::memory_order_release);
}

std::string backend_name(Backend b) {
    switch (b) {
    case Backend::Auto:
        return "auto";
    case Backend::Scalar:
        return "scalar";
    case Backend::Avx2:
        return "avx2";
    }
    return "unknown";
}

bool cpu_has_avx2() { return avx2_supported(); }

void vexp(std::span<const double> x, std::span<double> y) {
    active_table().vexp(x.data(), y.data(), x.size());
}

void vlog(std::span<const double> x, std::span<double> y) {
    active_table().vlog(x.data(), y.data(), x.size());
}

void vxlogx(std::span<const double> x, std::span<double> y) {
    active_table().vxlogx(x.data(), y.data(), x.size());
}

double dot(std::span<const double> a, std::span<const double> b) {
    return active_table().dot(a.data(), b.data(), a.size());
}

double dot3(std::span<const double> a, std::span<const double> b,
            std::span<const double> c) {
    return active_table().dot3(a.data(), b.data(), c.data(), a.size());
}

double pairwise_sum(std::span<const double> x) {
    const std::size_t n = x.size();
    if (n <= 8) {
        double s = 0.0;
        for (double v : x) s += v;
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(x.first(half)) + pairwise_sum(x.subspan(half));
}

} // namespace helionics::kernels
