// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include "kernels_internal.hpp"

#include <immintrin.h>

#include <bit>
#include <cmath>

namespace hexrwp::kernels::detail {

namespace {

constexpr std::size_t kLanes = 4;

void distances_avx2(const double* xs, const double* ys, std::size_t n, double rx, double ry,
                    double* out) {
    const __m256d vrx = _mm256_set1_pd(rx);
    const __m256d vry = _mm256_set1_pd(ry);
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vrx);
        const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + i), vry);
        const __m256d s = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
        _mm256_storeu_pd(out + i, _mm256_sqrt_pd(s));
    }
    for (; i < n; ++i) {
        const double dx = xs[i] - rx;
        const double dy = ys[i] - ry;
        out[i] = std::sqrt(dx * dx + dy * dy);
    }
}

std::size_t count_within_avx2(const double* xs, const double* ys, std::size_t n, double rx,
                              double ry, double r2) {
    const __m256d vrx = _mm256_set1_pd(rx);
    const __m256d vry = _mm256_set1_pd(ry);
    const __m256d vr2 = _mm256_set1_pd(r2);
    std::size_t count = 0;
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vrx);
        const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + i), vry);
        const __m256d s = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
        const int bits = _mm256_movemask_pd(_mm256_cmp_pd(s, vr2, _CMP_LT_OQ));
        count += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(bits)));
    }
    for (; i < n; ++i) {
        const double dx = xs[i] - rx;
        const double dy = ys[i] - ry;
        count += (dx * dx + dy * dy < r2) ? 1 : 0;
    }
    return count;
}

void horner_avx2(const double* coeffs, std::size_t n_coeffs, const double* x, std::size_t n,
                 double* out) {
    if (n_coeffs == 0) {
        for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
        return;
    }
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256d vx = _mm256_loadu_pd(x + i);
        __m256d r = _mm256_set1_pd(coeffs[n_coeffs - 1]);
        for (std::size_t k = n_coeffs - 1; k-- > 0;) {
            r = _mm256_fmadd_pd(r, vx, _mm256_set1_pd(coeffs[k]));
        }
        _mm256_storeu_pd(out + i, r);
    }
    for (; i < n; ++i) {
        double r = coeffs[n_coeffs - 1];
        for (std::size_t k = n_coeffs - 1; k-- > 0;) r = std::fma(r, x[i], coeffs[k]);
        out[i] = r;
    }
}

void hex_contains_avx2(const double* xs, const double* ys, std::size_t n, double side,
                       std::uint8_t* mask) {
    const HexEdges e = hex_edges(side);
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256d px = _mm256_loadu_pd(xs + i);
        const __m256d py = _mm256_loadu_pd(ys + i);
        __m256d outside = _mm256_setzero_pd();
        for (int k = 0; k < 6; ++k) {
            const __m256d t1 =
                _mm256_mul_pd(_mm256_set1_pd(e.ex[k]), _mm256_sub_pd(py, _mm256_set1_pd(e.ay[k])));
            const __m256d t2 =
                _mm256_mul_pd(_mm256_set1_pd(e.ey[k]), _mm256_sub_pd(px, _mm256_set1_pd(e.ax[k])));
            outside = _mm256_or_pd(outside, _mm256_cmp_pd(_mm256_sub_pd(t1, t2), zero, _CMP_LT_OQ));
        }
        const int bits = _mm256_movemask_pd(outside);
        for (std::size_t l = 0; l < kLanes; ++l) mask[i + l] = ((bits >> l) & 1) ? 0 : 1;
    }
    for (; i < n; ++i) {
        bool in = true;
        for (int k = 0; k < 6; ++k) {
            const double c = e.ex[k] * (ys[i] - e.ay[k]) - e.ey[k] * (xs[i] - e.ax[k]);
            in = in && !(c < 0.0);
        }
        mask[i] = in ? 1 : 0;
    }
}

}  // namespace

const KernelTable kAvx2Table{Isa::Avx2,    "avx2",     distances_avx2, count_within_avx2,
                             horner_avx2,  hex_contains_avx2};

}  // namespace hexrwp::kernels::detail
