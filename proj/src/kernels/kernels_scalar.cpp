#include "kernels_internal.hpp"

#include <cmath>

namespace hexrwp::kernels::detail {

namespace {

void distances_scalar(const double* xs, const double* ys, std::size_t n, double rx, double ry,
                      double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - rx;
        const double dy = ys[i] - ry;
        out[i] = std::sqrt(dx * dx + dy * dy);
    }
}

std::size_t count_within_scalar(const double* xs, const double* ys, std::size_t n, double rx,
                                double ry, double r2) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - rx;
        const double dy = ys[i] - ry;
        count += (dx * dx + dy * dy < r2) ? 1 : 0;
    }
    return count;
}

void horner_scalar(const double* coeffs, std::size_t n_coeffs, const double* x, std::size_t n,
                   double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        if (n_coeffs == 0) {
            out[i] = 0.0;
            continue;
        }
        double r = coeffs[n_coeffs - 1];
        for (std::size_t k = n_coeffs - 1; k-- > 0;) r = std::fma(r, x[i], coeffs[k]);
        out[i] = r;
    }
}

void hex_contains_scalar(const double* xs, const double* ys, std::size_t n, double side,
                         std::uint8_t* mask) {
    const HexEdges e = hex_edges(side);
    for (std::size_t i = 0; i < n; ++i) {
        bool in = true;
        for (int k = 0; k < 6; ++k) {
            const double c = e.ex[k] * (ys[i] - e.ay[k]) - e.ey[k] * (xs[i] - e.ax[k]);
            in = in && !(c < 0.0);
        }
        mask[i] = in ? 1 : 0;
    }
}

}  // namespace

const KernelTable kScalarTable{Isa::Scalar,          "scalar", distances_scalar, count_within_scalar,
                               horner_scalar,        hex_contains_scalar};

}  // namespace hexrwp::kernels::detail
