#pragma once
/**
 * @file kernels.hpp
 * @brief Data-parallel inner loops with a scalar reference and vector variants.
 *
 * Every variant produces bitwise-identical results to the scalar reference:
 * the scalar Horner loop uses std::fma exactly where the vector code uses a
 * fused multiply-add, and the rest is plain IEEE add/mul/sqrt with
 * contraction disabled at build time.
 *
 * The active table is chosen once at startup from CPU features and may be
 * overridden (tests force each variant to compare them).
 */

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace hexrwp::kernels {

enum class Isa { Scalar, Avx2 };

struct KernelTable {
    Isa isa;
    std::string_view name;

    /// out[i] = sqrt((xs[i]-rx)^2 + (ys[i]-ry)^2).
    void (*distances)(const double* xs, const double* ys, std::size_t n, double rx, double ry,
                      double* out);

    /// Number of i with (xs[i]-rx)^2 + (ys[i]-ry)^2 < r2.
    std::size_t (*count_within)(const double* xs, const double* ys, std::size_t n, double rx,
                                double ry, double r2);

    /// out[i] = sum_k coeffs[k] * x[i]^k, by fused Horner from the top coefficient.
    void (*horner)(const double* coeffs, std::size_t n_coeffs, const double* x, std::size_t n,
                   double* out);

    /// mask[i] = 1 iff (xs[i], ys[i]) is inside the closed hexagon of the given side.
    void (*hex_contains)(const double* xs, const double* ys, std::size_t n, double side,
                         std::uint8_t* mask);
};

const KernelTable& scalar_table();

/// nullptr when the build or the CPU lacks AVX2+FMA.
const KernelTable* avx2_table();

/// Table used by library code.
const KernelTable& active();

/// Force a variant; returns false (and changes nothing) when unavailable.
bool select(Isa isa);

/// Restore the CPU-feature based choice.
void select_default();

// Span conveniences over the active table.
void distances(std::span<const double> xs, std::span<const double> ys, double rx, double ry,
               std::span<double> out);
std::size_t count_within(std::span<const double> xs, std::span<const double> ys, double rx,
                         double ry, double radius);
void horner(std::span<const double> coeffs, std::span<const double> x, std::span<double> out);
void hex_contains(std::span<const double> xs, std::span<const double> ys, double side,
                  std::span<std::uint8_t> mask);

}  // namespace hexrwp::kernels
