#pragma once

#include "hexrwp/kernels.hpp"

#include <array>
#include <numbers>

namespace hexrwp::kernels::detail {

/// Edge data for the hexagon of a given side, shared by every variant so the
/// containment predicate sees the exact same doubles as HexRegion::contains.
struct HexEdges {
    std::array<double, 6> ax, ay, ex, ey;  // edge start, edge vector
};

inline HexEdges hex_edges(double side) {
    const double h = std::numbers::sqrt3 * side;
    const std::array<double, 6> vx{0.0, 0.5 * side, 1.5 * side, 2.0 * side, 1.5 * side, 0.5 * side};
    const std::array<double, 6> vy{0.5 * h, 0.0, 0.0, 0.5 * h, h, h};
    HexEdges e{};
    for (int i = 0; i < 6; ++i) {
        const int j = (i + 1) % 6;
        e.ax[i] = vx[i];
        e.ay[i] = vy[i];
        e.ex[i] = vx[j] - vx[i];
        e.ey[i] = vy[j] - vy[i];
    }
    return e;
}

extern const KernelTable kScalarTable;
#if defined(HEXRWP_WITH_AVX2)
extern const KernelTable kAvx2Table;
#endif

}  // namespace hexrwp::kernels::detail
