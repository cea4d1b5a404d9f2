#include "kernels_internal.hpp"

#include <atomic>
#include <cassert>
#include <cmath>

namespace hexrwp::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(HEXRWP_WITH_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable* default_table() {
    if (const KernelTable* t = avx2_table()) return t;
    return &detail::kScalarTable;
}

std::atomic<const KernelTable*>& current() {
    static std::atomic<const KernelTable*> table{default_table()};
    return table;
}

}  // namespace

const KernelTable& scalar_table() { return detail::kScalarTable; }

const KernelTable* avx2_table() {
#if defined(HEXRWP_WITH_AVX2)
    static const bool ok = cpu_has_avx2();
    return ok ? &detail::kAvx2Table : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

bool select(Isa isa) {
    const KernelTable* t = isa == Isa::Scalar ? &detail::kScalarTable : avx2_table();
    if (t == nullptr) return false;
    current().store(t, std::memory_order_release);
    return true;
}

void select_default() { current().store(default_table(), std::memory_order_release); }

void distances(std::span<const double> xs, std::span<const double> ys, double rx, double ry,
               std::span<double> out) {
    assert(xs.size() == ys.size() && out.size() == xs.size());
    active().distances(xs.data(), ys.data(), xs.size(), rx, ry, out.data());
}

std::size_t count_within(std::span<const double> xs, std::span<const double> ys, double rx,
                         double ry, double radius) {
    assert(xs.size() == ys.size());
    return active().count_within(xs.data(), ys.data(), xs.size(), rx, ry, radius * radius);
}

void horner(std::span<const double> coeffs, std::span<const double> x, std::span<double> out) {
    assert(x.size() == out.size());
    active().horner(coeffs.data(), coeffs.size(), x.data(), x.size(), out.data());
}

void hex_contains(std::span<const double> xs, std::span<const double> ys, double side,
                  std::span<std::uint8_t> mask) {
    assert(xs.size() == ys.size() && mask.size() == xs.size());
    active().hex_contains(xs.data(), ys.data(), xs.size(), side, mask.data());
}

}  // namespace hexrwp::kernels
