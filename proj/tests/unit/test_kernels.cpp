#include "hexrwp/hexgeom.hpp"
#include "hexrwp/kernels.hpp"
#include "hexrwp/random.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <vector>

using namespace hexrwp;
using kernels::KernelTable;

namespace {

struct Inputs {
    std::vector<double> xs, ys;
};

// Random points plus hexagon vertices and near-edge points, where rounding matters most.
Inputs make_inputs(std::size_t n, std::uint64_t seed, double side) {
    RandomSource rng(seed);
    Inputs in;
    const HexRegion h(side);
    for (std::size_t i = 0; i < n; ++i) {
        if (i % 5 == 0) {
            const Point2 a = h.vertices()[i % 6];
            const Point2 b = h.vertices()[(i + 1) % 6];
            const Point2 p = a + (b - a) * rng.uniform01();
            const double nudge = (rng.uniform01() - 0.5) * 1e-15 * side;
            in.xs.push_back(p.x + nudge);
            in.ys.push_back(p.y);
        } else {
            in.xs.push_back(rng.uniform(-0.2, 2.2) * side);
            in.ys.push_back(rng.uniform(-0.2, 1.9) * side);
        }
    }
    return in;
}

bool bit_equal(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

class KernelEquivalence : public ::testing::Test {
protected:
    void SetUp() override {
        vec_ = kernels::avx2_table();
        if (vec_ == nullptr) GTEST_SKIP() << "AVX2 variant not available on this build or CPU";
    }
    const KernelTable& ref_ = kernels::scalar_table();
    const KernelTable* vec_{nullptr};
};

}  // namespace

TEST(KernelDispatch, SelectAndRestore) {
    EXPECT_TRUE(kernels::select(kernels::Isa::Scalar));
    EXPECT_EQ(kernels::active().isa, kernels::Isa::Scalar);
    EXPECT_EQ(kernels::select(kernels::Isa::Avx2), kernels::avx2_table() != nullptr);
    kernels::select_default();
    EXPECT_EQ(&kernels::active(), kernels::avx2_table() ? kernels::avx2_table() : &kernels::scalar_table());
    EXPECT_FALSE(kernels::active().name.empty());
}

TEST(KernelScalar, Reference) {
    const std::vector<double> xs{0, 3, 1}, ys{0, 4, 1};
    std::vector<double> d(3);
    kernels::scalar_table().distances(xs.data(), ys.data(), 3, 0, 0, d.data());
    EXPECT_EQ(d[1], 5.0);
    EXPECT_EQ(kernels::scalar_table().count_within(xs.data(), ys.data(), 3, 0, 0, 2.0), 1u);  // strict
    const std::vector<double> c{1, 2, 3};
    const std::vector<double> x{2};
    std::vector<double> out(1);
    kernels::scalar_table().horner(c.data(), 3, x.data(), 1, out.data());
    EXPECT_EQ(out[0], 17.0);
    const double r3 = std::sqrt(3.0);
    const std::vector<double> hx{1, 0, 0.5}, hy{r3 / 2, 0, 0};
    std::vector<std::uint8_t> m(3);
    kernels::scalar_table().hex_contains(hx.data(), hy.data(), 3, 1.0, m.data());
    EXPECT_EQ(m, (std::vector<std::uint8_t>{1, 0, 1}));
}

TEST_F(KernelEquivalence, Distances) {
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 33u, 1001u}) {
        const Inputs in = make_inputs(n, n + 1, 1.0);
        std::vector<double> a(n), b(n);
        ref_.distances(in.xs.data(), in.ys.data(), n, 0.3, -0.7, a.data());
        vec_->distances(in.xs.data(), in.ys.data(), n, 0.3, -0.7, b.data());
        EXPECT_TRUE(bit_equal(a, b)) << n;
    }
}

TEST_F(KernelEquivalence, CountWithin) {
    for (std::size_t n : {0u, 1u, 2u, 4u, 6u, 9u, 64u, 4097u}) {
        const Inputs in = make_inputs(n, 100 + n, 1.0);
        for (double r : {0.0, 0.1, 0.8, 1.5, 5.0}) {
            EXPECT_EQ(ref_.count_within(in.xs.data(), in.ys.data(), n, 1.0, 0.8, r * r),
                      vec_->count_within(in.xs.data(), in.ys.data(), n, 1.0, 0.8, r * r))
                << n << " " << r;
        }
    }
    // Points exactly on the circle are excluded by both.
    const std::vector<double> xs{1, 0, -1, 0, 0.6}, ys{0, 1, 0, -1, 0.8};
    EXPECT_EQ(vec_->count_within(xs.data(), ys.data(), 5, 0, 0, 1.0), 0u);
    EXPECT_EQ(ref_.count_within(xs.data(), ys.data(), 5, 0, 0, 1.0),
              vec_->count_within(xs.data(), ys.data(), 5, 0, 0, 1.0));
}

TEST_F(KernelEquivalence, Horner) {
    RandomSource rng(9);
    for (std::size_t deg = 0; deg <= 7; ++deg) {
        std::vector<double> c(deg + 1);
        for (auto& v : c) v = rng.uniform(-3, 3);
        for (std::size_t n : {1u, 3u, 4u, 13u, 256u}) {
            std::vector<double> x(n), a(n), b(n);
            for (auto& v : x) v = rng.uniform(-2, 2);
            ref_.horner(c.data(), c.size(), x.data(), n, a.data());
            vec_->horner(c.data(), c.size(), x.data(), n, b.data());
            EXPECT_TRUE(bit_equal(a, b)) << deg << " " << n;
        }
    }
    std::vector<double> x{1.0}, a{7.0}, b{7.0};
    ref_.horner(nullptr, 0, x.data(), 1, a.data());
    vec_->horner(nullptr, 0, x.data(), 1, b.data());
    EXPECT_EQ(a[0], b[0]);
}

TEST_F(KernelEquivalence, HexContains) {
    for (double side : {0.5, 1.0, 3.0}) {
        for (std::size_t n : {0u, 1u, 4u, 6u, 11u, 5000u}) {
            const Inputs in = make_inputs(n, 7 * n + 3, side);
            std::vector<std::uint8_t> a(n), b(n);
            ref_.hex_contains(in.xs.data(), in.ys.data(), n, side, a.data());
            vec_->hex_contains(in.xs.data(), in.ys.data(), n, side, b.data());
            EXPECT_EQ(a, b) << side << " " << n;
            const HexRegion h(side);
            for (std::size_t i = 0; i < n; ++i) {
                ASSERT_EQ(a[i] != 0, h.contains({in.xs[i], in.ys[i]})) << in.xs[i] << "," << in.ys[i];
            }
        }
    }
}

TEST_F(KernelEquivalence, SpanWrappersFollowSelection) {
    const Inputs in = make_inputs(77, 5, 1.0);
    std::vector<double> a(77), b(77);
    kernels::select(kernels::Isa::Scalar);
    kernels::distances(in.xs, in.ys, 0.1, 0.2, a);
    kernels::select(kernels::Isa::Avx2);
    kernels::distances(in.xs, in.ys, 0.1, 0.2, b);
    kernels::select_default();
    EXPECT_TRUE(bit_equal(a, b));
}
