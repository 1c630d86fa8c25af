#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "bergkern/bergman.hpp"
#include "test_util.hpp"

using namespace bergkern;
using testutil::random_in_disk;
using testutil::rel_err;

namespace {
constexpr double kPi = std::numbers::pi;

DomainPoint interior_point(std::mt19937& gen, int n) {
    // stay well inside: ||z||^2 <= 0.25, |w| <= 0.5
    DomainPoint p;
    p.z.resize(n);
    for (int i = 0; i < n; ++i) p.z[i] = random_in_disk(gen, 0.5 / std::sqrt(n));
    p.w1 = random_in_disk(gen, 0.5);
    p.w2 = random_in_disk(gen, 0.5);
    return p;
}
} // namespace

TEST_CASE("monomial_norm_D values") {
    const KernelParams p{1, Rat(2), Rat(2)};
    MultiIndex zero{{0}, 0, 0};
    CHECK(monomial_norm_D(p, zero) ==
          doctest::Approx(kPi * kPi * kPi / 3.0).epsilon(1e-13)); // volume

    MultiIndex a1{{1}, 0, 0};
    CHECK(monomial_norm_D(p, a1) ==
          doctest::Approx(kPi * kPi * kPi / 12.0).epsilon(1e-13));
}

TEST_CASE("monomial_norm_D is symmetric under (q, g1) <-> (r, g2)") {
    const KernelParams p{2, Rat(2), Rat(7, 2)};
    const KernelParams ps{2, Rat(7, 2), Rat(2)};
    for (long g1 = 0; g1 <= 4; ++g1)
        for (long g2 = 0; g2 <= 4; ++g2) {
            const MultiIndex i1{{1, 2}, g1, g2};
            const MultiIndex i2{{1, 2}, g2, g1};
            CHECK(monomial_norm_D(p, i1) ==
                  doctest::Approx(monomial_norm_D(ps, i2)).epsilon(1e-13));
        }
}

TEST_CASE("monomial_norm_Dinv values") {
    // n = 1 coincides with the D_1 norm
    for (long a = 0; a <= 3; ++a)
        for (long g = 0; g <= 3; ++g) {
            const KernelParams p{1, Rat(2), Rat(3)};
            const MultiIndex idx{{a}, g, 1};
            CHECK(monomial_norm_Dinv(1, Rat(2), Rat(3), a, g, 1) ==
                  doctest::Approx(monomial_norm_D(p, idx)).epsilon(1e-13));
        }

    // n=2, q=r=2, zero index: 2 pi^3 Gamma(3)Gamma(2)/Gamma(5) = pi^3/6,
    // the volume of the companion domain (cross-checked by Monte Carlo)
    CHECK(monomial_norm_Dinv(2, Rat(2), Rat(2), 0, 0, 0) ==
          doctest::Approx(kPi * kPi * kPi / 6.0).epsilon(1e-13));

    // strictly decreasing in gamma1
    double prev = monomial_norm_Dinv(3, Rat(2), Rat(4), 1, 0, 2);
    for (long g1 = 1; g1 <= 10; ++g1) {
        const double cur = monomial_norm_Dinv(3, Rat(2), Rat(4), 1, g1, 2);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("build_L base case and origin values") {
    const StructuredRatFun L1 = build_L(1, Rat(2), Rat(2));
    // numerator proportional to 3 - x - y - xy
    BiPoly expect = BiPoly::constant(Rat(3));
    expect.add_term(1, 0, Rat(-1));
    expect.add_term(0, 1, Rat(-1));
    expect.add_term(1, 1, Rat(-1));
    const Rat ratio = L1.numerator().coeff(0, 0) / expect.coeff(0, 0);
    CHECK(L1.numerator() == expect * ratio);

    for (int n = 1; n <= 6; ++n) {
        const StructuredRatFun Ln = build_L(n, Rat(2), Rat(2));
        // L_n^{2,2}(0,0) = Gamma(n+3)/2
        Rat expect_origin(1);
        for (int k = 3; k <= n + 2; ++k) expect_origin *= k;
        CHECK(Ln.eval_rat(Rat(0), Rat(0)) == expect_origin);
    }
}

TEST_CASE("build_L cache is concurrency safe and stable") {
    std::vector<std::thread> pool;
    std::vector<Rat> results(8);
    for (int t = 0; t < 8; ++t)
        pool.emplace_back([t, &results] {
            results[t] = build_L(5, Rat(3), Rat(5)).eval_rat(Rat(1, 3), Rat(-1, 4));
        });
    for (auto& th : pool) th.join();
    for (int t = 1; t < 8; ++t) CHECK(results[t] == results[0]);
}

TEST_CASE("l_series oracle values") {
    CHECK(rel_err(l_series(1, Rat(2), Rat(2), {0, 0}, {0, 0}), {3.0, 0.0}) < 1e-14);
    CHECK(rel_err(l_series(1, Rat(2), Rat(4), {0, 0}, {0, 0}), {2.5, 0.0}) < 1e-14);

    for (int n = 1; n <= 5; ++n) {
        const Cplx x(0.3, 0.0), y(0.0, -0.4);
        const Cplx closed = build_L(n, Rat(2), Rat(2)).eval(x, y);
        CHECK(rel_err(l_series(n, Rat(2), Rat(2), x, y), closed) < 1e-10);
    }
}

TEST_CASE("l_series vs closed form on a grid") {
    const Rat qs[2] = {Rat(2), Rat(3)};
    const Rat rs[2] = {Rat(2), Rat(7, 2)};
    for (const Rat& q : qs)
        for (const Rat& r : rs)
            for (int n = 1; n <= 5; ++n) {
                const StructuredRatFun L = build_L(n, q, r);
                for (int i = 0; i < 5; ++i)
                    for (int j = 0; j < 5; ++j) {
                        const Cplx x(-0.5 + 0.25 * i, 0.1);
                        const Cplx y(0.05 * j, -0.4 + 0.15 * j);
                        if (std::abs(x) > 0.55 || std::abs(y) > 0.55) continue;
                        CHECK(rel_err(l_series(n, q, r, x, y), L.eval(x, y)) < 1e-10);
                    }
            }
}

TEST_CASE("kernel_D origin values") {
    std::mt19937 gen(3);
    {
        const KernelParams p{1, Rat(2), Rat(2)};
        DomainPoint o{{{0.0, 0.0}}, {0, 0}, {0, 0}};
        CHECK(rel_err(kernel_D(p, o, o), {3.0 / std::pow(kPi, 3), 0.0}) < 1e-13);
    }
    {
        const KernelParams p{2, Rat(2), Rat(2)};
        DomainPoint o{{{0.0, 0.0}, {0.0, 0.0}}, {0, 0}, {0, 0}};
        CHECK(rel_err(kernel_D(p, o, o), {12.0 / std::pow(kPi, 4), 0.0}) < 1e-13);
    }
}

TEST_CASE("kernel_D with zero w-block reduces to the tau factor") {
    std::mt19937 gen(4);
    const KernelParams params{3, Rat(3), Rat(5)};
    for (int trial = 0; trial < 10; ++trial) {
        DomainPoint p = interior_point(gen, 3);
        DomainPoint p2 = interior_point(gen, 3);
        p.w1 = p.w2 = Cplx(0, 0);
        p2.w1 = p2.w2 = Cplx(0, 0);
        Cplx tau(0, 0);
        for (int i = 0; i < 3; ++i) tau += p.z[i] * std::conj(p2.z[i]);
        const double expo = 2.0 / 3.0 + 2.0 / 5.0 + 1.0;
        const Cplx expect = build_L(3, Rat(3), Rat(5)).eval({0, 0}, {0, 0}) /
                            (std::pow(kPi, 5) * std::pow(Cplx(1, 0) - tau, expo));
        CHECK(rel_err(kernel_D(params, p, p2), expect) < 1e-13);
    }
}

TEST_CASE("kernel_D Hermitian symmetry and diagonal positivity") {
    std::mt19937 gen(8);
    const KernelParams params{2, Rat(2), Rat(7, 2)};
    for (int trial = 0; trial < 25; ++trial) {
        const DomainPoint p = interior_point(gen, 2);
        const DomainPoint p2 = interior_point(gen, 2);
        const Cplx k12 = kernel_D(params, p, p2);
        const Cplx k21 = kernel_D(params, p2, p);
        CHECK(rel_err(k12, std::conj(k21)) < 1e-12);

        const Cplx diag = kernel_D(params, p, p);
        CHECK(diag.real() > 0.0);
        CHECK(std::abs(diag.imag()) <= 1e-12 * diag.real());
    }
}

TEST_CASE("kernel_D rejects exterior points") {
    const KernelParams params{1, Rat(2), Rat(2)};
    DomainPoint inside{{{0.1, 0.0}}, {0.2, 0.0}, {0.1, 0.1}};
    DomainPoint outside{{{0.9, 0.0}}, {0.8, 0.0}, {0.0, 0.0}};
    CHECK_THROWS_AS(kernel_D(params, inside, outside), DomainError);
}

TEST_CASE("origin-volume reciprocity") {
    const Rat vals[3] = {Rat(2), Rat(3), Rat(7, 2)};
    for (int n = 1; n <= 4; ++n)
        for (const Rat& q : vals)
            for (const Rat& r : vals) {
                const KernelParams params{n, q, r};
                DomainPoint o;
                o.z.assign(n, Cplx(0, 0));
                const MultiIndex zero{std::vector<long>(n, 0), 0, 0};
                const double prod =
                    kernel_D(params, o, o).real() * monomial_norm_D(params, zero);
                CHECK(std::abs(prod - 1.0) < 1e-12);
            }
}

TEST_CASE("kernel_Dinv_origin values") {
    CHECK(rel_err(kernel_Dinv_origin(2, Rat(2), Rat(2), {0, 0}, {0, 0}),
                  {6.0 / std::pow(kPi, 3), 0.0}) < 1e-13);
    CHECK(rel_err(kernel_Dinv_origin(3, Rat(2), Rat(2), {0, 0}, {0, 0}),
                  {10.0 / std::pow(kPi, 3), 0.0}) < 1e-13);
    CHECK_THROWS_AS(kernel_Dinv_origin(2, Rat(2), Rat(2), {1.2, 0}, {0, 0}),
                    DomainError);
}

TEST_CASE("deflation identity") {
    // n = 1: both routes hit the same evaluation, residual exactly zero
    CHECK(deflation_residual(1, Rat(2), Rat(3), {0.2, 0.1}, {-0.15, 0.3}) == 0.0);

    CHECK(deflation_residual(4, Rat(2), Rat(2), {0, 0}, {0, 0}) < 1e-13);

    std::mt19937 gen(11);
    const std::pair<Rat, Rat> qr[3] = {{Rat(2), Rat(2)}, {Rat(2), Rat(4)}, {Rat(3), Rat(5)}};
    for (const auto& [q, r] : qr)
        for (int n = 1; n <= 5; ++n)
            for (int trial = 0; trial < 20; ++trial) {
                const Cplx nu1 = random_in_disk(gen, 0.6);
                const Cplx nu2 = random_in_disk(gen, 0.6);
                const double scale =
                    std::abs(std::exp(std::lgamma(n + 1.0)) / std::pow(kPi, n - 1) *
                             kernel_Dinv_origin(n, q, r, nu1, nu2));
                CHECK(deflation_residual(n, q, r, nu1, nu2) <= 1e-12 * 2.0 * scale);
            }
}
