#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bergkern/bergman.hpp"
#include "bergkern/jacobirep.hpp"
#include "test_util.hpp"

using namespace bergkern;
using testutil::random_in_disk;
using testutil::rel_err;

namespace {
constexpr double kPi = std::numbers::pi;

// F1-based evaluation, the arbitration oracle for every representation.
Cplx f1_route(int n, Cplx nu1, Cplx nu2) {
    return std::exp(log_gamma(3.0 + n)) / (2.0 * std::pow(kPi, n + 2)) *
           appell_f1(3.0 + n, 2.0, 2.0, 3.0, nu1, nu2);
}

Cplx rep_parity(int n, Cplx nu1, Cplx nu2) {
    return n % 2 == 1 ? rep_odd((n - 1) / 2, nu1, nu2) : rep_even(n / 2, nu1, nu2);
}
} // namespace

TEST_CASE("rep_finite_sum values") {
    CHECK(rel_err(rep_finite_sum(1, {0, 0}, {0, 0}), {3.0 / std::pow(kPi, 3), 0.0}) <
          1e-13);

    // n = 1 closed comparison against L_1^{2,2}
    std::mt19937 gen(31);
    for (int trial = 0; trial < 20; ++trial) {
        const Cplx nu1 = random_in_disk(gen, 0.7);
        const Cplx nu2 = random_in_disk(gen, 0.7);
        const Cplx expect =
            (Cplx(3, 0) - nu1 - nu2 - nu1 * nu2) /
            (std::pow(kPi, 3) * std::pow(Cplx(1, 0) - nu1, 3.0) *
             std::pow(Cplx(1, 0) - nu2, 3.0));
        CHECK(rel_err(rep_finite_sum(1, nu1, nu2), expect) < 1e-12);
        // symmetry in nu1 <-> nu2
        CHECK(rel_err(rep_finite_sum(3, nu1, nu2), rep_finite_sum(3, nu2, nu1)) <
              1e-11);
    }
    CHECK_THROWS_AS(rep_finite_sum(2, {1.1, 0}, {0, 0}), DomainError);
}

TEST_CASE("rep_odd values") {
    CHECK(rel_err(rep_odd(0, {0, 0}, {0, 0}), {3.0 / std::pow(kPi, 3), 0.0}) < 1e-13);
    CHECK(rel_err(rep_odd(1, {0, 0}, {0, 0}), {60.0 / std::pow(kPi, 5), 0.0}) < 1e-13);

    // m = 0, nu2 = 0: (3 - nu1) / (pi^3 (1 - nu1)^3)
    std::mt19937 gen(32);
    for (int trial = 0; trial < 15; ++trial) {
        const Cplx nu1 = random_in_disk(gen, 0.8);
        const Cplx expect = (Cplx(3, 0) - nu1) /
                            (std::pow(kPi, 3) * std::pow(Cplx(1, 0) - nu1, 3.0));
        CHECK(rel_err(rep_odd(0, nu1, {0, 0}), expect) < 1e-12);
    }
}

TEST_CASE("rep_even values") {
    CHECK(rel_err(rep_even(1, {0, 0}, {0, 0}), {12.0 / std::pow(kPi, 4), 0.0}) < 1e-13);
    CHECK(rel_err(rep_even(2, {0, 0}, {0, 0}), {360.0 / std::pow(kPi, 6), 0.0}) < 1e-13);

    // diagonal consistency with rep_diagonal(2, nu)
    std::mt19937 gen(33);
    for (int trial = 0; trial < 15; ++trial) {
        const Cplx nu = random_in_disk(gen, 0.7);
        CHECK(rel_err(rep_even(1, nu, nu), rep_diagonal(2, nu)) < 1e-11);
    }
}

TEST_CASE("rep_diagonal values") {
    CHECK(rel_err(rep_diagonal(1, {0, 0}), {3.0 / std::pow(kPi, 3), 0.0}) < 1e-13);
    CHECK(rel_err(rep_diagonal(2, {0, 0}), {12.0 / std::pow(kPi, 4), 0.0}) < 1e-13);
    // zero of the diagonal kernel at nu = -3/n for n >= 4
    for (int n : {4, 7, 10}) {
        const Cplx v = rep_diagonal(n, {-3.0 / n, 0.0});
        CHECK(std::abs(v) <= 1e-14 * std::abs(rep_diagonal(n, {0, 0})));
    }
}

TEST_CASE("cross-representation agreement") {
    std::mt19937 gen(34);
    for (int n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 25; ++trial) {
            const Cplx nu1 = random_in_disk(gen, 0.6);
            const Cplx nu2 = random_in_disk(gen, 0.6);
            const Cplx oracle = f1_route(n, nu1, nu2);
            CHECK(rel_err(rep_finite_sum(n, nu1, nu2), oracle) < 1e-9);
            CHECK(rel_err(rep_parity(n, nu1, nu2), oracle) < 1e-9);
            // symmetry of the parity representation
            CHECK(rel_err(rep_parity(n, nu1, nu2), rep_parity(n, nu2, nu1)) < 1e-11);
        }
        // diagonal consistency
        for (int trial = 0; trial < 10; ++trial) {
            const Cplx nu = random_in_disk(gen, 0.6);
            CHECK(rel_err(rep_finite_sum(n, nu, nu), rep_diagonal(n, nu)) < 1e-11);
        }
    }
}

TEST_CASE("f1 identity residual") {
    for (int n = 1; n <= 5; ++n)
        CHECK(f1_identity_residual(n, {0.2, 0.0}, {-0.3, 0.0}) <= 1e-10);
    CHECK(f1_identity_residual(3, {0, 0}, {0, 0}) < 1e-14);

    // on the diagonal the identity collapses to the 2F1 closed form
    const Cplx x(0.25, 0.1);
    for (int n = 1; n <= 4; ++n) {
        const Cplx lhs = std::exp(log_gamma(3.0 + n)) / 2.0 * gauss_2f1(3.0 + n, 4, 3, x);
        const Cplx rhs = build_L(n, Rat(2), Rat(2)).eval(x, x);
        CHECK(rel_err(lhs, rhs) < 1e-11);
    }
}

TEST_CASE("DiagArg singular configurations") {
    CHECK_THROWS_AS(DiagArg(Cplx(1.0, 0.5), Cplx(1.0, -0.5)), SingularArgument);
    // nu1 - nu2 = +-(2 - nu1 - nu2) makes x' = 1
    // take nu2 = 1: then ratio = (nu1-1)/(1-nu1) = -1, x' = 1
    CHECK_THROWS_AS(DiagArg(Cplx(0.3, 0.0), Cplx(1.0, 0.0)), SingularArgument);
    const DiagArg ok(Cplx(0.2, 0.1), Cplx(-0.3, 0.0));
    CHECK(std::abs(ok.xprime) < 1.0);
}
