#include "bergkern/ratfun.hpp"

#include <cmath>
#include <stdexcept>

#include "bergkern/errors.hpp"

namespace bergkern {

StructuredRatFun::StructuredRatFun(BiPoly numerator, Rat scale, long pow_x,
                                   long pow_y)
    : num_(std::move(numerator)), scale_(std::move(scale)), pow_x_(pow_x),
      pow_y_(pow_y) {
    if (scale_ <= 0) throw std::invalid_argument("scale must be positive");
    if (pow_x_ < 0 || pow_y_ < 0)
        throw std::invalid_argument("denominator powers must be nonnegative");
    reduce();
}

void StructuredRatFun::reduce() {
    while (pow_x_ > 0 && num_.divisible_one_minus(Var::X)) {
        num_ = num_.divide_one_minus(Var::X);
        --pow_x_;
    }
    while (pow_y_ > 0 && num_.divisible_one_minus(Var::Y)) {
        num_ = num_.divide_one_minus(Var::Y);
        --pow_y_;
    }
}

Cplx StructuredRatFun::eval(Cplx x, Cplx y) const {
    if ((pow_x_ > 0 && x == Cplx(1.0, 0.0)) || (pow_y_ > 0 && y == Cplx(1.0, 0.0)))
        throw PoleError("rational function pole at x = 1 or y = 1");
    Cplx den(to_double(scale_), 0.0);
    den *= std::pow(Cplx(1.0, 0.0) - x, static_cast<double>(pow_x_));
    den *= std::pow(Cplx(1.0, 0.0) - y, static_cast<double>(pow_y_));
    return num_.eval(x, y) / den;
}

Rat StructuredRatFun::eval_rat(const Rat& x, const Rat& y) const {
    if ((pow_x_ > 0 && x == 1) || (pow_y_ > 0 && y == 1))
        throw PoleError("rational function pole at x = 1 or y = 1");
    Rat den = scale_;
    for (long i = 0; i < pow_x_; ++i) den *= (Rat(1) - x);
    for (long j = 0; j < pow_y_; ++j) den *= (Rat(1) - y);
    return num_.eval_rat(x, y) / den;
}

Rat StructuredRatFun::taylor_coeff(long g1, long g2) const {
    // 1/(1-t)^a = sum C(m+a-1, a-1) t^m; convolve with the numerator.
    Rat acc(0);
    for (const auto& [key, c] : num_.terms()) {
        long i = key.first, j = key.second;
        if (i > g1 || j > g2) continue;
        Rat bx = pow_x_ == 0 ? Rat(i == g1 ? 1 : 0)
                             : binomial_rat(g1 - i + pow_x_ - 1, pow_x_ - 1);
        if (bx == 0) continue;
        Rat by = pow_y_ == 0 ? Rat(j == g2 ? 1 : 0)
                             : binomial_rat(g2 - j + pow_y_ - 1, pow_y_ - 1);
        acc += c * bx * by;
    }
    return acc / scale_;
}

StructuredRatFun StructuredRatFun::swap_xy() const {
    return StructuredRatFun(num_.swap_xy(), scale_, pow_y_, pow_x_);
}

StructuredRatFun ratfun_apply_recursion(const StructuredRatFun& f,
                                        long step_index, const Rat& q,
                                        const Rat& r) {
    if (step_index < 1) throw std::invalid_argument("step_index must be >= 1");
    const BiPoly& N = f.numerator();
    const long a = f.pow_x(), b = f.pow_y();
    const BiPoly omx = one_minus(Var::X);
    const BiPoly omy = one_minus(Var::Y);

    // With f = N / (s (1-x)^a (1-y)^b):
    //   d/dx (x f) = ((N + x N_x)(1-x) + a x N) / (s (1-x)^{a+1} (1-y)^b)
    BiPoly x_nx = BiPoly::monomial(1, 0, Rat(1)) * N.diff(Var::X);
    BiPoly y_ny = BiPoly::monomial(0, 1, Rat(1)) * N.diff(Var::Y);
    BiPoly dx_part = (N + x_nx) * omx + BiPoly::monomial(1, 0, Rat(a)) * N;
    BiPoly dy_part = (N + y_ny) * omy + BiPoly::monomial(0, 1, Rat(b)) * N;

    BiPoly numerator = (N * Rat(step_index + 1)) * (omx * omy) +
                       dx_part * (Rat(2) / q) * omy +
                       dy_part * (Rat(2) / r) * omx;
    return StructuredRatFun(std::move(numerator), f.scale(), a + 1, b + 1);
}

} // namespace bergkern
