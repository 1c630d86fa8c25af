#ifndef BERGKERN_RATFUN_HPP
#define BERGKERN_RATFUN_HPP

#include "bergkern/bipoly.hpp"

namespace bergkern {

// Rational function numerator / (scale * (1-x)^pow_x * (1-y)^pow_y).
// Kept reduced: the numerator is divisible by neither (1-x) nor (1-y),
// and scale > 0. This shape houses the whole L_n family.
class StructuredRatFun {
public:
    StructuredRatFun() : scale_(1), pow_x_(0), pow_y_(0) {}
    StructuredRatFun(BiPoly numerator, Rat scale, long pow_x, long pow_y);

    const BiPoly& numerator() const { return num_; }
    const Rat& scale() const { return scale_; }
    long pow_x() const { return pow_x_; }
    long pow_y() const { return pow_y_; }

    bool operator==(const StructuredRatFun& o) const {
        return num_ == o.num_ && scale_ == o.scale_ && pow_x_ == o.pow_x_ &&
               pow_y_ == o.pow_y_;
    }

    // Throws PoleError at x = 1 or y = 1.
    Cplx eval(Cplx x, Cplx y) const;
    Rat eval_rat(const Rat& x, const Rat& y) const;

    // Exact Taylor coefficient of x^g1 y^g2 at the origin.
    Rat taylor_coeff(long g1, long g2) const;

    // f(y, x) as a structured rational function.
    StructuredRatFun swap_xy() const;

private:
    void reduce();

    BiPoly num_;
    Rat scale_;
    long pow_x_;
    long pow_y_;
};

// One step of the L-family recursion:
//   L_{n+1} = (n+1) L_n + (2/q) d/dx (x L_n) + (2/r) d/dy (y L_n),
// for f = L_n with n = step_index. pow_x and pow_y each grow by one.
StructuredRatFun ratfun_apply_recursion(const StructuredRatFun& f,
                                        long step_index, const Rat& q,
                                        const Rat& r);

} // namespace bergkern

#endif
