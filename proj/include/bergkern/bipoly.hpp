#ifndef BERGKERN_BIPOLY_HPP
#define BERGKERN_BIPOLY_HPP

#include <map>
#include <utility>
#include <vector>

#include "bergkern/rational.hpp"

namespace bergkern {

enum class Var { X, Y };

// Bivariate polynomial over the rationals. Terms are kept in a map ordered
// lexicographically by (deg_x, deg_y); zero coefficients are never stored,
// so structural equality is exact polynomial equality.
class BiPoly {
public:
    using Key = std::pair<long, long>;
    using TermMap = std::map<Key, Rat>;

    BiPoly() = default;

    static BiPoly constant(const Rat& c);
    static BiPoly monomial(long i, long j, const Rat& c);

    bool is_zero() const { return terms_.empty(); }
    long deg_x() const;
    long deg_y() const;
    Rat coeff(long i, long j) const;
    const TermMap& terms() const { return terms_; }

    void add_term(long i, long j, const Rat& c);

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly operator*(const Rat& c) const;
    BiPoly operator-() const;
    bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const BiPoly& o) const { return terms_ != o.terms_; }

    // Formal partial derivative, exact.
    BiPoly diff(Var v) const;

    // p(y, x): exchanges the two variables.
    BiPoly swap_xy() const;

    Cplx eval(Cplx x, Cplx y) const;
    Rat eval_rat(const Rat& x, const Rat& y) const;

    // Division by (1 - x) resp. (1 - y). divisible_* is exact (remainder
    // test); divide_* requires divisibility and returns the exact quotient.
    bool divisible_one_minus(Var v) const;
    BiPoly divide_one_minus(Var v) const;

private:
    TermMap terms_;
};

inline BiPoly operator*(const Rat& c, const BiPoly& p) { return p * c; }

// (1 - x), (1 + x), etc. as building blocks.
BiPoly one_minus(Var v);
BiPoly one_plus(Var v);

} // namespace bergkern

#endif
