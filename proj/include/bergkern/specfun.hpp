#ifndef BERGKERN_SPECFUN_HPP
#define BERGKERN_SPECFUN_HPP

#include <complex>

#include "bergkern/errors.hpp"

namespace bergkern {

using Cplx = std::complex<double>;

struct SeriesConfig {
    double rel_tail_tol = 1e-14;
    int max_terms = 2000; // per summation index
};

// log Gamma(x) for x > 0; relative error well under 1e-13 for x <= 1e6.
double log_gamma(double x);

// Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.
double pochhammer(double a, int n);

// Gauss 2F1 by direct series. Terminating cases (a or b a nonpositive
// integer) are summed exactly for any z; otherwise requires |z| < 1 and
// c not a nonpositive integer.
Cplx gauss_2f1(double a, double b, double c, Cplx z, const SeriesConfig& cfg = {});

// Appell F1(a; b, b2; c; x, y) summed along anti-diagonals m+n = s, so the
// coupled (a)_{m+n} is shared across each shell; the tail proxy is the last
// shell's absolute sum over the accumulated absolute value.
Cplx appell_f1(double a, double b, double b2, double c, Cplx x, Cplx y,
               const SeriesConfig& cfg = {});

// Jacobi polynomial P_d^{(k,l)}(z) via its terminating hypergeometric sum.
Cplx jacobi_p(int d, double k, double l, Cplx z);

} // namespace bergkern

#endif
