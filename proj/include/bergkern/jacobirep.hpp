#ifndef BERGKERN_JACOBIREP_HPP
#define BERGKERN_JACOBIREP_HPP

#include "bergkern/specfun.hpp"

namespace bergkern {

// Derived quantities shared by the Jacobi-polynomial representations of
// K_{D_n^{2,2}} on the (0, w1, w2) slice.
struct DiagArg {
    Cplx nu1;
    Cplx nu2;
    Cplx xprime;     // ((nu1 - nu2) / (2 - nu1 - nu2))^2
    Cplx jacobi_arg; // (xprime + 1) / (1 - xprime)

    // Throws SingularArgument when nu1 + nu2 = 2 or xprime = 1.
    DiagArg(Cplx nu1, Cplx nu2);
};

// C_m = Gamma(4 + 2m) m! / (6 (5/2)_m).
double rep_cm(int m);

// Finite double sum for K_{D_n^{2,2}}((0,w1,w2),(0,xi1,xi2)), nu_i the
// products w_i conj(xi_i). Second binomial is C(n-i, k), the upper limit
// of the inner sum.
Cplx rep_finite_sum(int n, Cplx nu1, Cplx nu2);

// Odd dimension n = 2m+1 via Jacobi polynomials at (x'+1)/(1-x').
Cplx rep_odd(int m, Cplx nu1, Cplx nu2);

// Even dimension n = 2m.
Cplx rep_even(int m, Cplx nu1, Cplx nu2);

// Diagonal slice nu1 = nu2 = nu:
//   Gamma(3+n)(3 + n nu) / (6 pi^{n+2} (1 - nu)^{4+n}).
Cplx rep_diagonal(int n, Cplx nu);

// Relative residual of Gamma(3+n)/2 * F1(3+n; 2,2; 3; x, y) against the
// exact rational function L_n^{2,2}(x, y).
double f1_identity_residual(int n, Cplx x, Cplx y, const SeriesConfig& cfg = {});

} // namespace bergkern

#endif
