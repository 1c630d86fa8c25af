#ifndef BERGKERN_BERGMAN_HPP
#define BERGKERN_BERGMAN_HPP

#include <vector>

#include "bergkern/ratfun.hpp"
#include "bergkern/specfun.hpp"

namespace bergkern {

// Identifies a domain of the D_n^{q,r} family:
//   { (z, w1, w2) : ||z||^2 + |w1|^q < 1, ||z||^2 + |w2|^r < 1 }, z in C^n.
struct KernelParams {
    int n = 1;
    Rat q = 2;
    Rat r = 2;
};

struct MultiIndex {
    std::vector<long> alpha; // length n
    long gamma1 = 0;
    long gamma2 = 0;

    long abs_alpha() const;
};

struct DomainPoint {
    std::vector<Cplx> z; // length n
    Cplx w1{0.0, 0.0};
    Cplx w2{0.0, 0.0};
};

// Strict membership in the open domain.
bool in_domain(const KernelParams& params, const DomainPoint& p);

// Squared L^2 norm of z^alpha w1^gamma1 w2^gamma2 on D_n^{q,r}.
// Computed in log space so large |alpha| cannot overflow.
double monomial_norm_D(const KernelParams& params, const MultiIndex& idx);

// Squared norm of z^alpha w1^gamma1 w2^gamma2 on D_{1/n}^{q,r}
// (scalar z with the exponent 2/n in the defining inequalities).
double monomial_norm_Dinv(int n, const Rat& q, const Rat& r, long alpha,
                          long gamma1, long gamma2);

// L_n^{q,r} as an exact rational function: base case
//   L_1 = (2q(1-x)(1+y) + 2r(1+x)(1-y) + qr(1-x)(1-y)) / (qr (1-x)^3 (1-y)^3)
// with the recursion applied n-1 times. Results are memoized per (n, q, r);
// the cache is safe for concurrent use.
StructuredRatFun build_L(int n, const Rat& q, const Rat& r);

// Independent series oracle for build_L:
//   sum (g1+1)(g2+1) Gamma(A+n+1)/Gamma(A+1) x^g1 y^g2,  A = (2g1+2)/q + (2g2+2)/r.
Cplx l_series(int n, const Rat& q, const Rat& r, Cplx x, Cplx y,
              const SeriesConfig& cfg = {});

// Full-kernel evaluation K_{D_n^{q,r}}(p, p2); principal branch for the
// fractional powers of (1 - tau), which has positive real part on interior
// point pairs.
Cplx kernel_D(const KernelParams& params, const DomainPoint& p,
              const DomainPoint& p2);

// Kernel of D_{1/n}^{q,r} on the (0, w1, w2) slice: L_n(nu1, nu2) / (pi^3 n!).
Cplx kernel_Dinv_origin(int n, const Rat& q, const Rat& r, Cplx nu1, Cplx nu2);

// |n!/pi^{n-1} K_{D_{1/n}} - K_{D_n}| with the two sides going through
// kernel_Dinv_origin and kernel_D respectively.
double deflation_residual(int n, const Rat& q, const Rat& r, Cplx nu1, Cplx nu2);

} // namespace bergkern

#endif
