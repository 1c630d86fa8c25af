#ifndef BERGKERN_LUQIKENG_HPP
#define BERGKERN_LUQIKENG_HPP

#include <array>
#include <utility>
#include <vector>

#include "bergkern/bergman.hpp"

namespace bergkern {

// Coefficients of d(z) = z^3 G(e^{i eta}, 1/z) = d3 z^3 + d2 z^2 + d1 z + d0.
struct DCoeffs {
    Cplx d0, d1, d2, d3;
    double r = 0.0;
    double eta = 0.0;
};

using SchurCohnMatrix = std::array<std::array<Cplx, 3>, 3>;

struct ScanReport {
    double r = 0.0;
    int grid_size = 0;
    double min_det = 0.0;
    double argmin_eta = 0.0;
    bool witness_found = false;
};

// g_0..g_3 as exact even polynomials in r (coefficient of r^{2i} at slot i).
struct GnCoefficients {
    std::array<std::vector<Rat>, 4> g;
};

// G(x, y) = r^3 (1-x)^5 (1-y)^5 / 2 * L_3^{r,r}(x, y), exact in Q[x, y].
BiPoly build_G(const Rat& r);

// Numerical G(x, y) for real r (valid anywhere, including |x| = 1).
Cplx eval_G(double r, Cplx x, Cplx y);

// The four closed-form coefficients in t = e^{i eta}. With verify = true the
// reconstruction d(z) = z^3 G(t, 1/z) is checked at three points (1e-10).
DCoeffs d_coefficients(double r, double eta, bool verify = false);

// 3x3 Schur-Cohn matrix of d(z): entries
//   d_{jk} = sum_{l=1..j} ( d_{3-j+l} conj(d_{3-k+l}) - conj(d_{j-l}) d_{k-l} )
// for j <= k, completed Hermitian below the diagonal.
SchurCohnMatrix schur_cohn(const DCoeffs& d);

// det M(e^{i eta}) via cofactor expansion; the result must be real
// (Hermitian matrix) and the imaginary part is checked before discarding.
double det_M(double r, double eta);

// Closed form -130459631616 r^3 sin^12(eta/2) sum g_n(r) cos(n eta),
// used as a cross-check of the matrix path.
double det_M_closed(double r, double eta);

GnCoefficients gn_coefficients();

// Exact polynomial sum g0 + g1 + g2 + g3; the r-dependent parts cancel and
// the constant 38400 remains.
Rat gn_sum_check();

// Scans det M over a uniform eta grid on [0, 2pi). threads = 0 picks a
// count automatically (capped by BERGKERN_THREADS); the reduction is
// deterministic for a fixed grid regardless of thread count.
ScanReport lqk_scan(double r, int grid_size, int threads = 0);

// The zero witness (0,...,0, i sqrt(3/n), i sqrt(3/n)) paired with its
// conjugate-negated partner; interior only for n >= 4.
std::pair<DomainPoint, DomainPoint> diagonal_zero_witness(int n);

// Automorphism of D_n^{q,r} taken at a = p.z; sends p to a point with zero
// z-block and rescaled w-components, preserving membership.
DomainPoint reduce_to_slice(const KernelParams& params, const DomainPoint& p);

} // namespace bergkern

#endif
