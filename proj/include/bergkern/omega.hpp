#ifndef BERGKERN_OMEGA_HPP
#define BERGKERN_OMEGA_HPP

#include <cstdint>
#include <vector>

#include "bergkern/specfun.hpp"

namespace bergkern {

// Omega_n^r = { (z, w) in C x C^n : |z|^2 + |w_k|^r < 1 for every k }.
struct OmegaParams {
    int n = 1;
    double r = 2.0;
};

struct OmegaMultiIndex {
    long alpha = 0;
    std::vector<long> beta; // length n
};

struct ZeroFreeReport {
    long samples = 0;
    double min_value = 0.0;     // min over samples of Re(n + r/2 + sum 2nu/(1-nu))
    bool per_coordinate_ok = false; // Re(2nu_k/(1-nu_k)) > -1 held everywhere
};

// Squared L^2 norm of z^alpha w^beta on Omega_n^r.
double norm_omega(const OmegaParams& p, const OmegaMultiIndex& idx);

// Closed-form kernel on the (0, w) slice, nu_k = w_k conj(zeta_k).
Cplx kernel_omega(const OmegaParams& p, const std::vector<Cplx>& nu);

// Equal-arguments closed form ((2n-r)nu + 2n+r) / (r (1-nu)^{2n+1} pi^{n+1}).
Cplx kernel_omega_diag(const OmegaParams& p, Cplx nu);

// Truncated multi-series oracle; nested summation, supported for n <= 3.
Cplx omega_series(const OmegaParams& p, const std::vector<Cplx>& nu,
                  const SeriesConfig& cfg = {});

// Samples the polydisk and verifies the zero-freeness inequalities; the
// random stream is counter-based, so a fixed seed reproduces exactly.
ZeroFreeReport omega_zero_free_check(const OmegaParams& p, long samples,
                                     std::uint64_t seed);

} // namespace bergkern

#endif
