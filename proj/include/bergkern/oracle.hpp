#ifndef BERGKERN_ORACLE_HPP
#define BERGKERN_ORACLE_HPP

#include <cstdint>
#include <variant>

#include "bergkern/bergman.hpp"
#include "bergkern/omega.hpp"

namespace bergkern {

struct McConfig {
    long samples = 1000000; // >= 1000
    std::uint64_t seed = 0;
    long batch = 10000;
};

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    double accepted_fraction = 0.0;
};

// Which defining inequalities the rejection sampler applies.
struct DnDomain {
    KernelParams params;
    MultiIndex idx;
};
struct DinvDomain {
    int n;
    Rat q, r;
    long alpha, gamma1, gamma2;
};
struct OmegaDomain {
    OmegaParams params;
    OmegaMultiIndex idx;
};
using McDomain = std::variant<DnDomain, DinvDomain, OmegaDomain>;

// Unbiased Monte Carlo estimate of the squared monomial norm by rejection
// from the enclosing unit polydisk. The random stream is counter-based per
// sample index, so a fixed seed gives a bit-identical mean regardless of
// run or thread count. threads = 0: auto (capped by BERGKERN_THREADS).
McEstimate mc_norm(const McDomain& domain, const McConfig& cfg, int threads = 0);

// int_0^1 x^a (1 - x^p)^b dx = Gamma((a+1)/p) Gamma(b+1) / (p Gamma((a+1)/p + b + 1)).
double beta_integral(double a, double p, double b);

// The reduced 1-D radial integral from the norm computation, evaluated by
// tanh-sinh quadrature and multiplied by the exact angular prefactor.
// Agrees with monomial_norm_D to 1e-10 relative.
double radial_norm_quadrature(const KernelParams& params, const MultiIndex& idx,
                              int points);

} // namespace bergkern

#endif
