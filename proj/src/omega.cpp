#include "bergkern/omega.hpp"

#include <cmath>
#include <numbers>

#include "bergkern/counter_rng.hpp"

namespace bergkern {

namespace {
constexpr double kPi = std::numbers::pi;

void require_polydisk(const std::vector<Cplx>& nu) {
    for (const Cplx& v : nu)
        if (std::abs(v) >= 1.0)
            throw DomainError("requires |nu_k| < 1 for every k");
}
} // namespace

double norm_omega(const OmegaParams& p, const OmegaMultiIndex& idx) {
    if (static_cast<int>(idx.beta.size()) != p.n)
        throw std::invalid_argument("norm_omega: beta length must equal n");
    long beta_sum = 0;
    double log_prod = 0.0;
    for (long bj : idx.beta) {
        beta_sum += bj;
        log_prod += std::log(static_cast<double>(bj + 1));
    }
    const double B = 2.0 / p.r * (beta_sum + p.n);
    const double log_val = (p.n + 1) * std::log(kPi) + log_gamma(B + 1.0) +
                           log_gamma(idx.alpha + 1.0) -
                           log_gamma(B + idx.alpha + 2.0) - log_prod;
    return std::exp(log_val);
}

Cplx kernel_omega(const OmegaParams& p, const std::vector<Cplx>& nu) {
    if (static_cast<int>(nu.size()) != p.n)
        throw std::invalid_argument("kernel_omega: nu length must equal n");
    require_polydisk(nu);
    const Cplx one(1.0, 0.0);
    Cplx prod_inv_sq = one;
    for (const Cplx& v : nu) {
        const Cplx d = one - v;
        prod_inv_sq /= d * d;
    }
    Cplx sum = prod_inv_sq;
    for (const Cplx& v : nu)
        sum += 2.0 * (one + v) * prod_inv_sq / (p.r * (one - v));
    return sum / std::pow(kPi, p.n + 1);
}

Cplx kernel_omega_diag(const OmegaParams& p, Cplx nu) {
    if (std::abs(nu) >= 1.0)
        throw DomainError("kernel_omega_diag requires |nu| < 1");
    const Cplx one(1.0, 0.0);
    const Cplx num = (2.0 * p.n - p.r) * nu + Cplx(2.0 * p.n + p.r, 0.0);
    return num / (p.r * std::pow(one - nu, 2.0 * p.n + 1.0) * std::pow(kPi, p.n + 1));
}

Cplx omega_series(const OmegaParams& p, const std::vector<Cplx>& nu,
                  const SeriesConfig& cfg) {
    if (p.n > 3)
        throw std::invalid_argument("omega_series supports n <= 3 only");
    if (static_cast<int>(nu.size()) != p.n)
        throw std::invalid_argument("omega_series: nu length must equal n");
    require_polydisk(nu);

    // Shells of total degree s, enumerated by nested composition loops.
    const int n = p.n;
    Cplx sum(0.0, 0.0);
    double abs_sum = 0.0;
    int quiet = 0;
    std::vector<std::vector<Cplx>> pows(n, {Cplx(1.0, 0.0)});
    for (int s = 0; s < cfg.max_terms; ++s) {
        if (s > 0)
            for (int j = 0; j < n; ++j) pows[j].push_back(pows[j].back() * nu[j]);
        Cplx shell(0.0, 0.0);
        auto term = [&](long b1, long b2, long b3) {
            const long bsum = b1 + b2 + b3;
            double c = 2.0 / p.r * (bsum + n + p.r / 2.0) * (b1 + 1);
            Cplx v = pows[0][b1];
            if (n >= 2) {
                c *= (b2 + 1);
                v *= pows[1][b2];
            }
            if (n >= 3) {
                c *= (b3 + 1);
                v *= pows[2][b3];
            }
            shell += c * v;
        };
        if (n == 1) {
            term(s, 0, 0);
        } else if (n == 2) {
            for (long b1 = 0; b1 <= s; ++b1) term(b1, s - b1, 0);
        } else {
            for (long b1 = 0; b1 <= s; ++b1)
                for (long b2 = 0; b2 <= s - b1; ++b2) term(b1, b2, s - b1 - b2);
        }
        sum += shell;
        abs_sum += std::abs(shell);
        if (s > 0 && std::abs(shell) <= cfg.rel_tail_tol * abs_sum) {
            if (++quiet >= 2) return sum / std::pow(kPi, n + 1);
        } else {
            quiet = 0;
        }
    }
    throw ConvergenceError("omega_series hit max_terms");
}

ZeroFreeReport omega_zero_free_check(const OmegaParams& p, long samples,
                                     std::uint64_t seed) {
    const CounterRng rng(seed);
    ZeroFreeReport report;
    report.samples = samples;
    report.per_coordinate_ok = true;
    double min_value = p.n + p.r / 2.0; // value at nu = 0
    for (long s = 0; s < samples; ++s) {
        double re_sum = p.n + p.r / 2.0;
        for (int k = 0; k < p.n; ++k) {
            const double rad = std::sqrt(rng.uniform(s, 2 * k));
            const double ang = 2.0 * kPi * rng.uniform(s, 2 * k + 1);
            const Cplx nu = std::polar(rad, ang);
            const Cplx term = 2.0 * nu / (Cplx(1.0, 0.0) - nu);
            if (term.real() <= -1.0) report.per_coordinate_ok = false;
            re_sum += term.real();
        }
        if (re_sum < min_value) min_value = re_sum;
    }
    report.min_value = min_value;
    return report;
}

} // namespace bergkern
