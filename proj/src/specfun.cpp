#include "bergkern/specfun.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace bergkern {

namespace {

bool is_nonpositive_int(double a) {
    return a <= 0.0 && a == std::floor(a);
}

} // namespace

double log_gamma(double x) {
    if (!(x > 0.0))
        throw DomainError("log_gamma requires x > 0, got " + std::to_string(x));
    return std::lgamma(x);
}

double pochhammer(double a, int n) {
    double p = 1.0;
    for (int j = 0; j < n; ++j) p *= a + j;
    return p;
}

Cplx gauss_2f1(double a, double b, double c, Cplx z, const SeriesConfig& cfg) {
    int terminate_at = -1;
    if (is_nonpositive_int(a)) terminate_at = static_cast<int>(-a);
    if (is_nonpositive_int(b)) {
        int tb = static_cast<int>(-b);
        if (terminate_at < 0 || tb < terminate_at) terminate_at = tb;
    }
    if (terminate_at >= 0) {
        // Exact polynomial; valid for any z. c may be a nonpositive integer
        // only if the series stops before the pole.
        if (is_nonpositive_int(c) && -c < terminate_at)
            throw PoleError("2F1 pole: c nonpositive integer inside the terminating range");
        Cplx sum(1.0, 0.0), term(1.0, 0.0);
        for (int k = 0; k < terminate_at; ++k) {
            term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
            sum += term;
        }
        return sum;
    }
    if (is_nonpositive_int(c))
        throw PoleError("2F1 pole: c is a nonpositive integer");
    if (std::abs(z) >= 1.0)
        throw DomainError("2F1 series requires |z| < 1");

    Cplx sum(1.0, 0.0), term(1.0, 0.0);
    int quiet = 0;
    for (int k = 0; k < cfg.max_terms; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
        if (std::abs(term) <= cfg.rel_tail_tol * std::abs(sum)) {
            if (++quiet >= 2) return sum;
        } else {
            quiet = 0;
        }
    }
    throw ConvergenceError("2F1 series hit max_terms");
}

Cplx appell_f1(double a, double b, double b2, double c, Cplx x, Cplx y,
               const SeriesConfig& cfg) {
    if (std::abs(x) >= 1.0 || std::abs(y) >= 1.0)
        throw DomainError("F1 series requires |x| < 1 and |y| < 1");

    // Anti-diagonal shells s = m + n: (a)_s / (c)_s is shared, inner factor
    //   sum_{n=0}^{s} (b)_n (b2)_{s-n} x^n y^{s-n} / (n! (s-n)!).
    Cplx sum(0.0, 0.0);
    double abs_sum = 0.0;
    double poch_ac = 1.0; // (a)_s / (c)_s
    std::vector<Cplx> xpow{Cplx(1.0, 0.0)}, ypow{Cplx(1.0, 0.0)};
    std::vector<double> poch_b{1.0}, poch_b2{1.0}, inv_fact{1.0};
    int quiet = 0;
    for (int s = 0; s < cfg.max_terms; ++s) {
        if (s > 0) {
            poch_ac *= (a + s - 1.0) / (c + s - 1.0);
            xpow.push_back(xpow.back() * x);
            ypow.push_back(ypow.back() * y);
            poch_b.push_back(poch_b.back() * (b + s - 1.0));
            poch_b2.push_back(poch_b2.back() * (b2 + s - 1.0));
            inv_fact.push_back(inv_fact.back() / s);
        }
        Cplx shell(0.0, 0.0);
        for (int n = 0; n <= s; ++n)
            shell += poch_b[n] * poch_b2[s - n] * inv_fact[n] * inv_fact[s - n] *
                     xpow[n] * ypow[s - n];
        shell *= poch_ac;
        sum += shell;
        abs_sum += std::abs(shell);
        if (s > 0 && std::abs(shell) <= cfg.rel_tail_tol * abs_sum) {
            if (++quiet >= 2) return sum;
        } else {
            quiet = 0;
        }
    }
    throw ConvergenceError("F1 series hit max_terms");
}

Cplx jacobi_p(int d, double k, double l, Cplx z) {
    // (k+1)_d / d! * 2F1(-d, 1+k+l+d; k+1; (1-z)/2), summed exactly.
    Cplx u = (Cplx(1.0, 0.0) - z) * 0.5;
    Cplx sum(1.0, 0.0), term(1.0, 0.0);
    for (int j = 0; j < d; ++j) {
        term *= (-d + j) * (1.0 + k + l + d + j) / ((j + 1.0) * (k + 1.0 + j)) * u;
        sum += term;
    }
    double lead = 1.0;
    for (int j = 0; j < d; ++j) lead *= (k + 1.0 + j) / (j + 1.0);
    return lead * sum;
}

} // namespace bergkern
