#include "bergkern/bergman.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

namespace bergkern {

namespace {

constexpr double kPi = std::numbers::pi;

double norm_sq(const std::vector<Cplx>& z) {
    double s = 0.0;
    for (const Cplx& zi : z) s += std::norm(zi);
    return s;
}

double log_factorial(long n) { return std::lgamma(static_cast<double>(n) + 1.0); }

} // namespace

long MultiIndex::abs_alpha() const {
    long s = 0;
    for (long a : alpha) s += a;
    return s;
}

bool in_domain(const KernelParams& params, const DomainPoint& p) {
    if (static_cast<int>(p.z.size()) != params.n) return false;
    double zz = norm_sq(p.z);
    return zz + std::pow(std::abs(p.w1), to_double(params.q)) < 1.0 &&
           zz + std::pow(std::abs(p.w2), to_double(params.r)) < 1.0;
}

double monomial_norm_D(const KernelParams& params, const MultiIndex& idx) {
    const double A = (2.0 * idx.gamma1 + 2.0) / to_double(params.q) +
                     (2.0 * idx.gamma2 + 2.0) / to_double(params.r);
    double log_val = (params.n + 2) * std::log(kPi) + log_gamma(A + 1.0);
    for (long ai : idx.alpha) log_val += log_factorial(ai);
    log_val -= std::log(static_cast<double>(idx.gamma1 + 1));
    log_val -= std::log(static_cast<double>(idx.gamma2 + 1));
    log_val -= log_gamma(A + idx.abs_alpha() + params.n + 1.0);
    return std::exp(log_val);
}

double monomial_norm_Dinv(int n, const Rat& q, const Rat& r, long alpha,
                          long gamma1, long gamma2) {
    const double A = (2.0 * gamma1 + 2.0) / to_double(q) +
                     (2.0 * gamma2 + 2.0) / to_double(r);
    double log_val = std::log(static_cast<double>(n)) + 3.0 * std::log(kPi) +
                     log_gamma(A + 1.0) +
                     log_gamma(static_cast<double>(n) * alpha + n) -
                     std::log(static_cast<double>(gamma1 + 1)) -
                     std::log(static_cast<double>(gamma2 + 1)) -
                     log_gamma(A + static_cast<double>(n) * alpha + n + 1.0);
    return std::exp(log_val);
}

StructuredRatFun build_L(int n, const Rat& q, const Rat& r) {
    if (n < 1) throw std::invalid_argument("build_L: n must be >= 1");
    if (q <= 0 || r <= 0) throw std::invalid_argument("build_L: q, r must be positive");

    static std::mutex cache_mutex;
    static std::map<std::tuple<int, Rat, Rat>, StructuredRatFun> cache;
    const std::tuple<int, Rat, Rat> key{n, q, r};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    // L_1 = (2q(1-x)(1+y) + 2r(1+x)(1-y) + qr(1-x)(1-y)) / (qr (1-x)^3 (1-y)^3)
    BiPoly num = one_minus(Var::X) * one_plus(Var::Y) * (Rat(2) * q) +
                 one_plus(Var::X) * one_minus(Var::Y) * (Rat(2) * r) +
                 one_minus(Var::X) * one_minus(Var::Y) * (q * r);
    StructuredRatFun L(std::move(num), q * r, 3, 3);
    for (int k = 1; k < n; ++k) L = ratfun_apply_recursion(L, k, q, r);

    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(key, std::move(L)).first->second;
}

Cplx l_series(int n, const Rat& q, const Rat& r, Cplx x, Cplx y,
              const SeriesConfig& cfg) {
    if (std::abs(x) >= 1.0 || std::abs(y) >= 1.0)
        throw DomainError("l_series requires |x| < 1 and |y| < 1");
    const double qd = to_double(q), rd = to_double(r);
    Cplx sum(0.0, 0.0);
    double abs_sum = 0.0;
    int quiet = 0;
    std::vector<Cplx> xpow{Cplx(1.0, 0.0)}, ypow{Cplx(1.0, 0.0)};
    for (int s = 0; s < cfg.max_terms; ++s) {
        if (s > 0) {
            xpow.push_back(xpow.back() * x);
            ypow.push_back(ypow.back() * y);
        }
        Cplx shell(0.0, 0.0);
        for (int g1 = 0; g1 <= s; ++g1) {
            int g2 = s - g1;
            double A = (2.0 * g1 + 2.0) / qd + (2.0 * g2 + 2.0) / rd;
            double coeff = (g1 + 1.0) * (g2 + 1.0) *
                           std::exp(log_gamma(A + n + 1.0) - log_gamma(A + 1.0));
            shell += coeff * xpow[g1] * ypow[g2];
        }
        sum += shell;
        abs_sum += std::abs(shell);
        if (s > 0 && std::abs(shell) <= cfg.rel_tail_tol * abs_sum) {
            if (++quiet >= 2) return sum;
        } else {
            quiet = 0;
        }
    }
    throw ConvergenceError("l_series hit max_terms");
}

Cplx kernel_D(const KernelParams& params, const DomainPoint& p,
              const DomainPoint& p2) {
    if (!in_domain(params, p) || !in_domain(params, p2))
        throw DomainError("kernel_D: point outside the open domain");
    Cplx tau(0.0, 0.0);
    for (int i = 0; i < params.n; ++i) tau += p.z[i] * std::conj(p2.z[i]);
    const Cplx nu1 = p.w1 * std::conj(p2.w1);
    const Cplx nu2 = p.w2 * std::conj(p2.w2);
    const double inv_q = 2.0 / to_double(params.q);
    const double inv_r = 2.0 / to_double(params.r);
    const Cplx one_minus_tau = Cplx(1.0, 0.0) - tau;
    const Cplx a = nu1 / std::pow(one_minus_tau, inv_q);
    const Cplx b = nu2 / std::pow(one_minus_tau, inv_r);
    const StructuredRatFun L = build_L(params.n, params.q, params.r);
    return L.eval(a, b) /
           (std::pow(kPi, params.n + 2) * std::pow(one_minus_tau, inv_q + inv_r + 1.0));
}

Cplx kernel_Dinv_origin(int n, const Rat& q, const Rat& r, Cplx nu1, Cplx nu2) {
    if (std::abs(nu1) >= 1.0 || std::abs(nu2) >= 1.0)
        throw DomainError("kernel_Dinv_origin requires |nu1| < 1, |nu2| < 1");
    const StructuredRatFun L = build_L(n, q, r);
    return L.eval(nu1, nu2) / (std::pow(kPi, 3) * std::exp(log_factorial(n)));
}

namespace {

// Factor nu = w * conj(xi) with |w|, |xi| < 1. The halving split keeps the
// product bit-exact; the sqrt split covers moduli >= 1/2.
void split_nu(Cplx nu, Cplx& w, Cplx& xi) {
    if (std::abs(nu) < 0.5) {
        w = Cplx(2.0 * nu.real(), 2.0 * nu.imag());
        xi = Cplx(0.5, 0.0);
    } else {
        w = std::sqrt(nu);
        xi = std::conj(w);
    }
}

} // namespace

double deflation_residual(int n, const Rat& q, const Rat& r, Cplx nu1, Cplx nu2) {
    if (std::abs(nu1) >= 1.0 || std::abs(nu2) >= 1.0)
        throw DomainError("deflation_residual requires |nu1| < 1, |nu2| < 1");
    const Cplx lhs = std::exp(log_factorial(n)) / std::pow(kPi, n - 1) *
                     kernel_Dinv_origin(n, q, r, nu1, nu2);

    KernelParams params{n, q, r};
    DomainPoint p, p2;
    p.z.assign(n, Cplx(0.0, 0.0));
    p2.z.assign(n, Cplx(0.0, 0.0));
    split_nu(nu1, p.w1, p2.w1);
    split_nu(nu2, p.w2, p2.w2);
    const Cplx rhs = kernel_D(params, p, p2);
    return std::abs(lhs - rhs);
}

} // namespace bergkern
