#include "bergkern/oracle.hpp"

#include <cmath>
#include <numbers>
#include <thread>

#include "bergkern/counter_rng.hpp"

namespace bergkern {

namespace {
constexpr double kPi = std::numbers::pi;

int resolve_threads(int requested, long work_items) {
    int t = requested;
    if (t <= 0) {
        if (const char* env = std::getenv("BERGKERN_THREADS")) t = std::atoi(env);
        if (t <= 0) t = static_cast<int>(std::thread::hardware_concurrency());
        if (t <= 0) t = 1;
    }
    if (static_cast<long>(t) > work_items) t = static_cast<int>(work_items);
    return t;
}

struct SampleSpec {
    int dim = 0;                  // complex coordinates to draw
    std::vector<long> exponents;  // |coordinate|^(2*e) factors of the integrand
};

// One accepted-integrand evaluation; returns 0 for rejected samples.
template <typename AcceptFn>
double evaluate_sample(const CounterRng& rng, long s, const SampleSpec& spec,
                       AcceptFn&& accept, bool& accepted) {
    std::vector<double> radius(spec.dim);
    for (int c = 0; c < spec.dim; ++c)
        radius[c] = std::sqrt(rng.uniform(static_cast<std::uint64_t>(s), c));
    accepted = accept(radius);
    if (!accepted) return 0.0;
    double f = 1.0;
    for (int c = 0; c < spec.dim; ++c)
        f *= std::pow(radius[c], 2.0 * spec.exponents[c]);
    return f;
}

template <typename AcceptFn>
McEstimate run_mc(const SampleSpec& spec, AcceptFn&& accept, const McConfig& cfg,
                  int threads) {
    if (cfg.samples < 1000)
        throw std::invalid_argument("mc_norm: samples must be >= 1000");
    const long batch = std::max<long>(1, cfg.batch);
    const long n_batches = (cfg.samples + batch - 1) / batch;
    std::vector<double> batch_sums(n_batches, 0.0);
    std::vector<long> batch_accepts(n_batches, 0);
    const CounterRng rng(cfg.seed);

    auto run_batch = [&](long b) {
        const long lo = b * batch;
        const long hi = std::min(cfg.samples, lo + batch);
        double sum = 0.0;
        long acc = 0;
        for (long s = lo; s < hi; ++s) {
            bool accepted = false;
            sum += evaluate_sample(rng, s, spec, accept, accepted);
            if (accepted) ++acc;
        }
        batch_sums[b] = sum;
        batch_accepts[b] = acc;
    };

    const int t = resolve_threads(threads, n_batches);
    if (t <= 1) {
        for (long b = 0; b < n_batches; ++b) run_batch(b);
    } else {
        std::vector<std::thread> pool;
        const long chunk = (n_batches + t - 1) / t;
        for (int k = 0; k < t; ++k) {
            const long lo = k * chunk, hi = std::min(n_batches, lo + chunk);
            if (lo < hi)
                pool.emplace_back([&run_batch, lo, hi] {
                    for (long b = lo; b < hi; ++b) run_batch(b);
                });
        }
        for (auto& th : pool) th.join();
    }

    // Enclosing polydisk volume pi^dim; batch means give the spread.
    const double vol = std::pow(kPi, spec.dim);
    double total = 0.0;
    long accepts = 0;
    for (long b = 0; b < n_batches; ++b) {
        total += batch_sums[b];
        accepts += batch_accepts[b];
    }
    McEstimate est;
    est.mean = vol * total / static_cast<double>(cfg.samples);
    est.accepted_fraction = static_cast<double>(accepts) / cfg.samples;

    if (n_batches > 1) {
        double mean_of_means = 0.0;
        std::vector<double> means(n_batches);
        for (long b = 0; b < n_batches; ++b) {
            const long lo = b * batch;
            const long hi = std::min(cfg.samples, lo + batch);
            means[b] = vol * batch_sums[b] / static_cast<double>(hi - lo);
            mean_of_means += means[b];
        }
        mean_of_means /= n_batches;
        double var = 0.0;
        for (double m : means) var += (m - mean_of_means) * (m - mean_of_means);
        var /= (n_batches - 1);
        est.std_error = std::sqrt(var / n_batches);
    } else {
        est.std_error = 0.0;
    }
    return est;
}

} // namespace

McEstimate mc_norm(const McDomain& domain, const McConfig& cfg, int threads) {
    if (const auto* d = std::get_if<DnDomain>(&domain)) {
        const int n = d->params.n;
        if (static_cast<int>(d->idx.alpha.size()) != n)
            throw std::invalid_argument("mc_norm: alpha length must equal n");
        SampleSpec spec;
        spec.dim = n + 2;
        spec.exponents = d->idx.alpha;
        spec.exponents.push_back(d->idx.gamma1);
        spec.exponents.push_back(d->idx.gamma2);
        const double q = to_double(d->params.q), r = to_double(d->params.r);
        auto accept = [n, q, r](const std::vector<double>& rad) {
            double zz = 0.0;
            for (int i = 0; i < n; ++i) zz += rad[i] * rad[i];
            return zz + std::pow(rad[n], q) < 1.0 && zz + std::pow(rad[n + 1], r) < 1.0;
        };
        return run_mc(spec, accept, cfg, threads);
    }
    if (const auto* d = std::get_if<DinvDomain>(&domain)) {
        SampleSpec spec;
        spec.dim = 3;
        spec.exponents = {d->alpha, d->gamma1, d->gamma2};
        const double e = 2.0 / d->n;
        const double q = to_double(d->q), r = to_double(d->r);
        auto accept = [e, q, r](const std::vector<double>& rad) {
            const double ze = std::pow(rad[0], e);
            return ze + std::pow(rad[1], q) < 1.0 && ze + std::pow(rad[2], r) < 1.0;
        };
        return run_mc(spec, accept, cfg, threads);
    }
    const auto& d = std::get<OmegaDomain>(domain);
    const int n = d.params.n;
    if (static_cast<int>(d.idx.beta.size()) != n)
        throw std::invalid_argument("mc_norm: beta length must equal n");
    SampleSpec spec;
    spec.dim = n + 1;
    spec.exponents = {d.idx.alpha};
    for (long b : d.idx.beta) spec.exponents.push_back(b);
    const double r = d.params.r;
    auto accept = [n, r](const std::vector<double>& rad) {
        const double zz = rad[0] * rad[0];
        for (int k = 1; k <= n; ++k)
            if (zz + std::pow(rad[k], r) >= 1.0) return false;
        return true;
    };
    return run_mc(spec, accept, cfg, threads);
}

double beta_integral(double a, double p, double b) {
    if (!(a > -1.0) || !(b > -1.0) || !(p > 0.0))
        throw DomainError("beta_integral requires a > -1, b > -1, p > 0");
    return std::exp(log_gamma((a + 1.0) / p) + log_gamma(b + 1.0) -
                    log_gamma((a + 1.0) / p + b + 1.0)) / p;
}

namespace {

// tanh-sinh quadrature of f over (0, 1); robust against endpoint behavior.
template <typename F>
double tanh_sinh_01(F&& f, int max_nodes) {
    constexpr double t_cut = 4.0;
    // Node value w(t) f(x(t)) with x(t) = (1 + tanh((pi/2) sinh t)) / 2,
    // symmetrized over +-t.
    auto node_pair = [&f](double t) {
        const double u = 0.5 * kPi * std::sinh(t);
        const double x = 1.0 / (1.0 + std::exp(-2.0 * u));
        const double w = 0.25 * kPi * std::cosh(t) / (std::cosh(u) * std::cosh(u));
        double v = 0.0;
        if (x > 0.0 && x < 1.0) v += w * f(x);
        if (t > 0.0) {
            const double xm = 1.0 - x;
            if (xm > 0.0 && xm < 1.0) v += w * f(xm);
        }
        return v;
    };

    double h = 1.0;
    int nodes = 0;
    double result = 0.0;
    for (int k = 0; k * h <= t_cut; ++k, ++nodes) result += node_pair(k * h);
    result *= h;
    for (int level = 1; level <= 12; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (int k = 1; k * h <= t_cut; k += 2, ++nodes) add += node_pair(k * h);
        const double prev = result;
        result = 0.5 * prev + h * add;
        if (level >= 3 && std::abs(result - prev) <= 1e-13 * std::abs(result)) break;
        if (nodes >= max_nodes && level >= 5) break;
    }
    return result;
}

} // namespace

double radial_norm_quadrature(const KernelParams& params, const MultiIndex& idx,
                              int points) {
    if (points < 32) points = 32;
    const int n = params.n;
    const long abs_alpha = idx.abs_alpha();
    const double A = (2.0 * idx.gamma1 + 2.0) / to_double(params.q) +
                     (2.0 * idx.gamma2 + 2.0) / to_double(params.r);

    // beta(alpha + 1) = prod Gamma(alpha_i + 1) / Gamma(|alpha| + n)
    double log_beta = -log_gamma(static_cast<double>(abs_alpha + n));
    for (long ai : idx.alpha) log_beta += log_gamma(static_cast<double>(ai) + 1.0);

    const double prefactor =
        std::exp((n + 2) * std::log(2.0 * kPi) + log_beta -
                 (n + 1) * std::log(2.0) -
                 std::log(static_cast<double>(idx.gamma1 + 1)) -
                 std::log(static_cast<double>(idx.gamma2 + 1)));

    // substitute u = rho^2: integral = 1/2 int_0^1 u^{|alpha|+n-1} (1-u)^A du
    const double pexp = static_cast<double>(abs_alpha + n - 1);
    const double integral = 0.5 * tanh_sinh_01(
        [pexp, A](double u) {
            return std::pow(u, pexp) * std::pow(1.0 - u, A);
        },
        points * 64);
    return prefactor * integral;
}

} // namespace bergkern
