// bergkern: evaluation, construction, verification, scans, and Monte Carlo
// oracles for the ellipsoid-intersection kernel library.
//
// Exit codes: 0 success, 1 failed verification, 2 usage / input errors.
#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bergkern/jacobirep.hpp"
#include "bergkern/luqikeng.hpp"
#include "bergkern/omega.hpp"
#include "bergkern/oracle.hpp"
#include "bergkern/serialize.hpp"

using namespace bergkern;
using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr const char* kSchema = "bergkern/1";

int g_precision = 15;

json num(double v) { return format_double(v, g_precision); }

json cplx_json(Cplx v) { return {{"re", num(v.real())}, {"im", num(v.imag())}}; }

std::vector<Cplx> pair_up(const std::vector<double>& flat, const std::string& flag) {
    if (flat.size() % 2 != 0)
        throw CLI::ValidationError(flag, "expected re,im pairs (even count)");
    std::vector<Cplx> out(flat.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = Cplx(flat[2 * i], flat[2 * i + 1]);
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// --- verify suites ---------------------------------------------------------

bool suite_series() {
    std::mt19937 gen(2026);
    for (int n = 1; n <= 5; ++n) {
        const StructuredRatFun L = build_L(n, Rat(2), Rat(7, 2));
        // exact Taylor coefficients on a small grid
        for (long g1 = 0; g1 <= 5; ++g1)
            for (long g2 = 0; g1 + g2 <= 5; ++g2) {
                const Rat A = Rat(2 * g1 + 2) / Rat(2) + Rat(2 * g2 + 2) / Rat(7, 2);
                Rat want((g1 + 1) * (g2 + 1));
                for (int k = 1; k <= n; ++k) want *= A + k;
                if (L.taylor_coeff(g1, g2) != want) return false;
            }
        const Cplx x(0.3, 0.0), y(0.0, -0.4);
        if (std::abs(l_series(n, Rat(2), Rat(7, 2), x, y) - L.eval(x, y)) >
            1e-10 * std::abs(L.eval(x, y)))
            return false;
    }
    return true;
}

bool suite_norms() {
    const Rat qs[2] = {Rat(2), Rat(3)};
    for (int n = 1; n <= 3; ++n)
        for (const Rat& q : qs)
            for (const Rat& r : qs) {
                const KernelParams params{n, q, r};
                DomainPoint o;
                o.z.assign(n, Cplx(0.0, 0.0));
                const MultiIndex zero{std::vector<long>(n, 0), 0, 0};
                if (std::abs(kernel_D(params, o, o).real() *
                                 monomial_norm_D(params, zero) -
                             1.0) > 1e-12)
                    return false;
                const MultiIndex idx{std::vector<long>(n, 1), 2, 1};
                if (std::abs(radial_norm_quadrature(params, idx, 0) -
                             monomial_norm_D(params, idx)) >
                    1e-10 * monomial_norm_D(params, idx))
                    return false;
            }
    return true;
}

bool suite_jacobi() {
    std::mt19937 gen(2027);
    auto disk = [&gen](double rad) {
        std::uniform_real_distribution<double> u(-rad, rad);
        while (true) {
            const Cplx z(u(gen), u(gen));
            if (std::abs(z) < rad) return z;
        }
    };
    for (int n = 1; n <= 6; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            const Cplx nu1 = disk(0.6), nu2 = disk(0.6);
            const Cplx f1 = std::exp(log_gamma(3.0 + n)) /
                            (2.0 * std::pow(kPi, n + 2)) *
                            appell_f1(3.0 + n, 2.0, 2.0, 3.0, nu1, nu2);
            const Cplx finite = rep_finite_sum(n, nu1, nu2);
            const Cplx parity = n % 2 == 1 ? rep_odd((n - 1) / 2, nu1, nu2)
                                           : rep_even(n / 2, nu1, nu2);
            if (std::abs(finite - f1) > 1e-9 * std::abs(f1)) return false;
            if (std::abs(parity - f1) > 1e-9 * std::abs(f1)) return false;
        }
    return true;
}

bool suite_deflation() {
    std::mt19937 gen(2028);
    std::uniform_real_distribution<double> u(-0.42, 0.42);
    for (int n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            const Cplx nu1(u(gen), u(gen)), nu2(u(gen), u(gen));
            const double scale =
                std::abs(std::exp(std::lgamma(n + 1.0)) / std::pow(kPi, n - 1) *
                         kernel_Dinv_origin(n, Rat(2), Rat(4), nu1, nu2));
            if (deflation_residual(n, Rat(2), Rat(4), nu1, nu2) > 1e-12 * scale)
                return false;
        }
    return true;
}

bool suite_schur() {
    if (gn_sum_check() != 38400) return false;
    for (double r : {0.5, 2.0, 7.0}) {
        for (int i = 0; i < 64; ++i) {
            const double eta = 2.0 * kPi * i / 64.0;
            if (std::abs(det_M(r, eta) - det_M_closed(r, eta)) >
                1e-6 * (std::abs(det_M_closed(r, eta)) + 1.0))
                return false;
        }
        if (!lqk_scan(r, 1024).witness_found) return false;
    }
    return build_G(Rat(2)).coeff(0, 0) == 240;
}

bool suite_omega() {
    std::mt19937 gen(2029);
    std::uniform_real_distribution<double> u(-0.38, 0.38);
    for (int n = 1; n <= 3; ++n)
        for (double r : {0.5, 2.0, 4.0}) {
            const OmegaParams p{n, r};
            std::vector<Cplx> nu(n);
            for (auto& v : nu) v = Cplx(u(gen), u(gen));
            if (std::abs(omega_series(p, nu) - kernel_omega(p, nu)) >
                1e-10 * std::abs(kernel_omega(p, nu)))
                return false;
        }
    for (int n = 1; n <= 4; ++n)
        if (omega_zero_free_check({n, 1.5}, 20000, 1).min_value <= 0.0)
            return false;
    return true;
}

// --- subcommand bodies ------------------------------------------------------

int run_ln(int n, const std::string& q_s, const std::string& r_s,
           const std::string& format) {
    const Rat q = rat_from_string(q_s), r = rat_from_string(r_s);
    const StructuredRatFun L = build_L(n, q, r);
    if (format == "latex") {
        std::cout << ratfun_to_latex(L) << "\n";
    } else {
        emit({{"schema", kSchema},
              {"n", n},
              {"q", rat_to_string(q)},
              {"r", rat_to_string(r)},
              {"ratfun", ratfun_to_json(L)}});
    }
    return 0;
}

int run_eval_kernel(const std::string& domain, int n, const std::string& q_s,
                    const std::string& r_s, double r_omega,
                    const std::vector<double>& p_flat,
                    const std::vector<double>& p2_flat,
                    const std::vector<double>& nu_flat) {
    json out = {{"schema", kSchema}, {"domain", domain}};
    Cplx value;
    if (domain == "dnqr") {
        const std::vector<Cplx> c = pair_up(p_flat, "--point");
        if (static_cast<int>(c.size()) != n + 2)
            throw CLI::ValidationError("--point", "needs n+2 re,im pairs (z..., w1, w2)");
        std::vector<Cplx> c2 = p2_flat.empty() ? c : pair_up(p2_flat, "--point2");
        if (c2.size() != c.size())
            throw CLI::ValidationError("--point2", "length must match --point");
        const KernelParams params{n, rat_from_string(q_s), rat_from_string(r_s)};
        DomainPoint p{std::vector<Cplx>(c.begin(), c.begin() + n), c[n], c[n + 1]};
        DomainPoint p2{std::vector<Cplx>(c2.begin(), c2.begin() + n), c2[n],
                       c2[n + 1]};
        value = kernel_D(params, p, p2);
    } else if (domain == "dinv") {
        const std::vector<Cplx> c = pair_up(nu_flat, "--nu");
        if (c.size() != 2)
            throw CLI::ValidationError("--nu", "needs exactly 2 re,im pairs (nu1, nu2)");
        value = kernel_Dinv_origin(n, rat_from_string(q_s), rat_from_string(r_s),
                                   c[0], c[1]);
    } else { // omega
        const std::vector<Cplx> c = pair_up(nu_flat, "--nu");
        if (static_cast<int>(c.size()) != n)
            throw CLI::ValidationError("--nu", "needs n re,im pairs");
        value = kernel_omega({n, r_omega}, c);
    }
    out["kernel"] = cplx_json(value);
    emit(out);
    return 0;
}

int run_verify(const std::string& suite) {
    struct Entry {
        const char* name;
        bool (*fn)();
    };
    const Entry all[] = {{"series", suite_series},     {"norms", suite_norms},
                         {"jacobi", suite_jacobi},     {"deflation", suite_deflation},
                         {"schur", suite_schur},       {"omega", suite_omega}};
    json suites = json::array();
    bool any_failed = false, matched = false;
    for (const Entry& e : all) {
        if (suite != "all" && suite != e.name) continue;
        matched = true;
        const bool ok = e.fn();
        std::cerr << (ok ? "pass" : "FAIL") << "  " << e.name << "\n";
        suites.push_back({{"name", e.name}, {"pass", ok}});
        if (!ok) any_failed = true;
    }
    if (!matched)
        throw CLI::ValidationError(
            "--suite", "valid: series, norms, jacobi, deflation, schur, omega, all");
    emit({{"schema", kSchema}, {"suites", suites}, {"pass", !any_failed}});
    return any_failed ? 1 : 0;
}

int run_lqk_scan(double r, int grid, const std::string& format) {
    if (format == "csv") {
        std::printf("eta,det_m\n");
        for (int i = 0; i < grid; ++i) {
            const double eta = 2.0 * kPi * i / grid;
            std::printf("%s,%s\n", format_double(eta, g_precision).c_str(),
                        format_double(det_M(r, eta), g_precision).c_str());
        }
        return 0;
    }
    const ScanReport rep = lqk_scan(r, grid);
    emit({{"schema", kSchema},
          {"r", num(rep.r)},
          {"grid", rep.grid_size},
          {"min_det", num(rep.min_det)},
          {"argmin_eta", num(rep.argmin_eta)},
          {"witness_found", rep.witness_found}});
    return 0;
}

int run_mc_norm(const std::string& domain, int n, const std::string& q_s,
                const std::string& r_s, double r_omega,
                const std::vector<long>& alpha, long gamma1, long gamma2,
                long samples, std::uint64_t seed) {
    McConfig cfg;
    cfg.samples = samples;
    cfg.seed = seed;
    McDomain dom;
    double closed = 0.0;
    if (domain == "dnqr") {
        if (static_cast<int>(alpha.size()) != n)
            throw CLI::ValidationError("--alpha", "needs n entries");
        const KernelParams params{n, rat_from_string(q_s), rat_from_string(r_s)};
        const MultiIndex idx{alpha, gamma1, gamma2};
        dom = DnDomain{params, idx};
        closed = monomial_norm_D(params, idx);
    } else if (domain == "dinv") {
        if (alpha.size() != 1)
            throw CLI::ValidationError("--alpha", "needs exactly 1 entry");
        const Rat q = rat_from_string(q_s), r = rat_from_string(r_s);
        dom = DinvDomain{n, q, r, alpha[0], gamma1, gamma2};
        closed = monomial_norm_Dinv(n, q, r, alpha[0], gamma1, gamma2);
    } else { // omega
        if (static_cast<int>(alpha.size()) != n + 1)
            throw CLI::ValidationError("--alpha",
                                       "needs n+1 entries (alpha, beta_1..beta_n)");
        const OmegaParams p{n, r_omega};
        const OmegaMultiIndex idx{alpha[0],
                                  std::vector<long>(alpha.begin() + 1, alpha.end())};
        dom = OmegaDomain{p, idx};
        closed = norm_omega(p, idx);
    }
    const McEstimate est = mc_norm(dom, cfg);
    emit({{"schema", kSchema},
          {"domain", domain},
          {"samples", samples},
          {"seed", seed},
          {"mean", num(est.mean)},
          {"std_error", num(est.std_error)},
          {"accepted_fraction", num(est.accepted_fraction)},
          {"closed_form", num(closed)},
          {"sigma_deviation", num((est.mean - closed) / est.std_error)}});
    return 0;
}

int run_zeros(int n) {
    const auto [p, p2] = diagonal_zero_witness(n);
    const KernelParams params{n, Rat(2), Rat(2)};
    json zj = json::array();
    for (const Cplx& zi : p.z) zj.push_back(cplx_json(zi));
    emit({{"schema", kSchema},
          {"n", n},
          {"witness", {{"z", zj}, {"w1", cplx_json(p.w1)}, {"w2", cplx_json(p.w2)}}},
          {"partner", {{"w1", cplx_json(p2.w1)}, {"w2", cplx_json(p2.w2)}}},
          {"kernel", cplx_json(kernel_D(params, p, p2))},
          {"rep_diagonal_at_-3/n", cplx_json(rep_diagonal(n, {-3.0 / n, 0.0}))}});
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bergman kernels of ellipsoid-intersection domains"};
    app.require_subcommand(1);
    app.add_option("--precision", g_precision, "decimal digits for emitted numbers")
        ->check(CLI::Range(1, 17));

    int n = 1;
    std::string q_s = "2", r_s = "2", format = "json", domain = "dnqr",
                suite = "all";
    double r_omega = 2.0, r_scan = 2.0;
    int grid = 4096;
    long samples = 1000000, gamma1 = 0, gamma2 = 0;
    std::uint64_t seed = 0;
    std::vector<double> p_flat, p2_flat, nu_flat;
    std::vector<long> alpha;

    auto* ln = app.add_subcommand("ln", "exact rational function L_n^{q,r}");
    ln->add_option("--n", n, "family index")->check(CLI::Range(1, 64))->required();
    ln->add_option("--q", q_s, "exponent q as a rational, e.g. 2 or 7/2");
    ln->add_option("--r", r_s, "exponent r as a rational");
    ln->add_option("--format", format)->check(CLI::IsMember({"json", "latex"}));

    auto* ev = app.add_subcommand("eval-kernel", "kernel value at a point pair");
    ev->add_option("--domain", domain)->check(CLI::IsMember({"dnqr", "dinv", "omega"}));
    ev->add_option("--n", n)->check(CLI::Range(1, 64))->required();
    ev->add_option("--q", q_s);
    ev->add_option("--r", r_s);
    ev->add_option("--r-omega", r_omega, "real exponent r for the omega family");
    ev->add_option("--point", p_flat, "re,im pairs: z_1..z_n, w1, w2 (dnqr)");
    ev->add_option("--point2", p2_flat, "second point (defaults to --point)");
    ev->add_option("--nu", nu_flat, "re,im pairs of nu (dinv: 2 pairs, omega: n)");

    auto* vf = app.add_subcommand("verify", "run verification suites");
    vf->add_option("--suite", suite,
                   "series | norms | jacobi | deflation | schur | omega | all");

    auto* scan = app.add_subcommand("lqk-scan", "determinant scan over the circle");
    scan->add_option("--r", r_scan, "family parameter r")->required();
    scan->add_option("--grid", grid)->check(CLI::Range(16, 1 << 22));
    scan->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* mc = app.add_subcommand("mc-norm", "Monte Carlo monomial norm oracle");
    mc->add_option("--domain", domain)->check(CLI::IsMember({"dnqr", "dinv", "omega"}));
    mc->add_option("--n", n)->check(CLI::Range(1, 16))->required();
    mc->add_option("--q", q_s);
    mc->add_option("--r", r_s);
    mc->add_option("--r-omega", r_omega);
    mc->add_option("--alpha", alpha, "z-block exponents (omega: alpha then beta)");
    mc->add_option("--gamma1", gamma1);
    mc->add_option("--gamma2", gamma2);
    mc->add_option("--samples", samples)->check(CLI::Range(1000L, 1000000000L));
    mc->add_option("--seed", seed);

    auto* zr = app.add_subcommand("zeros", "diagonal kernel zero witness");
    zr->add_option("--n", n, "dimension of the z block (>= 4)")->required();

    try {
        app.parse(argc, argv);
        if (ln->parsed()) return run_ln(n, q_s, r_s, format);
        if (ev->parsed())
            return run_eval_kernel(domain, n, q_s, r_s, r_omega, p_flat, p2_flat,
                                   nu_flat);
        if (vf->parsed()) return run_verify(suite);
        if (scan->parsed()) return run_lqk_scan(r_scan, grid, format);
        if (mc->parsed())
            return run_mc_norm(domain, n, q_s, r_s, r_omega, alpha, gamma1, gamma2,
                               samples, seed);
        if (zr->parsed()) return run_zeros(n);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
