#include "bergkern/luqikeng.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <thread>

namespace bergkern {

namespace {
constexpr double kPi = std::numbers::pi;

int resolve_threads(int requested, int work_items) {
    int t = requested;
    if (t <= 0) {
        if (const char* env = std::getenv("BERGKERN_THREADS")) {
            t = std::atoi(env);
        }
        if (t <= 0) t = static_cast<int>(std::thread::hardware_concurrency());
        if (t <= 0) t = 1;
    }
    if (t > work_items) t = work_items;
    return t;
}
} // namespace

BiPoly build_G(const Rat& r) {
    if (r <= 0) throw std::invalid_argument("build_G: r must be positive");
    const StructuredRatFun L3 = build_L(3, r, r);
    if (L3.pow_x() != 5 || L3.pow_y() != 5)
        throw NumericalError("unexpected L3 denominator powers");
    // G = r^3 (1-x)^5 (1-y)^5 / 2 * L3 = r^3 / (2 scale) * numerator(L3)
    return L3.numerator() * (r * r * r / (Rat(2) * L3.scale()));
}

Cplx eval_G(double r, Cplx x, Cplx y) {
    const Cplx one(1.0, 0.0);
    const Cplx omx = one - x, omy = one - y, oxy = one - x * y;
    const double r2 = r * r, r3 = r2 * r;
    Cplx g = 3.0 * r3 * omx * omx * omx * omy * omy * omy;
    g += 22.0 * r2 * omx * omx * omy * omy * oxy;
    g += 24.0 * r * omx * omy *
         (x * (2.0 * x + one) * y * y + (x - 8.0 * one) * x * y + x + y + 2.0 * one);
    g += 8.0 * oxy *
         (x * x * y * (4.0 * y + 7.0 * one) + x * x + y * y +
          x * y * (7.0 * y - 38.0 * one) + 7.0 * x + 7.0 * y + 4.0 * one);
    return g;
}

DCoeffs d_coefficients(double r, double eta, bool verify) {
    if (!(r > 0.0)) throw std::invalid_argument("d_coefficients: r must be positive");
    const Cplx t = std::polar(1.0, eta);
    const Cplx one(1.0, 0.0);
    const Cplx tm1 = t - one;
    const Cplx tm1_2 = tm1 * tm1, tm1_3 = tm1_2 * tm1;
    const Cplx t2 = t * t, t3 = t2 * t;
    const double r2 = r * r, r3 = r2 * r;

    DCoeffs d;
    d.r = r;
    d.eta = eta;
    d.d0 = 3.0 * r3 * tm1_3 - 22.0 * r2 * tm1_2 * t +
           24.0 * r * t * (-one - t + 2.0 * t2) - 8.0 * t * (one + 7.0 * t + 4.0 * t2);
    d.d1 = 8.0 * one - 9.0 * r3 * tm1_3 + 336.0 * t2 - 56.0 * t3 +
           22.0 * r2 * tm1_2 * (one + 2.0 * t) -
           24.0 * r * (one - 10.0 * t + 8.0 * t2 + t3);
    d.d2 = 9.0 * r3 * tm1_3 - 22.0 * r2 * (2.0 * one - 3.0 * t + t3) -
           8.0 * (-7.0 * one + 42.0 * t + t3) -
           24.0 * r * (one + 8.0 * t - 10.0 * t2 + t3);
    d.d3 = 22.0 * r2 * tm1_2 - 3.0 * r3 * tm1_3 - 24.0 * r * (-2.0 * one + t + t2) +
           8.0 * (4.0 * one + 7.0 * t + t2);

    if (verify) {
        // d(z) must reconstruct z^3 G(t, 1/z) away from z = 0.
        const Cplx zs[3] = {Cplx(1.7, 0.3), Cplx(-0.8, 1.1), Cplx(2.4, -0.9)};
        for (const Cplx& z : zs) {
            const Cplx lhs = ((d.d3 * z + d.d2) * z + d.d1) * z + d.d0;
            const Cplx rhs = z * z * z * eval_G(r, t, one / z);
            if (std::abs(lhs - rhs) > 1e-10 * (std::abs(lhs) + std::abs(rhs) + 1.0))
                throw NumericalError("d(z) reconstruction check failed");
        }
    }
    return d;
}

SchurCohnMatrix schur_cohn(const DCoeffs& dc) {
    const Cplx d[4] = {dc.d0, dc.d1, dc.d2, dc.d3};
    constexpr int m = 3;
    SchurCohnMatrix M{};
    for (int j = 1; j <= 3; ++j) {
        for (int k = j; k <= 3; ++k) {
            Cplx s(0.0, 0.0);
            for (int l = 1; l <= j; ++l)
                s += d[m - j + l] * std::conj(d[m - k + l]) -
                     std::conj(d[j - l]) * d[k - l];
            M[j - 1][k - 1] = s;
            M[k - 1][j - 1] = std::conj(s);
        }
    }
    return M;
}

namespace {

double det3_checked(const SchurCohnMatrix& M) {
    const Cplx det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                     M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                     M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
    // Hermitian determinant is real; near eta = 0 the determinant itself
    // vanishes like sin^12(eta/2), so the reality check carries an absolute
    // floor tied to the matrix scale on top of the relative bound.
    double frob = 0.0;
    for (const auto& row : M)
        for (const Cplx& e : row) frob += std::norm(e);
    frob = std::sqrt(frob);
    const double floor = 1e-10 * frob * frob * frob;
    if (std::abs(det.imag()) > 1e-8 * std::abs(det) + floor)
        throw NumericalError("Schur-Cohn determinant has non-negligible imaginary part");
    return det.real();
}

} // namespace

double det_M(double r, double eta) {
    return det3_checked(schur_cohn(d_coefficients(r, eta)));
}

double det_M_closed(double r, double eta) {
    const GnCoefficients gn = gn_coefficients();
    const double r2 = r * r;
    double s = 0.0;
    for (int n = 0; n <= 3; ++n) {
        double g = 0.0;
        for (int i = static_cast<int>(gn.g[n].size()) - 1; i >= 0; --i)
            g = g * r2 + to_double(gn.g[n][i]);
        s += g * std::cos(n * eta);
    }
    const double sn = std::sin(eta / 2.0);
    return -130459631616.0 * r * r * r * std::pow(sn, 12) * s;
}

GnCoefficients gn_coefficients() {
    GnCoefficients gn;
    gn.g[0] = {Rat(26624), Rat(-24672), Rat(15724), Rat(-2430)};
    gn.g[1] = {Rat(12288), Rat(22496), Rat(-20822), Rat(3645)};
    gn.g[2] = {Rat(-512), Rat(2208), Rat(5012), Rat(-1458)};
    gn.g[3] = {Rat(0), Rat(-32), Rat(86), Rat(243)};
    return gn;
}

Rat gn_sum_check() {
    const GnCoefficients gn = gn_coefficients();
    std::vector<Rat> sum(4, Rat(0));
    for (int n = 0; n <= 3; ++n)
        for (std::size_t i = 0; i < gn.g[n].size(); ++i) sum[i] += gn.g[n][i];
    for (std::size_t i = 1; i < sum.size(); ++i)
        if (sum[i] != 0) throw NumericalError("g_n sum is not constant in r");
    return sum[0];
}

ScanReport lqk_scan(double r, int grid_size, int threads) {
    if (grid_size < 16) throw std::invalid_argument("lqk_scan: grid_size >= 16 required");
    std::vector<double> dets(grid_size);
    const int t = resolve_threads(threads, grid_size);
    auto worker = [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i)
            dets[i] = det_M(r, 2.0 * kPi * i / grid_size);
    };
    if (t <= 1) {
        worker(0, grid_size);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (grid_size + t - 1) / t;
        for (int k = 0; k < t; ++k) {
            int lo = k * chunk, hi = std::min(grid_size, lo + chunk);
            if (lo < hi) pool.emplace_back(worker, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    // Serial reduction: deterministic for a fixed grid, first index wins ties.
    ScanReport report;
    report.r = r;
    report.grid_size = grid_size;
    int argmin = 0;
    for (int i = 1; i < grid_size; ++i)
        if (dets[i] < dets[argmin]) argmin = i;
    report.min_det = dets[argmin];
    report.argmin_eta = 2.0 * kPi * argmin / grid_size;
    report.witness_found = report.min_det < 0.0;
    return report;
}

std::pair<DomainPoint, DomainPoint> diagonal_zero_witness(int n) {
    if (n <= 3)
        throw DomainError("diagonal zero witness requires n >= 4 (interior point)");
    const double s = std::sqrt(3.0 / n);
    DomainPoint p, p2;
    p.z.assign(n, Cplx(0.0, 0.0));
    p2.z.assign(n, Cplx(0.0, 0.0));
    p.w1 = Cplx(0.0, s);
    p.w2 = Cplx(0.0, s);
    p2.w1 = Cplx(0.0, -s);
    p2.w2 = Cplx(0.0, -s);
    return {p, p2};
}

DomainPoint reduce_to_slice(const KernelParams& params, const DomainPoint& p) {
    if (!in_domain(params, p))
        throw DomainError("reduce_to_slice: point outside the open domain");
    const std::vector<Cplx>& a = p.z;
    double a_norm_sq = 0.0;
    for (const Cplx& ai : a) a_norm_sq += std::norm(ai);
    const double s = std::sqrt(1.0 - a_norm_sq);

    // <z, a> with z = a: just ||a||^2.
    const Cplx inner(a_norm_sq, 0.0);
    const Cplx denom = Cplx(1.0, 0.0) - inner;
    const Cplx factor = inner / (1.0 + s) - Cplx(1.0, 0.0);

    DomainPoint out;
    out.z.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out.z[i] = (factor * a[i] + a[i] * s) / denom;

    const double inv_q = 1.0 / to_double(params.q);
    const double inv_r = 1.0 / to_double(params.r);
    out.w1 = std::pow(1.0 - a_norm_sq, inv_q) / std::pow(denom, 2.0 * inv_q) * p.w1;
    out.w2 = std::pow(1.0 - a_norm_sq, inv_r) / std::pow(denom, 2.0 * inv_r) * p.w2;
    return out;
}

} // namespace bergkern
