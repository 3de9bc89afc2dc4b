#include "cnls/pohozaev_j.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cnls {

JCoefficients::JCoefficients(const ModelParams& p) {
    const double N = p.N, b1 = p.b1, b2 = p.b2, p1 = p.p1, p2 = p.p2;
    omega_ = p.omega;
    b2_ = b2;
    alpha_ = (2.0 * b1 + 2.0 * (N - 1.0) * p1) / (p1 + 2.0);
    cB_ = (2.0 * (N - 1.0) - b1) / (p1 + 2.0);
    cC_ = (2.0 * (N - 1.0) - b1) * (2.0 * (N - b1) - p1 * (N - 2.0)) /
          ((p1 + 2.0) * (p1 + 2.0));
    cG1_ = ((N - 1.0) * (2.0 - p1) - 2.0 * b1) / (p1 + 2.0);
    cG2_ = (2.0 * (N - 1.0) - b1) * (2.0 * (N - b1) - p1 * (N - 2.0)) *
           ((b1 - 2.0) + (N - 2.0) * p1) / std::pow(p1 + 2.0, 3);
    cH_ = -((2.0 * (N - 1.0) - b1) / (p1 + 2.0) -
            (2.0 * b1 + 2.0 * (N - 1.0) * p1) / (p2 * (p1 + 2.0)) + b2 / p2);
}

double j_quantity(const ModelParams& p, double r, double u, double ur) {
    if (!(r > 0.0)) throw std::invalid_argument("j_quantity: r > 0 required");
    const JCoefficients c(p);
    const double au = std::abs(u);
    return 0.5 * c.A(r) * ur * ur + c.B(r) * ur * u + 0.5 * c.C(r) * u * u +
           c.A(r) * std::pow(r, -p.b2) * std::pow(au, p.p2) / p.p2 -
           c.A(r) * std::pow(r, -p.b1) * std::pow(au, p.p1) / p.p1;
}

DjIdentityReport dj_identity_residual(const ModelParams& p, const ProfileWithDeriv& q) {
    const RadialGrid& g = *q.grid;
    const int n = g.n();
    const JCoefficients c(p);

    DjIdentityReport rep;
    rep.j_samples.resize(n);
    for (int i = 0; i < n; ++i) rep.j_samples[i] = j_quantity(p, g.node(i), q.u[i], q.ur[i]);

    double num = 0.0, den = 0.0;
    for (int i = 1; i + 1 < n; ++i) {
        const double r = g.node(i);
        const double dj_fd = (rep.j_samples[i + 1] - rep.j_samples[i - 1]) / (2.0 * g.h());
        const double rhs =
            c.G(r) * q.u[i] * q.u[i] + c.H(r) * std::pow(std::abs(q.u[i]), p.p2);
        num = std::max(num, std::abs(dj_fd - rhs));
        den = std::max(den, std::abs(rhs));
    }
    rep.rhs_scale = den;
    rep.residual = den > 0.0 ? num / den : num;
    return rep;
}

UniquenessCondition uniqueness_condition(const ModelParams& p) {
    const double N = p.N;
    UniquenessCondition u{};
    u.lhs_main = (2.0 * (N - 1.0) - p.b1) / (p.p1 + 2.0) -
                 (2.0 * p.b1 + 2.0 * (N - 1.0) * p.p1) / (p.p2 * (p.p1 + 2.0)) + p.b2 / p.p2;
    u.lhs_swapped = (2.0 * (N - 1.0) - p.b2) / (p.p2 + 2.0) -
                    (2.0 * p.b2 + 2.0 * (N - 1.0) * p.p2) / (p.p1 * (p.p2 + 2.0)) + p.b1 / p.p1;
    u.holds_main = u.lhs_main <= 0.0;
    u.holds_swapped = u.lhs_swapped >= 0.0;
    return u;
}

JScan sign_scan(const ModelParams& p, const ProfileWithDeriv& q) {
    const RadialGrid& g = *q.grid;
    const int n = g.n();
    const JCoefficients c(p);

    JScan scan;
    scan.nonneg_expected = uniqueness_condition(p).holds_main;
    scan.r.resize(n);
    scan.j.resize(n);
    scan.dj_analytic.resize(n);
    double min_j = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        const double r = g.node(i);
        scan.r[i] = r;
        scan.j[i] = j_quantity(p, r, q.u[i], q.ur[i]);
        scan.dj_analytic[i] =
            c.G(r) * q.u[i] * q.u[i] + c.H(r) * std::pow(std::abs(q.u[i]), p.p2);
        min_j = std::min(min_j, scan.j[i]);
    }
    scan.min_j = min_j;

    int changes = 0;
    for (int i = 1; i < n; ++i)
        if (scan.dj_analytic[i - 1] != 0.0 && scan.dj_analytic[i] * scan.dj_analytic[i - 1] < 0.0)
            ++changes;
    scan.dj_sign_changes = changes;
    scan.dj_unique_zero = changes == 1;

    scan.identity_residual = dj_identity_residual(p, q).residual;
    return scan;
}

} // namespace cnls
