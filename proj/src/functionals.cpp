#include "cnls/functionals.hpp"

#include <cmath>
#include <stdexcept>

namespace cnls {

double weighted_lp(const RadialField& u, double b, double p) {
    const RadialGrid& g = u.grid();
    if (b >= g.dim()) throw std::domain_error("divergent-weight: b >= N");
    if (b < 0.0 || p < 1.0) throw std::domain_error("weighted_lp: need 0 <= b < N, p >= 1");
    double acc = 0.0;
    for (int i = 0; i < u.size(); ++i) {
        const double m = std::abs(u[i]);
        if (m == 0.0) continue;
        acc += g.weight(i) * std::pow(g.node(i), -b) * std::pow(m, p);
    }
    return acc;
}

FunctionalReport compute_functionals(const ModelParams& p, const RadialField& u) {
    const RadialGrid& g = u.grid();
    FunctionalReport rep;

    const auto du = radial_derivative(u);
    for (int i = 0; i < u.size(); ++i) {
        rep.mass += g.weight(i) * std::norm(u[i]);
        rep.grad_sq += g.weight(i) * std::norm(du[i]);
    }
    rep.w1 = weighted_lp(u, p.b1, p.p1);
    rep.w2 = weighted_lp(u, p.b2, p.p2);

    rep.energy = 0.5 * rep.grad_sq + rep.w1 / p.p1 - rep.w2 / p.p2;
    rep.action = rep.energy + 0.5 * p.omega * rep.mass;
    rep.pohozaev = rep.grad_sq + p.c1() * rep.w1 - p.c2() * rep.w2;
    rep.i_omega = rep.action - rep.pohozaev / (p.e1());

    const int n = u.size();
    rep.tail_mass_estimate = std::norm(u[n - 1]) * std::pow(g.r_max(), g.dim() - 1) * g.h();
    return rep;
}

ScaledField scale_field(const RadialField& u, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("scale_field: t > 0 required");
    const RadialGrid& g = u.grid();
    const int n = u.size();
    const double amp = std::pow(t, 0.5 * g.dim());

    ScaledField out;
    out.field = RadialField(u.grid_ptr());
    for (int i = 0; i < n; ++i) {
        const double rho = t * g.node(i);
        cplx val{0.0, 0.0};
        if (rho <= g.node(0)) {
            val = u[0]; // radial regularity: flat extension below the first node
        } else if (rho < g.node(n - 1)) {
            const double x = rho / g.h() - 0.5;
            const int j = static_cast<int>(x);
            const double f = x - j;
            val = (1.0 - f) * u[j] + f * u[j + 1];
        } else if (rho <= g.r_max()) {
            val = u[n - 1];
        }
        out.field[i] = amp * val;
    }

    double m0 = 0.0, m1 = 0.0;
    for (int i = 0; i < n; ++i) {
        m0 += g.weight(i) * std::norm(u[i]);
        m1 += g.weight(i) * std::norm(out.field[i]);
    }
    out.resolution_loss = (m0 > 0.0) && (std::abs(m1 - m0) > 1e-3 * m0);
    return out;
}

double x_norm(const ModelParams& p, const RadialField& u) {
    if (p.N < 3) throw std::domain_error("x_norm: the zero-frequency space needs N >= 3");
    const RadialGrid& g = u.grid();
    const auto du = radial_derivative(u);
    double gsq = 0.0;
    for (int i = 0; i < u.size(); ++i) gsq += g.weight(i) * std::norm(du[i]);
    return std::sqrt(gsq) + std::pow(weighted_lp(u, p.b1, p.p1), 1.0 / p.p1);
}

double gn_quotient(const RadialField& u, double b, double p) {
    const RadialGrid& g = u.grid();
    const auto du = radial_derivative(u);
    double gsq = 0.0, msq = 0.0;
    for (int i = 0; i < u.size(); ++i) {
        gsq += g.weight(i) * std::norm(du[i]);
        msq += g.weight(i) * std::norm(u[i]);
    }
    if (msq == 0.0) throw std::domain_error("undefined-quotient: zero field");
    const double num = weighted_lp(u, b, p);
    const double s = 0.5 * g.dim() * (p - 2.0) + b;
    return num / (std::pow(std::sqrt(gsq), s) * std::pow(std::sqrt(msq), p - s));
}

} // namespace cnls
