#include "cnls/variational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace cnls {

double ScalingLine::K(double t) const {
    return t * t * g + c1 * std::pow(t, e1) * w1 - c2 * std::pow(t, e2) * w2;
}
double ScalingLine::dK(double t) const {
    return 2.0 * t * g + c1 * e1 * std::pow(t, e1 - 1.0) * w1 -
           c2 * e2 * std::pow(t, e2 - 1.0) * w2;
}
double ScalingLine::action(double t) const {
    return 0.5 * t * t * g + 0.5 * omega * mass + std::pow(t, e1) * w1 / p1 -
           std::pow(t, e2) * w2 / p2;
}
double ScalingLine::energy(double t) const { return action(t) - 0.5 * omega * mass; }
double ScalingLine::K_scale(double t) const {
    return t * t * g + c1 * std::pow(t, e1) * w1 + c2 * std::pow(t, e2) * w2;
}

ScalingLine scaling_line(const ModelParams& p, const RadialField& u) {
    const FunctionalReport rep = compute_functionals(p, u);
    ScalingLine s;
    s.g = rep.grad_sq;
    s.mass = rep.mass;
    s.w1 = rep.w1;
    s.w2 = rep.w2;
    s.e1 = p.e1();
    s.e2 = p.e2();
    s.c1 = p.c1();
    s.c2 = p.c2();
    s.p1 = p.p1;
    s.p2 = p.p2;
    s.omega = p.omega;
    return s;
}

ProjectionResult project_to_pohozaev(const ModelParams& p, const RadialField& u) {
    const ScalingLine s = scaling_line(p, u);
    ProjectionResult res;
    if (!(s.g > 0.0)) throw std::invalid_argument("project_to_pohozaev: zero field");
    if (!(s.w2 > 0.0)) {
        res.status = ProjectionStatus::no_projection;
        return res;
    }

    // K(u_t)/t^2 = g + c1 t^{e1-2} W1 - c2 t^{e2-2} W2 starts at g > 0 and
    // ends negative: bracket then safeguarded Newton on K itself.
    double t_hi = 1.0;
    while (s.K(t_hi) > 0.0) {
        t_hi *= 2.0;
        if (t_hi > 1e12) throw std::runtime_error("project_to_pohozaev: no sign change found");
    }
    double t_lo = t_hi * 0.5;
    while (s.K(t_lo) < 0.0) {
        t_lo *= 0.5;
        if (t_lo < 1e-12) throw std::runtime_error("project_to_pohozaev: no sign change found");
    }

    double t = 0.5 * (t_lo + t_hi);
    for (int it = 0; it < 200; ++it) {
        const double f = s.K(t);
        if (std::abs(f) <= 1e-10 * s.K_scale(t)) break;
        if (f > 0.0)
            t_lo = t;
        else
            t_hi = t;
        const double df = s.dK(t);
        double t_new = df != 0.0 ? t - f / df : 0.0;
        if (!(t_new > t_lo && t_new < t_hi)) t_new = 0.5 * (t_lo + t_hi);
        t = t_new;
    }

    res.t_u = t;
    res.k_residual = std::abs(s.K(t)) / s.K_scale(t);
    res.projected = scale_field(u, t).field;
    return res;
}

namespace {

// d S_w / d q against the mu-weighted inner product (real fields), using the
// same centered-difference gradient and midpoint quadrature as the reports.
struct Discrete {
    const ModelParams& p;
    const RadialGrid& g;

    // y = D q (centered, one-sided closure).
    std::vector<double> deriv(const std::vector<double>& q) const {
        return radial_derivative(g, q);
    }

    // z = D^T (mu .* y).
    std::vector<double> deriv_adjoint(const std::vector<double>& y) const {
        const int n = static_cast<int>(y.size());
        const double h = g.h();
        std::vector<double> z(n, 0.0);
        std::vector<double> my(n);
        for (int i = 0; i < n; ++i) my[i] = g.weight(i) * y[i];
        // rows: 0 -> (-3,4,-1)/2h at cols 0,1,2; i -> (-1,0,1)/2h at i-1,i+1;
        // n-1 -> (3,-4,1)/2h at n-1,n-2,n-3.
        z[0] += -3.0 / (2.0 * h) * my[0];
        z[1] += 4.0 / (2.0 * h) * my[0];
        z[2] += -1.0 / (2.0 * h) * my[0];
        for (int i = 1; i + 1 < n; ++i) {
            z[i - 1] += -1.0 / (2.0 * h) * my[i];
            z[i + 1] += 1.0 / (2.0 * h) * my[i];
        }
        z[n - 1] += 3.0 / (2.0 * h) * my[n - 1];
        z[n - 2] += -4.0 / (2.0 * h) * my[n - 1];
        z[n - 3] += 1.0 / (2.0 * h) * my[n - 1];
        return z;
    }

    // Euclidean-in-mu gradient of S_w at q.
    std::vector<double> grad_action(const std::vector<double>& q) const {
        const int n = static_cast<int>(q.size());
        const auto dq = deriv(q);
        auto z = deriv_adjoint(dq); // d(grad_sq)/dq / 2
        std::vector<double> out(n);
        for (int i = 0; i < n; ++i) {
            const double r = g.node(i);
            const double nl = std::pow(r, -p.b1) * std::pow(std::abs(q[i]), p.p1 - 2.0) * q[i] -
                              std::pow(r, -p.b2) * std::pow(std::abs(q[i]), p.p2 - 2.0) * q[i];
            out[i] = z[i] / g.weight(i) + p.omega * q[i] + nl;
        }
        return out;
    }

    double inner(const std::vector<double>& a, const std::vector<double>& b) const {
        double acc = 0.0;
        for (size_t i = 0; i < a.size(); ++i) acc += g.weight(i) * a[i] * b[i];
        return acc;
    }

    // Solves (A + shift) d = rhs with A the conservative radial -Laplacian
    // (natural condition at the origin, Dirichlet wall); Thomas algorithm.
    std::vector<double> precondition(const std::vector<double>& rhs, double shift) const {
        const int n = static_cast<int>(rhs.size());
        const double h = g.h();
        std::vector<double> dl(n, 0.0), dg(n, 0.0), du(n, 0.0);
        for (int i = 0; i < n; ++i) {
            const double rN = std::pow(g.node(i), g.dim() - 1);
            const double cl = i > 0 ? std::pow(i * h, g.dim() - 1) / (rN * h * h) : 0.0;
            double cr = std::pow((i + 1) * h, g.dim() - 1) / (rN * h * h);
            dg[i] = cl + cr + shift;
            if (i + 1 < n)
                du[i] = -cr;
            else
                dg[i] += cr; // ghost u_n = -u_{n-1}
            if (i > 0) dl[i] = -cl;
        }
        std::vector<double> c(n), d(n), x(n);
        c[0] = du[0] / dg[0];
        d[0] = rhs[0] / dg[0];
        for (int i = 1; i < n; ++i) {
            const double m = dg[i] - dl[i] * c[i - 1];
            c[i] = i + 1 < n ? du[i] / m : 0.0;
            d[i] = (rhs[i] - dl[i] * d[i - 1]) / m;
        }
        x[n - 1] = d[n - 1];
        for (int i = n - 2; i >= 0; --i) x[i] = d[i] - c[i] * x[i + 1];
        return x;
    }
};

std::vector<double> real_part(const RadialField& u) {
    std::vector<double> q(u.size());
    for (int i = 0; i < u.size(); ++i) q[i] = u[i].real();
    return q;
}

RadialField to_field(const GridPtr& grid, const std::vector<double>& q) {
    std::vector<cplx> v(q.size());
    for (size_t i = 0; i < q.size(); ++i) v[i] = cplx{q[i], 0.0};
    return RadialField(grid, std::move(v));
}

} // namespace

MinimizeResult minimize_action(const ModelParams& p, const RadialField& seed,
                               const MinimizeOptions& opts) {
    const GridPtr grid = seed.grid_ptr();
    const Discrete disc{p, *grid};
    const double shift = p.omega > 0.0 ? p.omega : 1e-8;

    MinimizeResult res;

    ProjectionResult proj = project_to_pohozaev(p, seed);
    if (proj.status != ProjectionStatus::ok)
        throw std::invalid_argument("minimize_action: seed has W2 = 0, nothing to project onto");
    std::vector<double> q = real_part(proj.projected);

    auto action_of = [&](const std::vector<double>& x) {
        return compute_functionals(p, to_field(grid, x)).action;
    };

    double S = action_of(q);
    double ref_grad_norm = -1.0;

    for (int it = 0; it < opts.max_iters; ++it) {
        res.iters = it + 1;
        if (opts.record_trace) res.trace.push_back(S);

        const auto grad = disc.grad_action(q);
        const auto dir = disc.precondition(grad, shift);
        const double g_dot_d = disc.inner(grad, dir);
        const double dir_norm = std::sqrt(std::max(disc.inner(dir, dir), 0.0));
        if (ref_grad_norm < 0.0) ref_grad_norm = std::max(dir_norm, 1e-30);

        // Projected-gradient norm: component of the (preconditioned) descent
        // direction tangent to {K = 0}.
        {
            ScalingLine sl = scaling_line(p, to_field(grid, q));
            // dK along dir via the discrete K gradient.
            const int n = static_cast<int>(q.size());
            std::vector<double> kg(n);
            const auto z = disc.deriv_adjoint(disc.deriv(q));
            for (int i = 0; i < n; ++i) {
                const double r = grid->node(i);
                kg[i] = 2.0 * z[i] / grid->weight(i) +
                        sl.c1 * p.p1 * std::pow(r, -p.b1) * std::pow(std::abs(q[i]), p.p1 - 2.0) * q[i] -
                        sl.c2 * p.p2 * std::pow(r, -p.b2) * std::pow(std::abs(q[i]), p.p2 - 2.0) * q[i];
            }
            const double kk = disc.inner(kg, kg);
            double tang_sq = disc.inner(dir, dir);
            if (kk > 0.0) {
                const double along = disc.inner(dir, kg);
                tang_sq -= along * along / kk;
            }
            res.projected_grad_norm = std::sqrt(std::max(tang_sq, 0.0));
            if (res.projected_grad_norm <= opts.grad_tol * ref_grad_norm) {
                res.converged = true;
                break;
            }
        }

        double step = 1.0;
        bool accepted = false;
        for (int bt = 0; bt < opts.max_backtracks; ++bt) {
            std::vector<double> trial(q.size());
            for (size_t i = 0; i < q.size(); ++i) trial[i] = q[i] - step * dir[i];
            ProjectionResult pr = project_to_pohozaev(p, to_field(grid, trial));
            if (pr.status == ProjectionStatus::ok) {
                std::vector<double> cand = real_part(pr.projected);
                const double S_new = action_of(cand);
                if (S_new <= S - opts.armijo * step * g_dot_d) {
                    q = std::move(cand);
                    S = S_new;
                    accepted = true;
                    break;
                }
            }
            step *= 0.5;
        }
        if (!accepted) {
            // Descent stalled at line-search resolution: treat as converged if
            // the projected gradient is already small, else keep going with a
            // tiny step to escape a flat spot.
            res.converged = res.projected_grad_norm <= 1e2 * opts.grad_tol * ref_grad_norm;
            break;
        }
    }

    res.m_omega = S;
    res.minimizer = to_field(grid, q);
    if (!res.converged && res.iters >= opts.max_iters)
        throw std::runtime_error("nonconvergence: minimize_action hit the iteration cap");
    return res;
}

RadialField random_gaussian_seed(const GridPtr& grid, std::uint64_t rng_seed) {
    std::mt19937_64 rng(rng_seed);
    std::uniform_real_distribution<double> amp(0.5, 3.0);
    std::uniform_real_distribution<double> width(0.6, 3.0);
    const double a = amp(rng), sigma = width(rng);
    return sample_real_field(grid, [&](double r) { return a * std::exp(-r * r / (sigma * sigma)); });
}

const char* to_string(DataLabel l) {
    switch (l) {
        case DataLabel::a_plus: return "A-plus";
        case DataLabel::a_minus: return "A-minus";
        case DataLabel::above_threshold: return "above-threshold";
        case DataLabel::on_manifold: return "on-manifold";
    }
    return "?";
}

DataClass classify_data(const ModelParams& p, const RadialField& u0, double m_omega,
                        const ClassifyOptions& opts) {
    const FunctionalReport rep = compute_functionals(p, u0);
    DataClass dc{};
    dc.s_omega = rep.action;
    dc.m_omega = m_omega;
    dc.k_value = rep.pohozaev;

    const bool k_zero = std::abs(rep.pohozaev) <= opts.k_tol * rep.grad_sq;
    const bool s_at_m = std::abs(rep.action - m_omega) <= opts.s_tol * std::abs(m_omega);
    if (k_zero && s_at_m) {
        dc.label = DataLabel::on_manifold;
    } else if (rep.action >= m_omega) {
        dc.label = DataLabel::above_threshold;
    } else {
        dc.label = rep.pohozaev < 0.0 ? DataLabel::a_minus : DataLabel::a_plus;
    }
    return dc;
}

ConcavityReport action_concavity_check(const ModelParams& p, const RadialField& u, int samples) {
    const ScalingLine s = scaling_line(p, u);
    if (!(s.w2 > 0.0)) throw std::invalid_argument("action_concavity_check: W2 = 0");

    ProjectionResult proj = project_to_pohozaev(p, u);
    ConcavityReport rep{};
    rep.t_u = proj.t_u;

    const double lo = proj.t_u, hi = 4.0 * proj.t_u;
    const double dt = (hi - lo) / (samples - 1);
    double max_dd = -std::numeric_limits<double>::infinity();
    const double e_at_tu = s.energy(proj.t_u);
    bool max_at_tu = true;
    for (int i = 0; i < samples; ++i) {
        const double t = lo + i * dt;
        if (s.energy(t) > e_at_tu + 1e-12 * std::abs(e_at_tu)) max_at_tu = false;
        if (i >= 1 && i + 1 < samples) {
            const double dd = s.energy(t + dt) - 2.0 * s.energy(t) + s.energy(t - dt);
            max_dd = std::max(max_dd, dd / (dt * dt));
        }
    }
    // Also confirm t_u is the global maximum over a wide sweep below t_u.
    for (int i = 1; i <= 64; ++i) {
        const double t = proj.t_u * i / 65.0;
        if (s.energy(t) > e_at_tu + 1e-12 * std::abs(e_at_tu)) max_at_tu = false;
    }
    rep.max_second_difference = max_dd;
    rep.max_at_tu = max_at_tu;

    const double fd = 1e-5;
    const double dEdt = (s.energy(1.0 + fd) - s.energy(1.0 - fd)) / (2.0 * fd);
    rep.k_vs_dEdt_rel_err = std::abs(dEdt - s.K(1.0)) / std::max(1.0, std::abs(s.K(1.0)));
    return rep;
}

} // namespace cnls
