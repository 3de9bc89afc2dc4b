#include "cnls/shooting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace cnls {

const char* to_string(ShootOutcome o) {
    switch (o) {
        case ShootOutcome::crossed_zero: return "crossed-zero";
        case ShootOutcome::turned_upward: return "turned-upward";
        case ShootOutcome::decayed: return "decayed";
        case ShootOutcome::undecided: return "undecided";
    }
    return "?";
}

namespace {

// |u|^{q} sign(u); keeps the vector field odd in u across a zero crossing.
inline double signed_pow(double u, double q) {
    return u >= 0.0 ? std::pow(u, q) : -std::pow(-u, q);
}

struct Rhs {
    int N;
    double omega, b1, b2, p1, p2, s1, s2;

    void operator()(double r, double u, double v, double& du, double& dv) const {
        du = v;
        dv = -(N - 1) / r * v + omega * u + s1 * std::pow(r, -b1) * signed_pow(u, p1 - 1.0) -
             s2 * std::pow(r, -b2) * signed_pow(u, p2 - 1.0);
    }
};

Rhs make_rhs(const ModelParams& p, double s1, double s2) {
    return Rhs{p.N, p.omega, p.b1, p.b2, p.p1, p.p2, s1, s2};
}

struct Classifier {
    double a;
    double threshold; // decay_threshold * a
    bool seen_negative_v = false;
    int node_count = 0;
    double prev_u;

    explicit Classifier(double a_, double thr) : a(a_), threshold(thr * a_), prev_u(a_) {}

    // Returns an outcome once one is resolved.
    std::optional<ShootOutcome> check(double /*r*/, double u, double v) {
        if (u <= 0.0) {
            ++node_count;
            return ShootOutcome::crossed_zero;
        }
        if (v < 0.0) seen_negative_v = true;
        if (std::abs(u) < threshold && std::abs(v) < threshold) return ShootOutcome::decayed;
        if (v > 0.0 && u > threshold && (seen_negative_v || u > a * (1.0 + 1e-9)))
            return ShootOutcome::turned_upward;
        prev_u = u;
        return std::nullopt;
    }
};

// Dormand-Prince 5(4) tableau.
constexpr double A21 = 1.0 / 5;
constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187, A53 = 64448.0 / 6561,
                 A54 = -212.0 / 729;
constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247, A64 = 49.0 / 176,
                 A65 = -5103.0 / 18656;
constexpr double B1 = 35.0 / 384, B3 = 500.0 / 1113, B4 = 125.0 / 192, B5 = -2187.0 / 6784,
                 B6 = 11.0 / 84;
constexpr double E1 = 35.0 / 384 - 5179.0 / 57600, E3 = 500.0 / 1113 - 7571.0 / 16695,
                 E4 = 125.0 / 192 - 393.0 / 640, E5 = -2187.0 / 6784 + 92097.0 / 339200,
                 E6 = 11.0 / 84 - 187.0 / 2100, E7 = -1.0 / 40;

double seed_radius(const ShootOptions& opts) {
    const double cell = opts.first_cell > 0.0 ? opts.first_cell : opts.r_stop / 8192.0;
    return opts.r0_frac * cell;
}

} // namespace

std::pair<double, double> local_expansion(const ModelParams& p, double a, double r,
                                          double nl1_scale, double nl2_scale) {
    if (p.b1 >= 2.0 || p.b1 >= p.N || p.b2 >= 2.0 || p.b2 >= p.N)
        throw std::domain_error("local_expansion: needs b_j < min{2, N}");
    const double k1 = nl1_scale * std::pow(a, p.p1 - 1.0) / ((2.0 - p.b1) * (p.N - p.b1));
    const double k2 = nl2_scale * std::pow(a, p.p2 - 1.0) / ((2.0 - p.b2) * (p.N - p.b2));
    const double u = a + p.omega * a * r * r / (2.0 * p.N) + k1 * std::pow(r, 2.0 - p.b1) -
                     k2 * std::pow(r, 2.0 - p.b2);
    const double ur = p.omega * a * r / p.N + k1 * (2.0 - p.b1) * std::pow(r, 1.0 - p.b1) -
                      k2 * (2.0 - p.b2) * std::pow(r, 1.0 - p.b2);
    return {u, ur};
}

double ode_residual(const ModelParams& p, double r, double u, double ur, double urr,
                    double nl1_scale, double nl2_scale) {
    return urr + (p.N - 1) / r * ur - p.omega * u +
           nl2_scale * std::pow(r, -p.b2) * signed_pow(u, p.p2 - 1.0) -
           nl1_scale * std::pow(r, -p.b1) * signed_pow(u, p.p1 - 1.0);
}

ShootTrajectory integrate_trajectory(const ModelParams& p, double a, const ShootOptions& opts) {
    if (!(a > 0.0)) throw std::invalid_argument("integrate_trajectory: a > 0 required");
    const Rhs rhs = make_rhs(p, opts.nl1_scale, opts.nl2_scale);

    ShootTrajectory traj;
    traj.a = a;

    double r = seed_radius(opts);
    auto [u, v] = local_expansion(p, a, r, opts.nl1_scale, opts.nl2_scale);
    const double atol = 1e-14 * a;

    Classifier cls(a, opts.decay_threshold);
    traj.samples.push_back({r, u, v});

    double dr = r; // gentle start; the controller adapts quickly
    double k1u, k1v;
    rhs(r, u, v, k1u, k1v);

    for (long step = 0; step < opts.max_steps; ++step) {
        if (r >= opts.r_stop) break;
        dr = std::min(dr, opts.r_stop - r);
        if (dr < 1e-15 * std::max(1.0, r)) {
            std::ostringstream os;
            os << "stiff-failure: step underflow at r=" << r << " u=" << u << " ur=" << v;
            throw std::runtime_error(os.str());
        }

        double k2u, k2v, k3u, k3v, k4u, k4v, k5u, k5v, k6u, k6v, k7u, k7v;
        const double r2 = r + dr / 5.0;
        rhs(r2, u + dr * A21 * k1u, v + dr * A21 * k1v, k2u, k2v);
        const double r3 = r + 0.3 * dr;
        rhs(r3, u + dr * (A31 * k1u + A32 * k2u), v + dr * (A31 * k1v + A32 * k2v), k3u, k3v);
        const double r4 = r + 0.8 * dr;
        rhs(r4, u + dr * (A41 * k1u + A42 * k2u + A43 * k3u),
            v + dr * (A41 * k1v + A42 * k2v + A43 * k3v), k4u, k4v);
        const double r5 = r + 8.0 / 9.0 * dr;
        rhs(r5, u + dr * (A51 * k1u + A52 * k2u + A53 * k3u + A54 * k4u),
            v + dr * (A51 * k1v + A52 * k2v + A53 * k3v + A54 * k4v), k5u, k5v);
        const double r6 = r + dr;
        rhs(r6, u + dr * (A61 * k1u + A62 * k2u + A63 * k3u + A64 * k4u + A65 * k5u),
            v + dr * (A61 * k1v + A62 * k2v + A63 * k3v + A64 * k4v + A65 * k5v), k6u, k6v);

        const double u_new = u + dr * (B1 * k1u + B3 * k3u + B4 * k4u + B5 * k5u + B6 * k6u);
        const double v_new = v + dr * (B1 * k1v + B3 * k3v + B4 * k4v + B5 * k5v + B6 * k6v);
        rhs(r + dr, u_new, v_new, k7u, k7v);

        const double eu = dr * (E1 * k1u + E3 * k3u + E4 * k4u + E5 * k5u + E6 * k6u + E7 * k7u);
        const double ev = dr * (E1 * k1v + E3 * k3v + E4 * k4v + E5 * k5v + E6 * k6v + E7 * k7v);
        const double su = atol + opts.rtol * std::max(std::abs(u), std::abs(u_new));
        const double sv = atol + opts.rtol * std::max(std::abs(v), std::abs(v_new));
        const double err = std::sqrt(0.5 * ((eu / su) * (eu / su) + (ev / sv) * (ev / sv)));

        if (err <= 1.0) {
            r += dr;
            u = u_new;
            v = v_new;
            k1u = k7u; // FSAL
            k1v = k7v;
            traj.samples.push_back({r, u, v});
            if (auto out = cls.check(r, u, v)) {
                traj.outcome = *out;
                traj.r_stop = r;
                traj.node_count = cls.node_count;
                return traj;
            }
        }
        const double fac = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
        dr *= std::clamp(fac, 0.2, 5.0);
    }

    traj.r_stop = r;
    traj.node_count = cls.node_count;
    traj.outcome = (std::abs(u) < opts.decay_threshold * a && std::abs(v) < opts.decay_threshold * a)
                       ? ShootOutcome::decayed
                       : ShootOutcome::undecided;
    return traj;
}

ShootTrajectory integrate_trajectory_rk4(const ModelParams& p, double a, const ShootOptions& opts,
                                         double dr) {
    if (!(a > 0.0) || !(dr > 0.0)) throw std::invalid_argument("integrate_trajectory_rk4: bad input");
    const Rhs rhs = make_rhs(p, opts.nl1_scale, opts.nl2_scale);

    ShootTrajectory traj;
    traj.a = a;

    double r = seed_radius(opts);
    auto [u, v] = local_expansion(p, a, r, opts.nl1_scale, opts.nl2_scale);
    Classifier cls(a, opts.decay_threshold);
    traj.samples.push_back({r, u, v});

    // Geometric ramp from the seed radius up to the requested uniform step.
    double step = std::min(dr, r);
    while (r < opts.r_stop) {
        const double hh = std::min(step, opts.r_stop - r);
        double k1u, k1v, k2u, k2v, k3u, k3v, k4u, k4v;
        rhs(r, u, v, k1u, k1v);
        rhs(r + 0.5 * hh, u + 0.5 * hh * k1u, v + 0.5 * hh * k1v, k2u, k2v);
        rhs(r + 0.5 * hh, u + 0.5 * hh * k2u, v + 0.5 * hh * k2v, k3u, k3v);
        rhs(r + hh, u + hh * k3u, v + hh * k3v, k4u, k4v);
        u += hh / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        v += hh / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        r += hh;
        traj.samples.push_back({r, u, v});
        if (auto out = cls.check(r, u, v)) {
            traj.outcome = *out;
            traj.r_stop = r;
            traj.node_count = cls.node_count;
            return traj;
        }
        if (step < dr) step = std::min(dr, step * 1.25);
    }
    traj.r_stop = r;
    traj.node_count = cls.node_count;
    traj.outcome = (std::abs(u) < opts.decay_threshold * a && std::abs(v) < opts.decay_threshold * a)
                       ? ShootOutcome::decayed
                       : ShootOutcome::undecided;
    return traj;
}

std::optional<Bracket> find_bracket(const ModelParams& p, const ShootOptions& opts, double a0,
                                    int max_doublings) {
    std::optional<double> last_turned, first_crossed;
    bool monotone = true;
    ShootOutcome prev = ShootOutcome::undecided;
    for (int k = 0; k <= max_doublings; ++k) {
        const double a = a0 * std::pow(2.0, k);
        const ShootOutcome out = integrate_trajectory(p, a, opts).outcome;
        if (out == ShootOutcome::turned_upward) {
            if (first_crossed) monotone = false; // crossed below a turned height
            last_turned = a;
        } else if (out == ShootOutcome::crossed_zero) {
            if (!first_crossed) first_crossed = a;
        } else if (out == ShootOutcome::decayed || out == ShootOutcome::undecided) {
            // Scan landed on (numerically) the separatrix: bracket tightly.
            return Bracket{a * (1.0 - 1e-6), a * (1.0 + 1e-6), monotone};
        }
        if (last_turned && first_crossed && *first_crossed == 2.0 * *last_turned)
            return Bracket{*last_turned, *first_crossed, monotone};
        prev = out;
        (void)prev;
    }
    if (last_turned && first_crossed && *last_turned < *first_crossed)
        return Bracket{*last_turned, *first_crossed, monotone};
    return std::nullopt;
}

namespace {

// Cubic Hermite interpolation of (u, u_r) between trajectory samples.
struct HermiteSampler {
    const std::vector<ShootSample>& s;
    size_t j = 0;

    explicit HermiteSampler(const std::vector<ShootSample>& samples) : s(samples) {}

    // Requires queries with nondecreasing r inside [s.front().r, s.back().r].
    std::pair<double, double> operator()(double r) {
        while (j + 2 < s.size() && s[j + 1].r < r) ++j;
        const auto& l = s[j];
        const auto& g = s[j + 1];
        const double w = g.r - l.r;
        const double t = std::clamp((r - l.r) / w, 0.0, 1.0);
        const double t2 = t * t, t3 = t2 * t;
        const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t, h01 = -2 * t3 + 3 * t2,
                     h11 = t3 - t2;
        const double u = h00 * l.u + h10 * w * l.ur + h01 * g.u + h11 * w * g.ur;
        const double d00 = 6 * t2 - 6 * t, d10 = 3 * t2 - 4 * t + 1, d01 = -6 * t2 + 6 * t,
                     d11 = 3 * t2 - 2 * t;
        const double ur = (d00 * l.u + d01 * g.u) / w + d10 * l.ur + d11 * g.ur;
        return {u, ur};
    }
};

// Radius where the trajectory leaves the decaying corridor: past it the
// unstable mode dominates and the analytic far field is more trustworthy.
double graft_radius_of(const ShootTrajectory& traj, const ModelParams& p) {
    const double vscale = std::max(1.0, std::sqrt(std::max(p.omega, 0.0)));
    double best = traj.samples.front().r;
    double best_val = std::numeric_limits<double>::infinity();
    for (const auto& s : traj.samples) {
        if (s.u <= 0.0) break;
        const double val = s.u + std::abs(s.ur) / vscale;
        if (val < best_val) {
            best_val = val;
            best = s.r;
        }
    }
    return best;
}

struct TailModel {
    // omega > 0: u = c (r0/r)^{(N-1)/2} exp(-sqrt(omega)(r - r0))
    // omega = 0: u = c (r0/r)^{beta}
    double r0, c;
    double rate;  // sqrt(omega) or 0
    double power; // (N-1)/2 or beta
    double value(double r) const {
        return c * std::pow(r0 / r, power) * std::exp(-rate * (r - r0));
    }
    double deriv(double r) const { return value(r) * (-power / r - rate); }
};

TailModel make_tail(const ModelParams& p, double r0, double u0) {
    TailModel t{};
    t.r0 = r0;
    t.c = u0;
    if (p.omega > 0.0) {
        t.rate = std::sqrt(p.omega);
        t.power = 0.5 * (p.N - 1);
    } else {
        t.rate = 0.0;
        t.power = p.decay_beta();
    }
    return t;
}

// Conservative finite-volume radial Laplacian applied to real samples.
std::vector<double> fv_laplacian(const RadialGrid& g, const std::vector<double>& q) {
    const int n = g.n();
    const double h = g.h();
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
        const double rl = i * h, rr = (i + 1) * h;
        const double cl = i > 0 ? std::pow(rl, g.dim() - 1) : 0.0;
        const double cr = std::pow(rr, g.dim() - 1);
        const double flux_r = (i + 1 < n) ? cr * (q[i + 1] - q[i]) / h : cr * (-2.0 * q[i]) / h;
        const double flux_l = i > 0 ? cl * (q[i] - q[i - 1]) / h : 0.0;
        out[i] = (flux_r - flux_l) / (std::pow(g.node(i), g.dim() - 1) * h);
    }
    return out;
}

} // namespace

GroundState shoot(const ModelParams& p, const GridPtr& grid, const ShootOptions& opts_in,
                  std::optional<Bracket> bracket) {
    if (p.omega < 0.0)
        throw std::invalid_argument("shoot: omega >= 0 required (no H^1_rad solutions otherwise)");

    ShootOptions opts = opts_in;
    opts.r_stop = grid->r_max();
    opts.first_cell = grid->node(0);

    if (!bracket) {
        bracket = find_bracket(p, opts);
        if (!bracket)
            throw std::runtime_error("shoot: no (turned-upward, crossed-zero) bracket found");
    } else {
        const auto lo = integrate_trajectory(p, bracket->a_lo, opts).outcome;
        const auto hi = integrate_trajectory(p, bracket->a_hi, opts).outcome;
        if (lo != ShootOutcome::turned_upward || hi != ShootOutcome::crossed_zero)
            throw std::invalid_argument("bad-bracket: endpoints must be (turned-upward, crossed-zero)");
    }

    double lo = bracket->a_lo, hi = bracket->a_hi;
    ShootTrajectory final_traj;
    bool have_final = false;

    // Bisect to 1e-12 relative width, then keep halving (down to the double
    // resolution floor) until the midpoint trajectory actually decays; the
    // deeper iterations only improve the usable range of the profile.
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        ShootTrajectory t = integrate_trajectory(p, mid, opts);
        if (t.outcome == ShootOutcome::turned_upward) {
            lo = mid;
        } else if (t.outcome == ShootOutcome::crossed_zero) {
            hi = mid;
        } else {
            final_traj = std::move(t);
            have_final = true;
            break;
        }
        const double width = (hi - lo) / hi;
        if (width <= 1e-12 && have_final) break;
        if (width <= 4.0 * std::numeric_limits<double>::epsilon()) break;
    }

    const double a_star = 0.5 * (lo + hi);
    if (!have_final) final_traj = integrate_trajectory(p, a_star, opts);

    GroundState q;
    q.a_star = have_final ? final_traj.a : a_star;
    q.bracket_width = (hi - lo) / hi;
    q.final_outcome = final_traj.outcome;
    q.node_count = final_traj.node_count;

    // Midpoint monotonicity spot check around the converged height.
    {
        const double off = std::max(1e3 * q.bracket_width, 1e-9);
        const auto below = integrate_trajectory(p, q.a_star * (1.0 - off), opts).outcome;
        const auto above = integrate_trajectory(p, q.a_star * (1.0 + off), opts).outcome;
        q.bracket_monotone = bracket->monotone_scan &&
                             below == ShootOutcome::turned_upward &&
                             above == ShootOutcome::crossed_zero;
    }

    q.graft_radius = graft_radius_of(final_traj, p);

    const int n = grid->n();
    std::vector<double> u(n, 0.0), ur(n, 0.0);
    HermiteSampler interp(final_traj.samples);
    const double r_first_sample = final_traj.samples.front().r;
    TailModel tail{};
    bool tail_set = false;
    for (int i = 0; i < n; ++i) {
        const double r = grid->node(i);
        if (r <= q.graft_radius) {
            if (r < r_first_sample) {
                auto [uu, vv] = local_expansion(p, q.a_star, r, opts.nl1_scale, opts.nl2_scale);
                u[i] = uu;
                ur[i] = vv;
            } else {
                auto [uu, vv] = interp(r);
                u[i] = uu;
                ur[i] = vv;
            }
        } else {
            if (!tail_set) {
                const double r0 = q.graft_radius;
                HermiteSampler at(final_traj.samples);
                auto [u0, v0] = at(r0);
                (void)v0;
                tail = make_tail(p, r0, std::max(u0, 0.0));
                tail_set = true;
            }
            u[i] = tail.value(r);
            ur[i] = tail.deriv(r);
        }
    }

    std::vector<cplx> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = cplx{u[i], 0.0};
    q.profile = RadialField(grid, std::move(vals));
    q.profile_deriv = std::move(ur);

    q.report = compute_functionals(p, q.profile);
    q.pohozaev_residual = std::abs(q.report.pohozaev) / q.report.grad_sq;

    // Relative max-norm of the discretized stationary equation on a window
    // clear of the weight singularity and of the Dirichlet wall.
    {
        const auto lap = fv_laplacian(*grid, u);
        const double r_lo = std::max(10.0 * grid->h(), 0.05 * grid->r_max());
        const double r_hi = 0.9 * grid->r_max();
        double num = 0.0, den = 0.0;
        for (int i = 0; i < n; ++i) {
            const double r = grid->node(i);
            if (r < r_lo || r > r_hi) continue;
            const double nl1 = opts.nl1_scale * std::pow(r, -p.b1) * signed_pow(u[i], p.p1 - 1.0);
            const double nl2 = opts.nl2_scale * std::pow(r, -p.b2) * signed_pow(u[i], p.p2 - 1.0);
            const double res = -lap[i] + p.omega * u[i] + nl1 - nl2;
            num = std::max(num, std::abs(res));
            den = std::max(den, std::abs(lap[i]) + std::abs(p.omega * u[i]) + std::abs(nl1) +
                                    std::abs(nl2));
        }
        q.elliptic_residual = den > 0.0 ? num / den : 0.0;
    }
    return q;
}

namespace {

struct LinFit {
    double slope, intercept, rms;
};

LinFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    const size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double d = n * sxx - sx * sx;
    LinFit f{};
    f.slope = (n * sxy - sx * sy) / d;
    f.intercept = (sy - f.slope * sx) / n;
    double acc = 0;
    for (size_t i = 0; i < n; ++i) {
        const double e = y[i] - (f.slope * x[i] + f.intercept);
        acc += e * e;
    }
    f.rms = std::sqrt(acc / n);
    return f;
}

} // namespace

TailReport fit_tail(const GroundState& q, const ModelParams& p) {
    const RadialGrid& g = q.profile.grid();
    const double lo = 0.5 * g.r_max(), hi = g.r_max();

    std::vector<double> xs, ys;
    for (int i = 0; i < g.n(); ++i) {
        const double r = g.node(i);
        if (r < lo || r > hi) continue;
        const double u = q.profile[i].real();
        if (u <= 0.0) throw std::runtime_error("window-error: profile not positive on fit window");
        xs.push_back(r);
        ys.push_back(u);
    }
    if (xs.size() < 8) throw std::runtime_error("window-error: too few samples on fit window");

    TailReport rep{};
    rep.window_lo = lo;
    rep.window_hi = hi;

    if (p.omega > 0.0) {
        // log u ~ -sqrt(omega) r + const; remove the known geometric prefactor
        // r^{-(N-1)/2} first so the rate is clean.
        std::vector<double> lx(xs.size()), ly(xs.size());
        for (size_t i = 0; i < xs.size(); ++i) {
            lx[i] = xs[i];
            ly[i] = std::log(ys[i] * std::pow(xs[i], 0.5 * (p.N - 1)));
        }
        const LinFit f = linear_fit(lx, ly);
        rep.kind = TailKind::exponential;
        rep.exponent = -f.slope;
        rep.expected = std::sqrt(p.omega);
        rep.fit_residual = f.rms;
        return rep;
    }

    const bool threshold = std::abs(p.p1 - p.decay_threshold_p1()) < 1e-9;
    if (!threshold) {
        std::vector<double> lx(xs.size()), ly(xs.size());
        for (size_t i = 0; i < xs.size(); ++i) {
            lx[i] = std::log(xs[i]);
            ly[i] = std::log(ys[i]);
        }
        const LinFit f = linear_fit(lx, ly);
        rep.kind = TailKind::algebraic;
        rep.exponent = -f.slope;
        rep.expected = p.decay_beta();
        rep.fit_residual = f.rms;
        return rep;
    }

    // u ~ r^{2-N} (log r)^{(2-N)/(2-b1)}: fit log(u r^{N-2}) against log log r.
    std::vector<double> lx(xs.size()), ly(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) {
        lx[i] = std::log(std::log(xs[i]));
        ly[i] = std::log(ys[i] * std::pow(xs[i], p.N - 2.0));
    }
    const LinFit f = linear_fit(lx, ly);
    rep.kind = TailKind::algebraic_log;
    rep.exponent = f.slope;
    rep.expected = (2.0 - p.N) / (2.0 - p.b1);
    rep.fit_residual = f.rms;
    return rep;
}

} // namespace cnls
