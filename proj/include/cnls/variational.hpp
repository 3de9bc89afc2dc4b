#pragma once

#include "cnls/functionals.hpp"
#include "cnls/grid.hpp"
#include "cnls/params.hpp"

#include <cstdint>
#include <vector>

namespace cnls {

/// Scaling line through u: with g = |grad u|^2, W1, W2 fixed,
///   K(u_t) = t^2 g + c1 t^{e1} W1 - c2 t^{e2} W2,
///   S_w(u_t) = t^2 g/2 + (omega/2) M + t^{e1} W1/p1 - t^{e2} W2/p2.
/// Exact in t; only g, M, W1, W2 carry quadrature error.
struct ScalingLine {
    double g = 0.0, mass = 0.0, w1 = 0.0, w2 = 0.0;
    double e1 = 0.0, e2 = 0.0, c1 = 0.0, c2 = 0.0, p1 = 0.0, p2 = 0.0, omega = 0.0;

    double K(double t) const;
    double action(double t) const;
    double energy(double t) const;
    double dK(double t) const;
    // Magnitude scale of the three K terms at t; the reference for relative
    // root residuals.
    double K_scale(double t) const;
};

ScalingLine scaling_line(const ModelParams& p, const RadialField& u);

enum class ProjectionStatus { ok, no_projection };

struct ProjectionResult {
    ProjectionStatus status = ProjectionStatus::ok;
    double t_u = 1.0;
    RadialField projected;
    double k_residual = 0.0; // |K(u_{t_u})| / K_scale(t_u), from the scaling line
};

/// Unique positive root of t -> K(u_t) by safeguarded Newton; relative root
/// residual <= 1e-10.  W2 = 0 leaves K(u_t) > 0 for all t: no_projection.
/// If K(u) < 0 the root satisfies t_u in (0,1).
ProjectionResult project_to_pohozaev(const ModelParams& p, const RadialField& u);

struct MinimizeOptions {
    int max_iters = 4000;
    double grad_tol = 1e-8;    // relative projected-gradient tolerance
    double armijo = 1e-4;      // line-search sufficient-decrease constant
    int max_backtracks = 40;
    bool record_trace = false;
};

struct MinimizeResult {
    double m_omega = 0.0;
    RadialField minimizer;
    bool converged = false;
    int iters = 0;
    double projected_grad_norm = 0.0;
    std::vector<double> trace; // S_w per accepted iterate when recorded
};

/// m_omega by projected descent: Laplacian-preconditioned gradient steps of
/// S_w, re-projected onto {K = 0} after every step, Armijo backtracking from
/// unit step.  For omega = 0 the preconditioner is the bare Laplacian (the
/// zero-frequency topology); the objective is then the energy E.
MinimizeResult minimize_action(const ModelParams& p, const RadialField& seed,
                               const MinimizeOptions& opts = {});

/// Gaussian seed a exp(-r^2/sigma^2) with randomized (a, sigma).
RadialField random_gaussian_seed(const GridPtr& grid, std::uint64_t rng_seed);

enum class DataLabel { a_plus, a_minus, above_threshold, on_manifold };

const char* to_string(DataLabel l);

struct DataClass {
    DataLabel label;
    double s_omega;
    double m_omega;
    double k_value;
};

struct ClassifyOptions {
    double k_tol = 1e-3; // |K| <= k_tol * |grad u|^2 counts as K = 0
    double s_tol = 1e-3; // |S - m| <= s_tol * |m| counts as S = m
};

/// Sign table of (S_w - m_w, K): A^- = {S < m, K < 0}, A^+ = {S < m, K > 0};
/// ties within tolerance report on_manifold.
DataClass classify_data(const ModelParams& p, const RadialField& u0, double m_omega,
                        const ClassifyOptions& opts = {});

struct ConcavityReport {
    double t_u = 0.0;
    double max_second_difference = 0.0; // of E(u_t) on [t_u, 4 t_u]
    bool max_at_tu = true;              // E(u_{t_u}) >= E(u_t) on the sample set
    double k_vs_dEdt_rel_err = 0.0;     // |dE/dt|_{t=1} - K(u)| / scale
};

/// Samples E(u_t) along the scaling line (exact in t) and checks the
/// concavity structure: nonpositive second differences past t_u, maximum at
/// t_u, and d/dt E(u_t)|_{t=1} = K(u) by centered differences.
ConcavityReport action_concavity_check(const ModelParams& p, const RadialField& u,
                                       int samples = 200);

} // namespace cnls
