#pragma once

#include "cnls/functionals.hpp"
#include "cnls/grid.hpp"
#include "cnls/params.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace cnls {

/// Radial profile equation integrated by this module:
///   u_rr + (N-1)/r u_r - omega u + r^{-b2} u^{p2-1} - r^{-b1} u^{p1-1} = 0,
///   u(0) = a > 0,  u(r) -> 0.

enum class ShootOutcome {
    crossed_zero,  // u reached 0: too much focusing
    turned_upward, // u_r > 0 while u above the decay threshold
    decayed,       // |u| and |u_r| both under the decay threshold
    undecided      // reached r_stop positive and decreasing, above threshold
};

const char* to_string(ShootOutcome o);

struct ShootSample {
    double r;
    double u;
    double ur;
};

struct ShootTrajectory {
    double a = 0.0;
    double r_stop = 0.0;
    ShootOutcome outcome = ShootOutcome::undecided;
    std::vector<ShootSample> samples;
    int node_count = 0; // zero crossings seen before termination
};

struct ShootOptions {
    double r_stop = 30.0;        // integrate out to this radius
    double rtol = 1e-10;         // adaptive relative tolerance
    double r0_frac = 1e-4;       // series seed radius as fraction of first cell
    double first_cell = 0.0;     // first grid cell radius; 0 -> r_stop/8192
    double decay_threshold = 1e-8; // scale-free in a
    double nl1_scale = 1.0;      // test hook: defocusing term multiplier
    double nl2_scale = 1.0;      // test hook: focusing term multiplier
    long max_steps = 6'000'000;
};

/// Power-series seed at the origin:
///   u(r) = a + omega a r^2/(2N) + a^{p1-1} r^{2-b1}/((2-b1)(N-b1))
///            - a^{p2-1} r^{2-b2}/((2-b2)(N-b2)),
/// u_r its term-wise derivative.  Valid for b_j < min{2, N}.
std::pair<double, double> local_expansion(const ModelParams& p, double a, double r,
                                          double nl1_scale = 1.0, double nl2_scale = 1.0);

/// Right-hand side residual of the profile equation at (r, u, u_r, u_rr);
/// zero on exact solutions.  Used by the series and cross-check tests.
double ode_residual(const ModelParams& p, double r, double u, double ur, double urr,
                    double nl1_scale = 1.0, double nl2_scale = 1.0);

/// Adaptive Dormand-Prince 5(4) integration from the series seed.
ShootTrajectory integrate_trajectory(const ModelParams& p, double a, const ShootOptions& opts);

/// Fixed-step classical RK4 from the same seed; independent cross-check.
ShootTrajectory integrate_trajectory_rk4(const ModelParams& p, double a, const ShootOptions& opts,
                                         double dr);

struct Bracket {
    double a_lo; // turned_upward
    double a_hi; // crossed_zero
    bool monotone_scan = true;
};

/// Geometric scan a = a0 2^k for the first (turned_upward, crossed_zero)
/// adjacent pair.  Returns nothing when no bracket exists over the scanned
/// decades (the omega < 0 nonexistence face).
std::optional<Bracket> find_bracket(const ModelParams& p, const ShootOptions& opts,
                                    double a0 = 1e-3, int max_doublings = 40);

struct GroundState {
    RadialField profile;              // real positive samples on the grid
    std::vector<double> profile_deriv; // u_r carried along from the integration
    double a_star = 0.0;
    FunctionalReport report;
    double pohozaev_residual = 0.0; // |K(Q)| / |grad Q|_2^2
    double elliptic_residual = 0.0; // windowed relative max-norm of the equation
    double graft_radius = 0.0;      // analytic far-field tail used beyond this
    double bracket_width = 0.0;     // final relative bracket width
    bool bracket_monotone = true;   // midpoint re-classification check
    ShootOutcome final_outcome = ShootOutcome::undecided;
    int node_count = 0;
};

/// Bisection between a turned_upward and a crossed_zero height, to relative
/// width 1e-12 (deeper when the decayed outcome needs it), then profile
/// assembly on the grid with the linear far-field tail grafted on.
/// Throws std::invalid_argument "bad-bracket" when the bracket does not
/// straddle, std::runtime_error "nonconvergence" when residuals stay large.
GroundState shoot(const ModelParams& p, const GridPtr& grid, const ShootOptions& opts,
                  std::optional<Bracket> bracket = std::nullopt);

enum class TailKind { exponential, algebraic, algebraic_log };

struct TailReport {
    TailKind kind;
    double exponent;    // fitted decay rate (exponential) or power (algebraic)
    double expected;    // sqrt(omega), -beta, or the log-correction exponent
    double fit_residual; // rms residual of the regression
    double window_lo = 0.0;
    double window_hi = 0.0;
};

/// Far-field fit on [r_max/2, r_max]:
///   omega > 0: log u  vs  r        (rate vs sqrt(omega)),
///   omega = 0: log u  vs  log r    (power vs beta), unless p1 sits at the
///   threshold (2N-2-b1)/(N-2), where u r^{N-2} is fitted against
///   (log r)^{(2-N)/(2-b1)}.
TailReport fit_tail(const GroundState& q, const ModelParams& p);

} // namespace cnls
