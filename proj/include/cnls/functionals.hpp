#pragma once

#include "cnls/grid.hpp"
#include "cnls/params.hpp"

namespace cnls {

/// Every static functional of a field in one pass:
///   mass     M(u)   = |u|_2^2
///   energy   E(u)   = |grad u|_2^2/2 + W1/p1 - W2/p2
///   action   S_w(u) = E(u) + (omega/2) M(u)
///   pohozaev K(u)   = |grad u|_2^2 + c1 W1 - c2 W2
///   i_omega  I_w(u) = S_w(u) - 2 K(u) / (N(p1-2)+2b1)
/// with W_j = int |x|^{-b_j} |u|^{p_j}.
struct FunctionalReport {
    double mass = 0.0;
    double energy = 0.0;
    double action = 0.0;
    double pohozaev = 0.0;
    double i_omega = 0.0;
    double grad_sq = 0.0;
    double w1 = 0.0;
    double w2 = 0.0;
    // |u(r_{n-1})|^2 r_max^{N-1} h: quality flag for the truncation of the
    // R^N integrals to [0, r_max].
    double tail_mass_estimate = 0.0;
};

/// omega_{N-1} int_0^{r_max} r^{N-1-b} |u|^p dr by the grid quadrature.
/// Requires 0 <= b < N (throws std::domain_error "divergent-weight"), p >= 1.
double weighted_lp(const RadialField& u, double b, double p);

FunctionalReport compute_functionals(const ModelParams& p, const RadialField& u);

/// Mass-preserving scaling v_t(r) = t^{N/2} u(t r), resampled on the grid by
/// linear interpolation (constant extension below the first node, zero beyond
/// r_max).  `resolution_loss` flags runs where truncation/interpolation moved
/// more than 0.1% of the mass.
struct ScaledField {
    RadialField field;
    bool resolution_loss = false;
};
ScaledField scale_field(const RadialField& u, double t);

/// |grad u|_2 + W1^{1/p1}: the norm of the zero-frequency space.  N >= 3 only.
double x_norm(const ModelParams& p, const RadialField& u);

/// W_b,p(u) / (|grad u|_2^{N(p-2)/2+b} |u|_2^{p-N(p-2)/2-b}).
/// Throws std::domain_error "undefined-quotient" on the zero field.
double gn_quotient(const RadialField& u, double b, double p);

} // namespace cnls
