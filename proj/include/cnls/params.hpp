#pragma once

#include <string>
#include <vector>

namespace cnls {

/// Model parameters for the radial inhomogeneous NLS with competing
/// nonlinearities
///
///   i u_t + Lap u = |x|^{-b1} |u|^{p1-2} u - |x|^{-b2} |u|^{p2-2} u,
///
/// i.e. a defocusing lower-order term against a focusing higher-order one.
/// Standing waves e^{i omega t} phi solve
///
///   -Lap phi + omega phi = |x|^{-b2} phi^{p2-1} - |x|^{-b1} phi^{p1-1}.
///
/// Every formula in the library takes its exponents from here.
struct ModelParams {
    int N = 3;          // spatial dimension
    double b1 = 0.5;    // weight exponent of the defocusing term
    double b2 = 1.0;    // weight exponent of the focusing term
    double p1 = 3.2;    // defocusing power
    double p2 = 3.5;    // focusing power
    double omega = 1.0; // frequency

    // Scaling exponent e_j = N(p_j-2)/2 + b_j of the weighted integral
    // under v_t(x) = t^{N/2} v(tx).
    double e1() const { return 0.5 * N * (p1 - 2.0) + b1; }
    double e2() const { return 0.5 * N * (p2 - 2.0) + b2; }

    // Coefficients of the Pohozaev functional
    // K(u) = |grad u|_2^2 + c1 * W1(u) - c2 * W2(u).
    double c1() const { return (N * (p1 - 2.0) + 2.0 * b1) / (2.0 * p1); }
    double c2() const { return (N * (p2 - 2.0) + 2.0 * b2) / (2.0 * p2); }

    // Weighted critical exponent 2_b^* = 2(N-b)/(N-2)^+ (infinite for N <= 2).
    double critical_exponent(double b) const;

    // Criticality indices s_{c,j} = N/2 - (2-b_j)/(p_j-2).
    double sc1() const { return 0.5 * N - (2.0 - b1) / (p1 - 2.0); }
    double sc2() const { return 0.5 * N - (2.0 - b2) / (p2 - 2.0); }

    // Algebraic-decay exponent beta = max{(2-b1)/(p1-2), N-2} of the
    // omega = 0 solutions.
    double decay_beta() const;

    // Threshold power p1 = (2N-2-b1)/(N-2) separating the pure power decay
    // from the log-corrected one (omega = 0, N >= 3).
    double decay_threshold_p1() const { return (2.0 * N - 2.0 - b1) / (N - 2.0); }
};

/// Result of checking the admissibility conditions.
struct AdmissibilityReport {
    bool accepted = false;
    // omega < 0 with N >= 2 and all structural conditions met: the elliptic
    // problem has no H^1_rad solution, but the parameter set is still usable
    // to demonstrate exactly that.
    bool elliptic_nonexistence_demo = false;
    std::vector<std::string> violations;
    double s_c1 = 0.0;
    double s_c2 = 0.0;
    double critical_p1 = 0.0; // 2_{b1}^*
    double critical_p2 = 0.0; // 2_{b2}^*
};

/// Checks every admissibility inequality:
///   N >= 1,  0 < b_j < min{2, N},
///   2 < N(p1-2)/2 + b1 < N(p2-2)/2 + b2,
///   2 < p_j < 2_{b_j}^*.
/// Throws std::invalid_argument on non-finite input.
AdmissibilityReport validate_params(const ModelParams& p);

/// Interpolation exponents of the weighted-space embedding
///   theta1 solves p2 = theta1*p1 + (1-theta1)*2(N-b2)/(N-2),
///   theta2 solves b2 = theta2*b1 + (1-theta2)*(2N - p1(N-2))/2,
///   theta0 = theta1*theta2 + theta1*(1-theta2)*p1/2 + (1-theta1)(N-b2)/(N-2).
struct EmbeddingExponents {
    double theta1;
    double theta2;
    double theta0;
};

/// Requires N >= 3, b1 < b2, p1 < p2 (throws std::domain_error otherwise);
/// also throws if the computed exponents leave (0,1) x (0,1) x (1,inf).
EmbeddingExponents embedding_exponents(const ModelParams& p);

} // namespace cnls
