#include "cnls/params.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace cnls {

double ModelParams::critical_exponent(double b) const {
    if (N <= 2) return std::numeric_limits<double>::infinity();
    return 2.0 * (N - b) / (N - 2.0);
}

double ModelParams::decay_beta() const {
    return std::max((2.0 - b1) / (p1 - 2.0), static_cast<double>(N - 2));
}

namespace {

bool all_finite(const ModelParams& p) {
    return std::isfinite(p.b1) && std::isfinite(p.b2) && std::isfinite(p.p1) &&
           std::isfinite(p.p2) && std::isfinite(p.omega);
}

std::string fmt(const char* cond, double lhs, double rhs) {
    std::ostringstream os;
    os << cond << " (" << lhs << " vs " << rhs << ")";
    return os.str();
}

} // namespace

AdmissibilityReport validate_params(const ModelParams& p) {
    if (!all_finite(p)) throw std::invalid_argument("malformed-parameters: non-finite field");

    AdmissibilityReport rep;
    rep.s_c1 = p.sc1();
    rep.s_c2 = p.sc2();
    rep.critical_p1 = p.critical_exponent(p.b1);
    rep.critical_p2 = p.critical_exponent(p.b2);

    auto& v = rep.violations;
    const double bcap = std::min(2.0, static_cast<double>(p.N));

    if (p.N < 1) v.push_back("N >= 1 fails");
    if (!(p.b1 > 0.0 && p.b1 < bcap)) v.push_back(fmt("0 < b1 < min{2,N} fails", p.b1, bcap));
    if (!(p.b2 > 0.0 && p.b2 < bcap)) v.push_back(fmt("0 < b2 < min{2,N} fails", p.b2, bcap));
    if (!(p.e1() > 2.0)) v.push_back(fmt("N(p1-2)/2 + b1 > 2 fails", p.e1(), 2.0));
    if (!(p.e1() < p.e2()))
        v.push_back(fmt("N(p1-2)+2b1 < N(p2-2)+2b2 fails", 2.0 * p.e1(), 2.0 * p.e2()));
    if (!(p.p1 > 2.0 && p.p1 < rep.critical_p1))
        v.push_back(fmt("2 < p1 < 2_{b1}^* fails", p.p1, rep.critical_p1));
    if (!(p.p2 > 2.0 && p.p2 < rep.critical_p2))
        v.push_back(fmt("2 < p2 < 2_{b2}^* fails", p.p2, rep.critical_p2));

    const bool structurally_ok = v.empty();
    if (p.omega < 0.0) {
        rep.accepted = false;
        rep.elliptic_nonexistence_demo = structurally_ok && p.N >= 2;
        if (!rep.elliptic_nonexistence_demo)
            v.push_back("omega < 0 outside the nonexistence-demo regime (need N >= 2)");
    } else {
        rep.accepted = structurally_ok;
    }
    return rep;
}

EmbeddingExponents embedding_exponents(const ModelParams& p) {
    if (p.N < 3) throw std::domain_error("not-applicable: embedding exponents need N >= 3");
    if (!(p.b1 < p.b2) || !(p.p1 < p.p2))
        throw std::domain_error("not-applicable: embedding exponents need b1 < b2, p1 < p2");

    const double crit2 = 2.0 * (p.N - p.b2) / (p.N - 2.0);
    const double b0 = (2.0 * p.N - p.p1 * (p.N - 2.0)) / 2.0;

    EmbeddingExponents e{};
    e.theta1 = (crit2 - p.p2) / (crit2 - p.p1);
    e.theta2 = (b0 - p.b2) / (b0 - p.b1);
    e.theta0 = e.theta1 * e.theta2 + 0.5 * e.theta1 * (1.0 - e.theta2) * p.p1 +
               (1.0 - e.theta1) * (p.N - p.b2) / (p.N - 2.0);

    if (!(e.theta1 > 0.0 && e.theta1 < 1.0))
        throw std::domain_error("not-applicable: theta1 outside (0,1)");
    if (!(e.theta2 > 0.0 && e.theta2 < 1.0))
        throw std::domain_error("not-applicable: theta2 outside (0,1)");
    if (!(e.theta0 > 1.0)) throw std::domain_error("not-applicable: theta0 <= 1");
    return e;
}

} // namespace cnls
