#include "cnls/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace cnls {

double sphere_measure(int N) {
    if (N < 1) throw std::invalid_argument("sphere_measure: N >= 1 required");
    return 2.0 * std::pow(M_PI, 0.5 * N) / std::tgamma(0.5 * N);
}

RadialGrid::RadialGrid(int N, double r_max, int n) : N_(N), r_max_(r_max), n_(n) {
    if (N < 1) throw std::invalid_argument("RadialGrid: N >= 1 required");
    if (!(r_max > 0.0) || n < 3) throw std::invalid_argument("RadialGrid: need r_max > 0, n >= 3");
    h_ = r_max / n;
    r_.resize(n);
    w_.resize(n);
    const double s = sphere_measure(N);
    for (int i = 0; i < n; ++i) {
        r_[i] = (i + 0.5) * h_;
        w_[i] = s * std::pow(r_[i], N - 1) * h_;
    }
}

RadialField::RadialField(GridPtr grid, std::vector<cplx> values)
    : grid_(std::move(grid)), v_(std::move(values)) {
    if (static_cast<int>(v_.size()) != grid_->n())
        throw std::invalid_argument("RadialField: sample count does not match grid");
}

bool RadialField::all_finite() const {
    for (const auto& z : v_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

RadialField sample_field(GridPtr grid, const std::function<cplx(double)>& f) {
    RadialField u(grid);
    for (int i = 0; i < u.size(); ++i) u[i] = f(grid->node(i));
    return u;
}

RadialField sample_real_field(GridPtr grid, const std::function<double(double)>& f) {
    RadialField u(grid);
    for (int i = 0; i < u.size(); ++i) u[i] = cplx{f(grid->node(i)), 0.0};
    return u;
}

namespace {

template <typename T>
std::vector<T> derivative_impl(const RadialGrid& g, const std::vector<T>& u) {
    const int n = static_cast<int>(u.size());
    const double h = g.h();
    std::vector<T> d(n);
    if (n < 3) throw std::invalid_argument("radial_derivative: need at least 3 samples");
    d[0] = (-3.0 * u[0] + 4.0 * u[1] - u[2]) / (2.0 * h);
    for (int i = 1; i + 1 < n; ++i) d[i] = (u[i + 1] - u[i - 1]) / (2.0 * h);
    d[n - 1] = (3.0 * u[n - 1] - 4.0 * u[n - 2] + u[n - 3]) / (2.0 * h);
    return d;
}

} // namespace

std::vector<cplx> radial_derivative(const RadialField& u) {
    return derivative_impl(u.grid(), u.values());
}

std::vector<double> radial_derivative(const RadialGrid& g, const std::vector<double>& u) {
    return derivative_impl(g, u);
}

} // namespace cnls
