#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <vector>

namespace cnls {

using cplx = std::complex<double>;

/// Surface measure of the unit sphere, 2 pi^{N/2} / Gamma(N/2).
/// Evaluates to 2 for N = 1 (two half-lines), consistent with the
/// one-dimensional |x|^{-b} measure.
double sphere_measure(int N);

/// Cell-centered radial mesh on [0, r_max]: nodes r_i = (i + 1/2) h with
/// h = r_max / n, so the singular weights r^{-b} are never evaluated at
/// r = 0.  Quadrature is the midpoint rule against r^{N-1} dr including the
/// surface measure, so sums against `w` are genuine R^N integrals.
class RadialGrid {
  public:
    RadialGrid(int N, double r_max, int n);

    int dim() const { return N_; }
    double r_max() const { return r_max_; }
    int n() const { return n_; }
    double h() const { return h_; }
    const std::vector<double>& nodes() const { return r_; }
    const std::vector<double>& weights() const { return w_; }
    double node(int i) const { return r_[i]; }
    double weight(int i) const { return w_[i]; }

  private:
    int N_;
    double r_max_;
    int n_;
    double h_;
    std::vector<double> r_; // strictly increasing, r_0 = h/2 > 0
    std::vector<double> w_; // omega_{N-1} r_i^{N-1} h, all positive
};

using GridPtr = std::shared_ptr<const RadialGrid>;

inline GridPtr make_grid(int N, double r_max, int n) {
    return std::make_shared<const RadialGrid>(N, r_max, n);
}

/// Complex samples on a RadialGrid.  Immutable grid, value-semantic samples.
class RadialField {
  public:
    RadialField() = default;
    explicit RadialField(GridPtr grid) : grid_(std::move(grid)), v_(grid_->n(), cplx{0.0, 0.0}) {}
    RadialField(GridPtr grid, std::vector<cplx> values);

    const RadialGrid& grid() const { return *grid_; }
    GridPtr grid_ptr() const { return grid_; }
    int size() const { return static_cast<int>(v_.size()); }
    const std::vector<cplx>& values() const { return v_; }
    std::vector<cplx>& values() { return v_; }
    cplx operator[](int i) const { return v_[i]; }
    cplx& operator[](int i) { return v_[i]; }

    bool all_finite() const;

  private:
    GridPtr grid_;
    std::vector<cplx> v_;
};

/// Samples f(r) on the grid nodes.
RadialField sample_field(GridPtr grid, const std::function<cplx(double)>& f);
RadialField sample_real_field(GridPtr grid, const std::function<double(double)>& f);

/// Centered second-order radial derivative with one-sided second-order
/// closure at the first and last cells.
std::vector<cplx> radial_derivative(const RadialField& u);
std::vector<double> radial_derivative(const RadialGrid& g, const std::vector<double>& u);

} // namespace cnls
