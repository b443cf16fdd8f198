#include "crowdflux/diagnostics.hpp"

#include <cmath>
#include <limits>

#include "crowdflux/errors.hpp"

namespace crowdflux::diagnostics {

namespace {

double mass_impl(const std::vector<double>& v, double vol) {
    double s = 0.0;
    for (double x : v) s += x;
    return s * vol;
}

double entropy_impl(const std::vector<double>& f, const std::vector<double>& g,
                    double vol, double floor) {
    const double mf = mass_impl(f, vol);
    const double mg = mass_impl(g, vol);
    if (!(mf > 0.0) || !(mg > 0.0))
        throw NumericalError("relative_entropy: inputs must have positive mass");
    double h = 0.0;
    for (size_t i = 0; i < f.size(); ++i) {
        const double fi = f[i] / mf;
        if (fi <= floor) continue;
        const double gi = g[i] / mg;
        if (gi < floor) return std::numeric_limits<double>::infinity();
        h += fi * std::log(fi / gi);
    }
    return h * vol;
}

double tv_impl(const std::vector<double>& f, const std::vector<double>& g, double vol) {
    const double mf = mass_impl(f, vol);
    const double mg = mass_impl(g, vol);
    if (!(mf > 0.0) || !(mg > 0.0))
        throw NumericalError("tv_distance: inputs must have positive mass");
    double s = 0.0;
    for (size_t i = 0; i < f.size(); ++i) s += std::abs(f[i] / mf - g[i] / mg);
    return s * vol;
}

double l2_impl(const std::vector<double>& f, const std::vector<double>& g, double vol) {
    double s = 0.0;
    for (size_t i = 0; i < f.size(); ++i) {
        const double d = f[i] - g[i];
        s += d * d;
    }
    return std::sqrt(s * vol);
}

template <class FieldT>
std::vector<double> residuals_impl(const std::vector<FieldT>& est) {
    if (est.size() < 2)
        return {};
    std::vector<double> r;
    r.reserve(est.size() - 1);
    for (size_t i = 1; i < est.size(); ++i) {
        if (!(est[i].grid == est[i - 1].grid))
            throw ConfigError("residual_sequence: estimates must share a grid");
        r.push_back(l2_distance(est[i], est[i - 1]));
    }
    return r;
}

void require_same_grid(const Grid1D& a, const Grid1D& b) {
    if (!(a == b)) throw ConfigError("fields must share a grid");
}
void require_same_grid(const Grid2D& a, const Grid2D& b) {
    if (!(a == b)) throw ConfigError("fields must share a grid");
}

}  // namespace

double mass(const Field1D& f) { return mass_impl(f.values, f.cell_volume()); }
double mass(const Field2D& f) { return mass_impl(f.values, f.cell_volume()); }

double relative_entropy(const Field1D& f, const Field1D& g, double floor) {
    require_same_grid(f.grid, g.grid);
    return entropy_impl(f.values, g.values, f.cell_volume(), floor);
}
double relative_entropy(const Field2D& f, const Field2D& g, double floor) {
    require_same_grid(f.grid, g.grid);
    return entropy_impl(f.values, g.values, f.cell_volume(), floor);
}

double tv_distance(const Field1D& f, const Field1D& g) {
    require_same_grid(f.grid, g.grid);
    return tv_impl(f.values, g.values, f.cell_volume());
}
double tv_distance(const Field2D& f, const Field2D& g) {
    require_same_grid(f.grid, g.grid);
    return tv_impl(f.values, g.values, f.cell_volume());
}

double l2_distance(const Field1D& f, const Field1D& g) {
    require_same_grid(f.grid, g.grid);
    return l2_impl(f.values, g.values, f.cell_volume());
}
double l2_distance(const Field2D& f, const Field2D& g) {
    require_same_grid(f.grid, g.grid);
    return l2_impl(f.values, g.values, f.cell_volume());
}

std::vector<double> residual_sequence(const std::vector<Field1D>& estimates) {
    return residuals_impl(estimates);
}
std::vector<double> residual_sequence(const std::vector<Field2D>& estimates) {
    return residuals_impl(estimates);
}

}  // namespace crowdflux::diagnostics
