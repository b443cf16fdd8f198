#include "crowdflux/analytic.hpp"

#include <cmath>
#include <stdexcept>

#include "crowdflux/errors.hpp"

namespace crowdflux::analytic {

namespace {

double denom(double b, double t) {
    const double s = 6.0 * b * t + 1.0;
    if (!(s > 0.0)) throw std::domain_error("special solution: 6bt+1 must stay positive");
    return s;
}

inline double rk4_step(const VelocityField& V, double x, double t, double h) {
    const double k1 = V(x, t);
    const double k2 = V(x + 0.5 * h * k1, t + 0.5 * h);
    const double k3 = V(x + 0.5 * h * k2, t + 0.5 * h);
    const double k4 = V(x + h * k3, t + h);
    const double out = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!std::isfinite(out)) throw NumericalError("characteristic integration diverged");
    return out;
}

// Endpoint of the characteristic through (x0, t0), integrated to t1.
double flow_endpoint(const VelocityField& V, double x0, double t0, double t1, int steps) {
    const double h = (t1 - t0) / steps;
    double x = x0;
    for (int k = 0; k < steps; ++k) x = rk4_step(V, x, t0 + k * h, h);
    return x;
}

}  // namespace

double special_w(const QuadraticProfile& p, double t, double x, bool positive_part) {
    const double s = denom(p.b, t);
    const double value = p.a * std::pow(s, -1.0 / 3.0) - (p.b / s) * x * x;
    return positive_part ? std::max(value, 0.0) : value;
}

double special_u(const std::function<double(double)>& u0, double b, double t, double x) {
    const double s = std::cbrt(denom(b, t));
    return u0(x / s) / s;
}

Trajectory characteristic_flow(const VelocityField& V, double x0, double t_end, int steps) {
    if (steps < 1) throw std::invalid_argument("characteristic_flow: steps must be >= 1");
    Trajectory traj;
    traj.times.resize(steps + 1);
    traj.positions.resize(steps + 1);
    const double h = t_end / steps;
    traj.times[0] = 0.0;
    traj.positions[0] = x0;
    double x = x0;
    for (int k = 0; k < steps; ++k) {
        x = rk4_step(V, x, k * h, h);
        traj.times[k + 1] = (k + 1) * h;
        traj.positions[k + 1] = x;
    }
    return traj;
}

ContinuitySolution continuity_solution(const std::function<double(double)>& f0,
                                       const VelocityField& V, double t,
                                       const std::vector<double>& x_grid, int ode_steps) {
    const int n = static_cast<int>(x_grid.size());
    if (n < 2) throw std::invalid_argument("continuity_solution: need at least 2 grid points");
    if (ode_steps < 1) throw std::invalid_argument("continuity_solution: ode_steps must be >= 1");

    ContinuitySolution out;
    out.origins.resize(n);
    out.jacobian.resize(n);
    out.values.resize(n);

#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i)
        out.origins[i] = flow_endpoint(V, x_grid[i], t, 0.0, ode_steps);

    for (int i = 0; i < n; ++i) {
        const int l = std::max(i - 1, 0);
        const int r = std::min(i + 1, n - 1);
        out.jacobian[i] = (out.origins[r] - out.origins[l]) / (x_grid[r] - x_grid[l]);
        if (out.jacobian[i] <= 0.0) out.characteristics_crossed = true;
        out.values[i] = f0(out.origins[i]) * out.jacobian[i];
    }
    return out;
}

}  // namespace crowdflux::analytic
