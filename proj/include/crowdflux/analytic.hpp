#pragma once

#include <functional>
#include <vector>

namespace crowdflux::analytic {

// Quadratic total-density profile w(t,x) = A(t) - B(t) x^2 with
// A(t) = a (6bt+1)^(-1/3), B(t) = b / (6bt+1). `b` is B(0) directly.
struct QuadraticProfile {
    double a = 1.0;
    double b = 1.0;
};

// Valid while 6bt+1 > 0; throws std::domain_error past that horizon.
// With positive_part the value is clamped at 0 (the truncated profile);
// the untruncated expression is the classical solution and the default.
double special_w(const QuadraticProfile& p, double t, double x, bool positive_part = false);

// Transported companion u(t,x) = u0(x / s) / s with s = (6bt+1)^(1/3).
double special_u(const std::function<double(double)>& u0, double b, double t, double x);

using VelocityField = std::function<double(double, double)>;  // (x, t)

struct Trajectory {
    std::vector<double> times;
    std::vector<double> positions;
};

// Integrates dX/dt = V(X, t), X(0) = x0 with classical RK4 on `steps`
// uniform sub-intervals of [0, t_end]. t_end may be negative (backward flow).
Trajectory characteristic_flow(const VelocityField& V, double x0, double t_end, int steps);

struct ContinuitySolution {
    std::vector<double> values;    // f(x, t) on the query grid
    std::vector<double> origins;   // G(x, t), backward characteristic feet
    std::vector<double> jacobian;  // dG/dx, central differences on the grid
    bool characteristics_crossed = false;  // some jacobian entry <= 0
};

// f(x,t) = f0(G(x,t)) dG/dx via backward characteristics from each grid point.
ContinuitySolution continuity_solution(const std::function<double(double)>& f0,
                                       const VelocityField& V, double t,
                                       const std::vector<double>& x_grid, int ode_steps = 256);

}  // namespace crowdflux::analytic
