#pragma once

#include <vector>

#include "crowdflux/detail/flux.hpp"
#include "crowdflux/diagnostics.hpp"
#include "crowdflux/errors.hpp"
#include "crowdflux/grid.hpp"
#include "crowdflux/nonlinearity.hpp"

namespace crowdflux::pde1d {

struct SolverParams {
    double cfl = 0.4;
    Limiter limiter = Limiter::none;
    double t_end = 0.2;
    std::vector<double> snapshot_times;  // sorted, within [0, t_end]
    double dt_max = 1e-2;
    void validate() const;
};

struct Snapshot1D {
    int seq = 0;
    double t = 0.0;
    Field1D u, v;
};

struct SolveResult1D {
    std::vector<Snapshot1D> snapshots;
    diagnostics::DiagnosticsRecord record;
    Field1D u_final, v_final;
    double t_final = 0.0;
    long steps = 0;
};

// Aborted step; carries the last valid state.
struct InstabilityError : NumericalError {
    double t;
    Field1D u, v;
    InstabilityError(const std::string& msg, double t_, Field1D u_, Field1D v_)
        : NumericalError(msg), t(t_), u(std::move(u_)), v(std::move(v_)) {}
};

// Velocity -(p_{i+1}-p_i)/dx at each interface; entries 0 and n are the
// domain edges and are forced to 0 (zero-flux boundary).
std::vector<double> interface_velocity(const Field1D& p);

// flux[k] = vel+ * rho[k-1] + vel- * rho[k] at interface k, plus the limited
// anti-diffusive correction when lim != none. flux[0] = flux[n] = 0 exactly.
std::vector<double> upwind_flux(const Field1D& rho, const std::vector<double>& vel,
                                Limiter lim = Limiter::none);

// Semi-discrete right-hand side of the coupled system: both species advected
// by the shared drift derived from p = f(u+v).
void rhs(const Field1D& u, const Field1D& v, const NonlinearityF& f, Limiter lim,
         Field1D& dudt, Field1D& dvdt);

// Classical four-stage explicit step; throws InstabilityError when the
// updated state has a non-finite value or a cell below -1e-12.
void step_rk4(Field1D& u, Field1D& v, const NonlinearityF& f, Limiter lim, double dt);

// cfl * min(dx/max|vel|, dx^2/(2 d max f'(w) max w)), capped at dt_max.
double stable_dt(const Field1D& u, const Field1D& v, const NonlinearityF& f,
                 double cfl, double dt_max);

SolveResult1D solve(const Field1D& u0, const Field1D& v0, const NonlinearityF& f,
                    const SolverParams& params);

// One-sided coupled route: w advanced by central degenerate-diffusion fluxes,
// u transported in the drift -d/dx f(w).
struct WuSnapshot {
    int seq = 0;
    double t = 0.0;
    Field1D w, u;
};

struct SolveResultWU {
    std::vector<WuSnapshot> snapshots;
    Field1D w_final, u_final;
    double t_final = 0.0;
    long steps = 0;
};

SolveResultWU solve_wu(const Field1D& w0, const Field1D& u0, const NonlinearityF& f,
                       const SolverParams& params);

}  // namespace crowdflux::pde1d
