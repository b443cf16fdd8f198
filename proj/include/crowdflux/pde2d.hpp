#pragma once

#include <vector>

#include "crowdflux/diagnostics.hpp"
#include "crowdflux/grid.hpp"
#include "crowdflux/nonlinearity.hpp"
#include "crowdflux/pde1d.hpp"

namespace crowdflux::pde2d {

using pde1d::Limiter;
using pde1d::SolverParams;

struct Snapshot2D {
    int seq = 0;
    double t = 0.0;
    Field2D u, v;
};

struct SolveResult2D {
    std::vector<Snapshot2D> snapshots;
    diagnostics::DiagnosticsRecord record;
    Field2D u_final, v_final;
    double t_final = 0.0;
    long steps = 0;
};

// Unsplit dimension-by-dimension divergence of upwind fluxes with p = f(u+v);
// boundary-normal fluxes are exactly zero. Row-parallel (OpenMP).
void rhs2d(const Field2D& u, const Field2D& v, const NonlinearityF& f, Limiter lim,
           Field2D& dudt, Field2D& dvdt);

// Plain serial reference for the same stencil. Kept for the kernel tests and
// the benchmark target.
void rhs2d_serial(const Field2D& u, const Field2D& v, const NonlinearityF& f, Limiter lim,
                  Field2D& dudt, Field2D& dvdt);

void step_rk4(Field2D& u, Field2D& v, const NonlinearityF& f, Limiter lim, double dt);

double stable_dt(const Field2D& u, const Field2D& v, const NonlinearityF& f,
                 double cfl, double dt_max);

SolveResult2D solve2d(const Field2D& u0, const Field2D& v0, const NonlinearityF& f,
                      const SolverParams& params);

}  // namespace crowdflux::pde2d
