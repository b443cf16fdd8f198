#include "crowdflux/pde1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace crowdflux::pde1d {

namespace {

constexpr double kNegTol = -1e-12;

using detail::face_flux;
using detail::pressure;

void check_inputs(const Field1D& u0, const Field1D& v0) {
    if (!(u0.grid == v0.grid)) throw std::invalid_argument("solve: u0, v0 must share a grid");
    for (double x : u0.values)
        if (!std::isfinite(x) || x < 0.0)
            throw std::invalid_argument("solve: initial data must be finite and nonnegative");
    for (double x : v0.values)
        if (!std::isfinite(x) || x < 0.0)
            throw std::invalid_argument("solve: initial data must be finite and nonnegative");
}

void check_state(const Field1D& a, const Field1D& b, double t, const Field1D& u_last,
                 const Field1D& v_last) {
    for (double x : a.values)
        if (!std::isfinite(x) || x < kNegTol)
            throw InstabilityError("step_rk4: state left the stable region", t, u_last, v_last);
    for (double x : b.values)
        if (!std::isfinite(x) || x < kNegTol)
            throw InstabilityError("step_rk4: state left the stable region", t, u_last, v_last);
}

}  // namespace

void SolverParams::validate() const {
    if (!(cfl > 0.0) || cfl > 1.0) throw ConfigError("cfl must lie in (0, 1]");
    if (!(t_end >= 0.0)) throw ConfigError("t_end must be nonnegative");
    if (!(dt_max > 0.0)) throw ConfigError("dt_max must be positive");
    for (size_t i = 0; i < snapshot_times.size(); ++i) {
        const double s = snapshot_times[i];
        if (s < 0.0 || s > t_end) throw ConfigError("snapshot times must lie in [0, t_end]");
        if (i > 0 && s < snapshot_times[i - 1]) throw ConfigError("snapshot times must be sorted");
    }
}

std::vector<double> interface_velocity(const Field1D& p) {
    const int n = p.size();
    if (n < 2) throw std::invalid_argument("interface_velocity: need at least 2 cells");
    const double dx = p.grid.dx();
    std::vector<double> vel(n + 1, 0.0);
    for (int k = 1; k < n; ++k) vel[k] = -(p.values[k] - p.values[k - 1]) / dx;
    return vel;
}

std::vector<double> upwind_flux(const Field1D& rho, const std::vector<double>& vel, Limiter lim) {
    const int n = rho.size();
    if (static_cast<int>(vel.size()) != n + 1)
        throw std::invalid_argument("upwind_flux: velocity not dimensioned for the interfaces");
    const auto& r = rho.values;
    std::vector<double> flux(n + 1, 0.0);
    for (int k = 1; k < n; ++k) {
        const bool has_mm = k >= 2;
        const bool has_pp = k + 1 < n;
        flux[k] = face_flux(vel[k], lim, has_mm, has_mm ? r[k - 2] : 0.0, r[k - 1], r[k],
                            has_pp, has_pp ? r[k + 1] : 0.0);
    }
    return flux;
}

void rhs(const Field1D& u, const Field1D& v, const NonlinearityF& f, Limiter lim,
         Field1D& dudt, Field1D& dvdt) {
    if (!(u.grid == v.grid)) throw std::invalid_argument("rhs: u, v must share a grid");
    const int n = u.size();
    const double dx = u.grid.dx();

    Field1D p(u.grid);
    for (int i = 0; i < n; ++i) p.values[i] = pressure(f, u.values[i] + v.values[i]);

    const auto vel = interface_velocity(p);
    const auto fu = upwind_flux(u, vel, lim);
    const auto fv = upwind_flux(v, vel, lim);

    dudt = Field1D(u.grid);
    dvdt = Field1D(u.grid);
    for (int i = 0; i < n; ++i) {
        dudt.values[i] = (fu[i] - fu[i + 1]) / dx;
        dvdt.values[i] = (fv[i] - fv[i + 1]) / dx;
    }
}

void step_rk4(Field1D& u, Field1D& v, const NonlinearityF& f, Limiter lim, double dt) {
    const int n = u.size();
    const Field1D u0 = u;
    const Field1D v0 = v;

    Field1D k1u, k1v, k2u, k2v, k3u, k3v, k4u, k4v;
    Field1D tu(u.grid), tv(u.grid);

    rhs(u, v, f, lim, k1u, k1v);
    for (int i = 0; i < n; ++i) {
        tu.values[i] = u.values[i] + 0.5 * dt * k1u.values[i];
        tv.values[i] = v.values[i] + 0.5 * dt * k1v.values[i];
    }
    rhs(tu, tv, f, lim, k2u, k2v);
    for (int i = 0; i < n; ++i) {
        tu.values[i] = u.values[i] + 0.5 * dt * k2u.values[i];
        tv.values[i] = v.values[i] + 0.5 * dt * k2v.values[i];
    }
    rhs(tu, tv, f, lim, k3u, k3v);
    for (int i = 0; i < n; ++i) {
        tu.values[i] = u.values[i] + dt * k3u.values[i];
        tv.values[i] = v.values[i] + dt * k3v.values[i];
    }
    rhs(tu, tv, f, lim, k4u, k4v);

    const double c = dt / 6.0;
    for (int i = 0; i < n; ++i) {
        u.values[i] += c * (k1u.values[i] + 2.0 * k2u.values[i] + 2.0 * k3u.values[i] + k4u.values[i]);
        v.values[i] += c * (k1v.values[i] + 2.0 * k2v.values[i] + 2.0 * k3v.values[i] + k4v.values[i]);
    }
    check_state(u, v, 0.0, u0, v0);
}

double stable_dt(const Field1D& u, const Field1D& v, const NonlinearityF& f,
                 double cfl, double dt_max) {
    const int n = u.size();
    const double dx = u.grid.dx();

    Field1D p(u.grid);
    double wmax = 0.0;
    double dfmax = 0.0;
    for (int i = 0; i < n; ++i) {
        const double w = std::max(u.values[i] + v.values[i], 0.0);
        p.values[i] = pressure(f, w);
        wmax = std::max(wmax, w);
        dfmax = std::max(dfmax, f.df(w));
    }
    const auto vel = interface_velocity(p);
    double vmax = 0.0;
    for (double vk : vel) vmax = std::max(vmax, std::abs(vk));

    double dt = dt_max;
    if (vmax > 0.0) dt = std::min(dt, cfl * dx / vmax);
    const double diff = dfmax * wmax;
    if (diff > 0.0) dt = std::min(dt, cfl * dx * dx / (2.0 * diff));
    return dt;
}

using detail::advance;

SolveResult1D solve(const Field1D& u0, const Field1D& v0, const NonlinearityF& f,
                    const SolverParams& params) {
    params.validate();
    check_inputs(u0, v0);

    SolveResult1D res;
    Field1D u = u0;
    Field1D v = v0;
    double t = 0.0;

    auto do_step = [&](double t_now, double remaining) {
        double dt = stable_dt(u, v, f, params.cfl, params.dt_max);
        if (!(dt > 0.0)) throw NumericalError("solve: nonpositive time step");
        const bool last = dt >= remaining;
        if (last) dt = remaining;
        try {
            step_rk4(u, v, f, params.limiter, dt);
        } catch (InstabilityError& e) {
            throw InstabilityError(e.what(), t_now, std::move(e.u), std::move(e.v));
        }
        t = last ? params.t_end : t_now + dt;
        return dt;
    };
    auto emit = [&](int seq, double t_now) {
        res.snapshots.push_back({seq, t_now, u, v});
    };
    auto row = [&](double t_now, double dt) {
        auto& rows = res.record.rows;
        if (!rows.empty() && !(t_now > rows.back().t)) return;
        const double mu = diagnostics::mass(u);
        const double mv = diagnostics::mass(v);
        const bool ok = mu > 0.0 && mv > 0.0;
        const double nan = std::numeric_limits<double>::quiet_NaN();
        rows.push_back({t_now, mu, mv, ok ? diagnostics::relative_entropy(u, v) : nan,
                        ok ? diagnostics::tv_distance(u, v) : nan, dt, {}});
    };

    res.steps = advance(params, t, do_step, emit, row);
    res.u_final = std::move(u);
    res.v_final = std::move(v);
    res.t_final = t;
    return res;
}

SolveResultWU solve_wu(const Field1D& w0, const Field1D& u0, const NonlinearityF& f,
                       const SolverParams& params) {
    params.validate();
    check_inputs(w0, u0);

    const int n = w0.size();
    const double dx = w0.grid.dx();

    // dw/dt from central fluxes -avg(w) * d/dx f(w); du/dt from upwind
    // transport in the same drift.
    auto rhs_wu = [&](const Field1D& w, const Field1D& uu, Field1D& dw, Field1D& du) {
        Field1D p(w.grid);
        for (int i = 0; i < n; ++i) p.values[i] = pressure(f, w.values[i]);
        std::vector<double> gw(n + 1, 0.0);
        for (int k = 1; k < n; ++k)
            gw[k] = -0.5 * (w.values[k - 1] + w.values[k]) * (p.values[k] - p.values[k - 1]) / dx;
        const auto vel = interface_velocity(p);
        const auto fu = upwind_flux(uu, vel, params.limiter);
        dw = Field1D(w.grid);
        du = Field1D(w.grid);
        for (int i = 0; i < n; ++i) {
            dw.values[i] = (gw[i] - gw[i + 1]) / dx;
            du.values[i] = (fu[i] - fu[i + 1]) / dx;
        }
    };

    SolveResultWU res;
    Field1D w = w0;
    Field1D u = u0;
    double t = 0.0;

    Field1D k1w, k1u, k2w, k2u, k3w, k3u, k4w, k4u;
    Field1D tw(w.grid), tu(w.grid);

    auto do_step = [&](double t_now, double remaining) {
        const Field1D zero(w.grid);
        double dt = stable_dt(w, zero, f, params.cfl, params.dt_max);
        if (!(dt > 0.0)) throw NumericalError("solve_wu: nonpositive time step");
        const bool last = dt >= remaining;
        if (last) dt = remaining;

        rhs_wu(w, u, k1w, k1u);
        for (int i = 0; i < n; ++i) {
            tw.values[i] = w.values[i] + 0.5 * dt * k1w.values[i];
            tu.values[i] = u.values[i] + 0.5 * dt * k1u.values[i];
        }
        rhs_wu(tw, tu, k2w, k2u);
        for (int i = 0; i < n; ++i) {
            tw.values[i] = w.values[i] + 0.5 * dt * k2w.values[i];
            tu.values[i] = u.values[i] + 0.5 * dt * k2u.values[i];
        }
        rhs_wu(tw, tu, k3w, k3u);
        for (int i = 0; i < n; ++i) {
            tw.values[i] = w.values[i] + dt * k3w.values[i];
            tu.values[i] = u.values[i] + dt * k3u.values[i];
        }
        rhs_wu(tw, tu, k4w, k4u);
        const double c = dt / 6.0;
        for (int i = 0; i < n; ++i) {
            w.values[i] += c * (k1w.values[i] + 2.0 * k2w.values[i] + 2.0 * k3w.values[i] + k4w.values[i]);
            u.values[i] += c * (k1u.values[i] + 2.0 * k2u.values[i] + 2.0 * k3u.values[i] + k4u.values[i]);
        }
        for (int i = 0; i < n; ++i)
            if (!std::isfinite(w.values[i]) || w.values[i] < kNegTol ||
                !std::isfinite(u.values[i]) || u.values[i] < kNegTol)
                throw NumericalError("solve_wu: state left the stable region");

        t = last ? params.t_end : t_now + dt;
        return dt;
    };
    auto emit = [&](int seq, double t_now) { res.snapshots.push_back({seq, t_now, w, u}); };
    auto row = [](double, double) {};

    res.steps = advance(params, t, do_step, emit, row);
    res.w_final = std::move(w);
    res.u_final = std::move(u);
    res.t_final = t;
    return res;
}

}  // namespace crowdflux::pde1d
