#pragma once

#include <algorithm>
#include <cmath>

#include "crowdflux/nonlinearity.hpp"

namespace crowdflux::pde1d {
enum class Limiter { none, minmod, vanleer };
}

namespace crowdflux::detail {

using pde1d::Limiter;

inline double limited_slope(Limiter lim, double a, double b) {
    switch (lim) {
        case Limiter::minmod:
            if (a * b <= 0.0) return 0.0;
            return a > 0.0 ? std::min(a, b) : std::max(a, b);
        case Limiter::vanleer:
            if (a * b <= 0.0) return 0.0;
            return 2.0 * a * b / (a + b);
        default:
            return 0.0;
    }
}

// Upwind face flux for interface velocity `vel` between donor values r_m
// (left) and r_p (right); r_mm / r_pp are the next neighbors outward, used
// only for the limited correction and only where they exist.
inline double face_flux(double vel, Limiter lim, bool has_mm, double r_mm, double r_m,
                        double r_p, bool has_pp, double r_pp) {
    if (vel >= 0.0) {
        double f = vel * r_m;
        if (lim != Limiter::none && has_mm)
            f += vel * 0.5 * limited_slope(lim, r_m - r_mm, r_p - r_m);
        return f;
    }
    double f = vel * r_p;
    if (lim != Limiter::none && has_pp)
        f -= vel * 0.5 * limited_slope(lim, r_pp - r_p, r_p - r_m);
    return f;
}

// Pressure on the clamped total density; vacuum cells may sit a hair below
// zero and fractional powers must not see them.
inline double pressure(const NonlinearityF& f, double w) { return f.f(std::max(w, 0.0)); }

}  // namespace crowdflux::detail
