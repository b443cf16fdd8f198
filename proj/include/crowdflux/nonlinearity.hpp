#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

namespace crowdflux {

// Pressure law p = f(u+v). Identity reproduces the base two-species system;
// power mode f(z) = z^(m-1) with m > 1 gives the porous-medium family.
struct NonlinearityF {
    enum class Mode { identity, power, custom };

    Mode mode = Mode::identity;
    double m = 2.0;
    std::function<double(double)> custom_f;
    std::function<double(double)> custom_df;

    static NonlinearityF identity() { return {}; }

    static NonlinearityF power(double m_) {
        if (!(m_ > 1.0)) throw std::invalid_argument("NonlinearityF: power mode requires m > 1");
        NonlinearityF f;
        f.mode = Mode::power;
        f.m = m_;
        return f;
    }

    static NonlinearityF custom(std::function<double(double)> f, std::function<double(double)> df) {
        NonlinearityF n;
        n.mode = Mode::custom;
        n.custom_f = std::move(f);
        n.custom_df = std::move(df);
        return n;
    }

    double f(double z) const {
        switch (mode) {
            case Mode::identity: return z;
            case Mode::power: return std::pow(z, m - 1.0);
            default: return custom_f(z);
        }
    }

    // f'(z); for power mode (m-1) z^(m-2), with pow(0,0) = 1 covering m = 2.
    double df(double z) const {
        switch (mode) {
            case Mode::identity: return 1.0;
            case Mode::power: return (m - 1.0) * std::pow(z, m - 2.0);
            default: return custom_df(z);
        }
    }
};

}  // namespace crowdflux
