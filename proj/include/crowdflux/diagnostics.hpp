#pragma once

#include <string>
#include <vector>

#include "crowdflux/grid.hpp"

namespace crowdflux::diagnostics {

// One sampled time of a run. `extra` lines up with DiagnosticsRecord::extra_names.
struct DiagnosticsRow {
    double t = 0.0;
    double mass_u = 0.0;
    double mass_v = 0.0;
    double H_uv = 0.0;
    double TV_uv = 0.0;
    double dt = 0.0;
    std::vector<double> extra;
};

struct DiagnosticsRecord {
    std::vector<std::string> extra_names;
    std::vector<DiagnosticsRow> rows;
};

double mass(const Field1D& f);
double mass(const Field2D& f);

// H(f||g) on internally normalized copies. Cells with normalized f below
// `floor` contribute nothing; if f carries mass where g < floor the result is
// +infinity (absolute-continuity violation), never an exception.
double relative_entropy(const Field1D& f, const Field1D& g, double floor = 1e-300);
double relative_entropy(const Field2D& f, const Field2D& g, double floor = 1e-300);

// L1 distance of the normalized inputs.
double tv_distance(const Field1D& f, const Field1D& g);
double tv_distance(const Field2D& f, const Field2D& g);

// Plain L2 norm of the difference (no normalization).
double l2_distance(const Field1D& f, const Field1D& g);
double l2_distance(const Field2D& f, const Field2D& g);

// r_i = ||e_i - e_{i-1}||_L2 for i = 1..len-1. Grids must match.
std::vector<double> residual_sequence(const std::vector<Field1D>& estimates);
std::vector<double> residual_sequence(const std::vector<Field2D>& estimates);

}  // namespace crowdflux::diagnostics
