#pragma once

#include <cstddef>

#include "crowdflux/errors.hpp"

namespace crowdflux::detail {

// Shared stepping loop. Step(t_now, remaining) advances the state and the
// caller-owned clock, returning the dt it used; Emit(seq, t) flushes one
// requested snapshot; Row(t, dt) appends one diagnostics row. Snapshots are
// taken at the first completed step whose time reaches the requested time;
// whatever is still pending at t_end gets the final state.
template <class Params, class Step, class Emit, class Row>
long advance(const Params& params, double& t, Step step, Emit emit, Row row) {
    std::size_t next_snap = 0;
    const auto& times = params.snapshot_times;
    double last_dt = 0.0;
    long steps = 0;

    auto flush_due = [&](bool all) {
        while (next_snap < times.size() && (all || t >= times[next_snap])) {
            emit(static_cast<int>(next_snap), t);
            row(t, last_dt);
            ++next_snap;
        }
    };

    flush_due(false);
    while (t < params.t_end) {
        last_dt = step(t, params.t_end - t);
        ++steps;
        flush_due(false);
        if (steps > 50'000'000) throw NumericalError("solve: step limit exceeded");
    }
    flush_due(true);
    row(t, last_dt);
    return steps;
}

}  // namespace crowdflux::detail
