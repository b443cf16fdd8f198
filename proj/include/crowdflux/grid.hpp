#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace crowdflux {

// Equidistant cell-centered grid on [x_min, x_max].
struct Grid1D {
    double x_min = 0.0;
    double x_max = 1.0;
    int n_cells = 4;

    Grid1D() = default;
    Grid1D(double lo, double hi, int n) : x_min(lo), x_max(hi), n_cells(n) {
        if (n_cells < 4) throw std::invalid_argument("Grid1D: n_cells must be >= 4");
        if (!(x_max > x_min)) throw std::invalid_argument("Grid1D: x_max must exceed x_min");
    }
    double dx() const { return (x_max - x_min) / n_cells; }
    double center(int i) const { return x_min + (i + 0.5) * dx(); }
    bool operator==(const Grid1D&) const = default;
};

struct Grid2D {
    double x_min = 0.0, x_max = 1.0;
    double y_min = 0.0, y_max = 1.0;
    int nx = 4, ny = 4;

    Grid2D() = default;
    Grid2D(double xlo, double xhi, double ylo, double yhi, int nx_, int ny_)
        : x_min(xlo), x_max(xhi), y_min(ylo), y_max(yhi), nx(nx_), ny(ny_) {
        if (nx < 4 || ny < 4) throw std::invalid_argument("Grid2D: nx, ny must be >= 4");
        if (!(x_max > x_min) || !(y_max > y_min))
            throw std::invalid_argument("Grid2D: box must have positive extent");
    }
    double dx() const { return (x_max - x_min) / nx; }
    double dy() const { return (y_max - y_min) / ny; }
    double xc(int i) const { return x_min + (i + 0.5) * dx(); }
    double yc(int j) const { return y_min + (j + 0.5) * dy(); }
    int size() const { return nx * ny; }
    bool operator==(const Grid2D&) const = default;
};

// Cell values (density per unit length/area) on a grid.
struct Field1D {
    Grid1D grid;
    std::vector<double> values;

    Field1D() = default;
    explicit Field1D(const Grid1D& g, double fill = 0.0) : grid(g), values(g.n_cells, fill) {}
    double cell_volume() const { return grid.dx(); }
    int size() const { return grid.n_cells; }
};

// Row-major storage: index(i, j) = j*nx + i.
struct Field2D {
    Grid2D grid;
    std::vector<double> values;

    Field2D() = default;
    explicit Field2D(const Grid2D& g, double fill = 0.0) : grid(g), values(g.size(), fill) {}
    double cell_volume() const { return grid.dx() * grid.dy(); }
    int size() const { return grid.size(); }
    double& at(int i, int j) { return values[static_cast<size_t>(j) * grid.nx + i]; }
    double at(int i, int j) const { return values[static_cast<size_t>(j) * grid.nx + i]; }
};

inline Field1D sample_field(const Grid1D& g, const std::function<double(double)>& f) {
    Field1D out(g);
    for (int i = 0; i < g.n_cells; ++i) out.values[i] = f(g.center(i));
    return out;
}

inline Field2D sample_field(const Grid2D& g, const std::function<double(double, double)>& f) {
    Field2D out(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) out.at(i, j) = f(g.xc(i), g.yc(j));
    return out;
}

}  // namespace crowdflux
