#pragma once

#include <string>
#include <vector>

#include "catsize/distinguish.hpp"
#include "catsize/format.hpp"

namespace catsize {

// Closed-form relative-cat-size sweep over a (theta0, sigma) grid, one row
// per delta per cell, row-major over the grid.
struct SweepRequest {
    Angle theta0_start, theta0_stop, theta0_step;
    Angle sigma_start, sigma_stop, sigma_step;
    int n_max = 100;
    std::vector<double> deltas;
    std::string output_path;
    int threads = 0;  // 0 = hardware concurrency

    void validate() const;
    std::vector<Angle> theta0_values() const;
    std::vector<Angle> sigma_values() const;
};

struct SweepCell {
    Angle theta0;
    Angle sigma;
    double delta = 0.0;
    CatSizeResult result;
};

std::vector<SweepCell> run_sweep(const SweepRequest& req);

// Main table plus a companion "<path>.traces.tsv" holding the per-row P_E
// probes; both carry '#' metadata headers (version, flags, grid resolution).
void write_sweep_tsv(const SweepRequest& req, const std::vector<SweepCell>& cells,
                     const std::string& flags);

} // namespace catsize
