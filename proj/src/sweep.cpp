#include "catsize/sweep.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <thread>

namespace catsize {

namespace {

std::vector<Angle> axis(const Angle& start, const Angle& stop, const Angle& step) {
    std::vector<Angle> v;
    for (int i = 0;; ++i) {
        const double coeff = start.over_pi + i * step.over_pi;
        if (coeff > stop.over_pi + 1e-12 * step.over_pi) break;
        v.push_back(Angle::from_over_pi(coeff));
    }
    return v;
}

} // namespace

void SweepRequest::validate() const {
    if (!(theta0_step.over_pi > 0.0) || !(sigma_step.over_pi > 0.0))
        throw std::invalid_argument("sweep steps must be positive");
    if (theta0_start.over_pi < -0.5 || theta0_stop.over_pi > 0.5)
        throw std::invalid_argument("theta0 range must lie within [-pi/2, pi/2]");
    if (sigma_start.over_pi < 0.0 || sigma_stop.over_pi > 0.5)
        throw std::invalid_argument("sigma range must lie within [0, pi/2]");
    if (theta0_stop.over_pi < theta0_start.over_pi || sigma_stop.over_pi < sigma_start.over_pi)
        throw std::invalid_argument("sweep ranges must be nonempty");
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    if (deltas.empty()) throw std::invalid_argument("at least one delta is required");
}

std::vector<Angle> SweepRequest::theta0_values() const {
    return axis(theta0_start, theta0_stop, theta0_step);
}

std::vector<Angle> SweepRequest::sigma_values() const {
    return axis(sigma_start, sigma_stop, sigma_step);
}

std::vector<SweepCell> run_sweep(const SweepRequest& req) {
    req.validate();
    const auto theta0s = req.theta0_values();
    const auto sigmas = req.sigma_values();

    std::vector<SweepCell> cells;
    cells.resize(theta0s.size() * sigmas.size() * req.deltas.size());
    auto fill_cell = [&](std::size_t idx) {
        const std::size_t per_theta = sigmas.size() * req.deltas.size();
        const Angle& th = theta0s[idx / per_theta];
        const Angle& sg = sigmas[(idx % per_theta) / req.deltas.size()];
        const double delta = req.deltas[idx % req.deltas.size()];
        cells[idx] = {th, sg, delta,
                      relative_cat_size({th.radians, sg.radians}, delta, req.n_max)};
    };

    int workers = req.threads > 0 ? req.threads
                                  : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min<int>(workers, static_cast<int>(cells.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) fill_cell(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < cells.size();
                     i = next.fetch_add(1))
                    fill_cell(i);
            });
        for (auto& th : pool) th.join();
    }
    return cells;
}

void write_sweep_tsv(const SweepRequest& req, const std::vector<SweepCell>& cells,
                     const std::string& flags) {
    const std::string trace_path = req.output_path + ".traces.tsv";
    std::ofstream out(req.output_path);
    if (!out) throw std::runtime_error("cannot write '" + req.output_path + "'");
    std::ofstream traces(trace_path);
    if (!traces) throw std::runtime_error("cannot write '" + trace_path + "'");

    const std::string meta = "# catstate " CATSIZE_VERSION "\n# flags: " + flags +
                             "\n# grid: theta0 step " + format_angle(req.theta0_step) +
                             ", sigma step " + format_angle(req.sigma_step) +
                             ", n_max " + std::to_string(req.n_max) +
                             "\n# angles in units of pi\n";
    out << meta << "theta0/pi\tsigma/pi\tdelta\tn_min\trelative_size\ttrace\n";
    traces << meta << "row\tn\tP_E\n";

    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto& c = cells[i];
        // undefined n_min is reported as 0 (cells past the n_max cutoff)
        out << format_double(c.theta0.over_pi) << '\t' << format_double(c.sigma.over_pi)
            << '\t' << format_double(c.delta) << '\t' << c.result.n_min.value_or(0) << '\t'
            << format_double(c.result.relative_size()) << '\t' << "traces:" << i << '\n';
        for (const auto& [n, p] : c.result.probability_trace)
            traces << i << '\t' << n << '\t' << format_double(1.0 - p) << '\n';
    }
}

} // namespace catsize
