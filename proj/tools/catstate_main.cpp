#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catsize/entropy.hpp"
#include "catsize/fit.hpp"
#include "catsize/format.hpp"
#include "catsize/sequential.hpp"
#include "catsize/sweep.hpp"

namespace {

using namespace catsize;

struct Args {
    std::string theta0, sigma;
    std::optional<int> n_particles;
    std::vector<double> deltas;
    std::string mode = "finite";
    std::optional<int> n_max;

    // sweep
    std::string t0_start = "-0.5pi", t0_stop = "0.5pi", t0_step = "0.025pi";
    std::string sg_start = "0pi", sg_stop = "0.5pi", sg_step = "0.025pi";
    std::string output;
    int threads = 0;

    // fit
    std::string csv_path;
    double theta0_max = 0.25, theta0_step = 0.01;
    double sigma_max = 0.05, sigma_step = 0.005;

    // entropy / disconnectivity
    std::string n_range = "1..100";
    std::string fock;
    double threshold = 0.05;

    // seqsim
    std::string overlaps;
    long trials = 100000;
    std::uint64_t seed = 1;
    double prior_a = 0.5;
    std::string true_branch = "A";
};

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const std::string field =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (field.empty()) throw std::invalid_argument("empty field in list '" + text + "'");
        out.push_back(std::stod(field));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int n = std::stoi(text);
        return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

RdmMode parse_mode(const std::string& mode) {
    if (mode == "closed") return RdmMode::ClosedForm;
    if (mode == "finite") return RdmMode::FiniteN;
    throw std::invalid_argument("mode must be 'closed' or 'finite'");
}

int cmd_catsize(const Args& a, bool mode_given) {
    const Angle th = parse_angle(a.theta0);
    const Angle sg = parse_angle(a.sigma);
    const RdmMode mode = mode_given ? parse_mode(a.mode)
                                    : (a.n_particles ? RdmMode::FiniteN : RdmMode::ClosedForm);
    if (mode == RdmMode::FiniteN && !a.n_particles)
        throw std::invalid_argument("finite-N mode requires --N");
    if (a.deltas.empty()) throw std::invalid_argument("at least one --delta is required");

    std::cout << "delta\tn_min\tC_delta\trelative_size\n";
    for (double delta : a.deltas) {
        CatSizeResult res;
        if (mode == RdmMode::FiniteN) {
            const SuperpositionSpec spec{*a.n_particles, {th.radians, sg.radians}};
            const int cap = a.n_max ? *a.n_max : spec.n_particles;
            res = cat_size(spec, delta, mode, cap);
        } else {
            res = relative_cat_size({th.radians, sg.radians}, delta, a.n_max.value_or(100));
            if (a.n_particles) res.n_particles = *a.n_particles;
        }
        std::cout << format_double(delta) << '\t' << res.n_min.value_or(0) << '\t'
                  << (res.n_particles ? format_double(res.cat_size()) : std::string("-"))
                  << '\t' << format_double(res.relative_size()) << '\n';
    }
    return 0;
}

int cmd_sweep(const Args& a, const std::string& flags) {
    SweepRequest req;
    req.theta0_start = parse_angle(a.t0_start);
    req.theta0_stop = parse_angle(a.t0_stop);
    req.theta0_step = parse_angle(a.t0_step);
    req.sigma_start = parse_angle(a.sg_start);
    req.sigma_stop = parse_angle(a.sg_stop);
    req.sigma_step = parse_angle(a.sg_step);
    req.n_max = a.n_max.value_or(100);
    req.deltas = a.deltas;
    req.output_path = a.output;
    req.threads = a.threads;
    if (req.output_path.empty()) throw std::invalid_argument("--output is required");

    const auto cells = run_sweep(req);
    write_sweep_tsv(req, cells, flags);
    std::cout << "wrote " << cells.size() << " cells to " << req.output_path << '\n';
    return 0;
}

int cmd_fit(const Args& a, bool mode_given) {
    if (!a.n_particles) throw std::invalid_argument("--N is required");
    const NumberDistribution target = read_distribution_csv(a.csv_path);
    if (static_cast<int>(target.probs.size()) != *a.n_particles + 1)
        throw CsvError("expected " + std::to_string(*a.n_particles + 1) + " data rows",
                       static_cast<int>(target.probs.size()) + 1);

    FitGrid grid;
    grid.theta0_max = a.theta0_max;
    grid.theta0_step = a.theta0_step;
    grid.sigma_max = a.sigma_max;
    grid.sigma_step = a.sigma_step;
    const RdmMode mode = mode_given ? parse_mode(a.mode) : RdmMode::FiniteN;

    const FitResult res =
        fit_number_distribution(target, *a.n_particles, grid, a.deltas, mode, a.threads);
    std::cout << "theta0/pi\t" << format_double(res.theta0_over_pi) << '\n'
              << "sigma/pi\t" << format_double(res.sigma_over_pi) << '\n'
              << "residual\t" << format_double(res.residual) << '\n';
    for (const auto& [delta, cs] : res.cat_sizes)
        std::cout << "C[" << format_double(delta) << "]\t" << format_double(cs.cat_size())
                  << "\tn_min\t" << cs.n_min.value_or(0) << '\n';
    return 0;
}

int cmd_entropy(const Args& a, bool mode_given) {
    const Angle th = parse_angle(a.theta0);
    const Angle sg = parse_angle(a.sigma);
    const auto [n_lo, n_hi] = parse_range(a.n_range);
    const RdmMode mode = mode_given ? parse_mode(a.mode)
                                    : (a.n_particles ? RdmMode::FiniteN : RdmMode::ClosedForm);
    EntropyCurve curve;
    if (mode == RdmMode::FiniteN) {
        if (!a.n_particles) throw std::invalid_argument("finite-N mode requires --N");
        curve = entropy_curve(SuperpositionSpec{*a.n_particles, {th.radians, sg.radians}},
                              n_lo, n_hi);
    } else {
        curve = entropy_curve(GaussianSpread{th.radians, sg.radians}, n_lo, n_hi);
    }
    std::cout << "n\tS_n\n";
    for (const auto& [n, s] : curve.values)
        std::cout << n << '\t' << format_double(s) << '\n';
    return 0;
}

int cmd_disconnectivity(const Args& a) {
    DisconnectivityResult res;
    if (!a.fock.empty()) {
        FockOccupation occ;
        for (double c : parse_list(a.fock)) occ.counts.push_back(static_cast<long>(c));
        res = fock_disconnectivity(occ, a.threshold);
    } else {
        if (!a.n_particles) throw std::invalid_argument("need --fock or --N with --theta0/--sigma");
        const Angle th = parse_angle(a.theta0);
        const Angle sg = parse_angle(a.sigma);
        const SuperpositionSpec spec{*a.n_particles, {th.radians, sg.radians}};
        res = disconnectivity(entropy_curve(spec, 1, spec.n_particles), a.threshold);
    }
    std::cout << "n\tbeta_n\n";
    for (const auto& [n, b] : res.betas) std::cout << n << '\t' << format_double(b) << '\n';
    std::cout << "threshold\t" << format_double(res.threshold) << '\n'
              << "D\t" << res.d_value << '\n';
    return 0;
}

int cmd_seqsim(const Args& a) {
    ProductBranchPair pair;
    pair.overlaps = parse_list(a.overlaps);
    pair.prior_a = a.prior_a;
    if (a.true_branch != "A" && a.true_branch != "B")
        throw std::invalid_argument("--true-branch must be A or B");
    const Branch truth = a.true_branch == "A" ? Branch::A : Branch::B;

    const ProtocolTrace trace = run_protocol(pair);
    const double rate = simulate_protocol(pair, truth, a.seed, a.trials);
    const double p = trace.final_success_probability;
    const double sigma3 = 3.0 * std::sqrt(std::max(p * (1.0 - p), 0.0) / a.trials);

    std::cout << "k\tR_k\tP_k\n";
    for (const auto& s : trace.steps)
        std::cout << s.index << '\t' << format_double(s.r) << '\t' << format_double(s.p) << '\n';
    std::cout << "analytic_P_n\t" << format_double(p) << '\n'
              << "empirical_rate\t" << format_double(rate) << '\n'
              << "trials\t" << a.trials << '\n'
              << "binomial_3sigma\t" << format_double(sigma3) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"measurement-based effective size of two-branch superpositions"};
    app.set_version_flag("--version", CATSIZE_VERSION);
    app.require_subcommand(1);

    Args a;
    std::string flags;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) flags += ' ';
        flags += argv[i];
    }

    auto* catsize_cmd = app.add_subcommand("catsize", "cat size C_delta = N/n_min");
    catsize_cmd->add_option("--theta0", a.theta0, "spread center (radians or <x>pi)")->required();
    catsize_cmd->add_option("--sigma", a.sigma, "spread width (radians or <x>pi)")->required();
    catsize_cmd->add_option("--N", a.n_particles, "particle number");
    catsize_cmd->add_option("--delta", a.deltas, "precision (repeatable)");
    auto* cs_mode = catsize_cmd->add_option("--mode", a.mode, "closed|finite");
    catsize_cmd->add_option("--n-max", a.n_max, "scan cutoff");

    auto* sweep_cmd = app.add_subcommand("sweep", "relative cat size over a (theta0, sigma) grid");
    sweep_cmd->add_option("--theta0-start", a.t0_start);
    sweep_cmd->add_option("--theta0-stop", a.t0_stop);
    sweep_cmd->add_option("--theta0-step", a.t0_step);
    sweep_cmd->add_option("--sigma-start", a.sg_start);
    sweep_cmd->add_option("--sigma-stop", a.sg_stop);
    sweep_cmd->add_option("--sigma-step", a.sg_step);
    sweep_cmd->add_option("--n-max", a.n_max);
    sweep_cmd->add_option("--delta", a.deltas, "precision (repeatable)");
    sweep_cmd->add_option("--output", a.output, "TSV output path")->required();
    sweep_cmd->add_option("--threads", a.threads);

    auto* fit_cmd = app.add_subcommand("fit", "fit (theta0, sigma) to a number distribution");
    fit_cmd->add_option("csv", a.csv_path, "CSV with header n,probability")->required();
    fit_cmd->add_option("--N", a.n_particles, "particle number")->required();
    fit_cmd->add_option("--theta0-max", a.theta0_max, "grid extent, units of pi");
    fit_cmd->add_option("--theta0-step", a.theta0_step, "grid step, units of pi");
    fit_cmd->add_option("--sigma-max", a.sigma_max, "grid extent, units of pi");
    fit_cmd->add_option("--sigma-step", a.sigma_step, "grid step, units of pi");
    fit_cmd->add_option("--delta", a.deltas, "cat sizes to report (repeatable)");
    auto* fit_mode = fit_cmd->add_option("--mode", a.mode, "closed|finite");
    fit_cmd->add_option("--threads", a.threads);

    auto* ent_cmd = app.add_subcommand("entropy", "von Neumann entropy S_n of the n-RDM");
    ent_cmd->add_option("--theta0", a.theta0)->required();
    ent_cmd->add_option("--sigma", a.sigma)->required();
    ent_cmd->add_option("--n", a.n_range, "range, e.g. 1..100");
    ent_cmd->add_option("--N", a.n_particles);
    auto* ent_mode = ent_cmd->add_option("--mode", a.mode, "closed|finite");

    auto* disc_cmd = app.add_subcommand("disconnectivity", "Leggett disconnectivity D");
    disc_cmd->add_option("--fock", a.fock, "occupation numbers, e.g. 3,2");
    disc_cmd->add_option("--N", a.n_particles);
    disc_cmd->add_option("--theta0", a.theta0);
    disc_cmd->add_option("--sigma", a.sigma);
    disc_cmd->add_option("--threshold", a.threshold);

    auto* seq_cmd = app.add_subcommand("seqsim", "sequential single-particle protocol");
    seq_cmd->add_option("--overlaps", a.overlaps, "per-particle overlaps, comma list")->required();
    seq_cmd->add_option("--trials", a.trials);
    seq_cmd->add_option("--seed", a.seed);
    seq_cmd->add_option("--prior-a", a.prior_a);
    seq_cmd->add_option("--true-branch", a.true_branch, "A|B");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (catsize_cmd->parsed()) return cmd_catsize(a, cs_mode->count() > 0);
        if (sweep_cmd->parsed()) return cmd_sweep(a, flags);
        if (fit_cmd->parsed()) return cmd_fit(a, fit_mode->count() > 0);
        if (ent_cmd->parsed()) return cmd_entropy(a, ent_mode->count() > 0);
        if (disc_cmd->parsed()) return cmd_disconnectivity(a);
        if (seq_cmd->parsed()) return cmd_seqsim(a);
    } catch (const catsize::CsvError& e) {
        std::cerr << "error: " << e.what() << " (line " << e.line() << ")\n";
        return 2;
    } catch (const catsize::NormalizationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
