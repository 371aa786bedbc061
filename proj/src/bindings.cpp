#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "catsize/distinguish.hpp"
#include "catsize/entropy.hpp"
#include "catsize/fit.hpp"
#include "catsize/sequential.hpp"
#include "catsize/state_model.hpp"

namespace py = pybind11;
using namespace catsize;

namespace {

py::array_t<std::complex<double>> to_numpy(const HermitianMatrix& m) {
    py::array_t<std::complex<double>> out({m.dim(), m.dim()});
    auto buf = out.mutable_unchecked<2>();
    for (int k = 0; k < m.dim(); ++k)
        for (int l = 0; l < m.dim(); ++l) buf(k, l) = m(k, l);
    return out;
}

HermitianMatrix from_numpy(const py::array_t<std::complex<double>>& a) {
    if (a.ndim() != 2 || a.shape(0) != a.shape(1))
        throw std::invalid_argument("expected a square matrix");
    HermitianMatrix m(static_cast<int>(a.shape(0)));
    auto buf = a.unchecked<2>();
    for (int k = 0; k < m.dim(); ++k)
        for (int l = 0; l < m.dim(); ++l) m(k, l) = buf(k, l);
    return m;
}

py::dict rdms_to_dict(const BranchRdms& r) {
    py::dict d;
    d["n"] = r.n;
    d["rho_a"] = to_numpy(r.rho_a);
    d["rho_b"] = to_numpy(r.rho_b);
    d["rho_full"] = to_numpy(r.rho_full);
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "measurement-based effective size of two-branch superpositions";
    m.attr("__version__") = CATSIZE_VERSION;

    py::class_<GaussianSpread>(m, "GaussianSpread")
        .def(py::init<double, double>(), py::arg("theta0") = 0.0, py::arg("sigma") = 0.0)
        .def_readwrite("theta0", &GaussianSpread::theta0)
        .def_readwrite("sigma", &GaussianSpread::sigma);

    py::class_<SuperpositionSpec>(m, "SuperpositionSpec")
        .def(py::init<int, GaussianSpread>(), py::arg("n_particles"), py::arg("spread"))
        .def_readwrite("n_particles", &SuperpositionSpec::n_particles)
        .def_readwrite("spread", &SuperpositionSpec::spread);

    py::enum_<RdmMode>(m, "RdmMode")
        .value("CLOSED_FORM", RdmMode::ClosedForm)
        .value("FINITE_N", RdmMode::FiniteN);

    py::enum_<Branch>(m, "Branch").value("A", Branch::A).value("B", Branch::B);

    py::class_<CatSizeResult>(m, "CatSizeResult")
        .def_readonly("delta", &CatSizeResult::delta)
        .def_property_readonly("n_min",
                               [](const CatSizeResult& r) {
                                   return r.n_min ? py::cast(*r.n_min) : py::none().cast<py::object>();
                               })
        .def_readonly("probability_trace", &CatSizeResult::probability_trace)
        .def("relative_size", &CatSizeResult::relative_size)
        .def("cat_size", &CatSizeResult::cat_size);

    m.def("branch_overlap",
          [](int n, double theta0, double sigma) {
              return branch_overlap({n, {theta0, sigma}});
          },
          py::arg("n_particles"), py::arg("theta0"), py::arg("sigma"));

    m.def("number_distribution",
          [](int n, double theta0, double sigma) {
              return number_distribution({n, {theta0, sigma}}).probs;
          },
          py::arg("n_particles"), py::arg("theta0"), py::arg("sigma"));

    m.def("distillation_probability", &distillation_probability, py::arg("overlap"),
          py::arg("g"));

    m.def("rdm_closed_form",
          [](double theta0, double sigma, int n) {
              return rdms_to_dict(rdm_closed_form({theta0, sigma}, n));
          },
          py::arg("theta0"), py::arg("sigma"), py::arg("n"));

    m.def("rdm_finite_n",
          [](int n_particles, double theta0, double sigma, int n) {
              return rdms_to_dict(rdm_finite_n({n_particles, {theta0, sigma}}, n));
          },
          py::arg("n_particles"), py::arg("theta0"), py::arg("sigma"), py::arg("n"));

    m.def("fock_rdm",
          [](const std::vector<long>& counts, int n) {
              return to_numpy(fock_rdm({counts}, n));
          },
          py::arg("counts"), py::arg("n"));

    m.def("success_probability",
          [](const py::array_t<std::complex<double>>& a,
             const py::array_t<std::complex<double>>& b) {
              return success_probability(from_numpy(a), from_numpy(b));
          },
          py::arg("rho_a"), py::arg("rho_b"));

    m.def("ghz_like_probability", &ghz_like_probability, py::arg("epsilon_sq"), py::arg("n"));
    m.def("ghz_like_nmin", &ghz_like_nmin, py::arg("epsilon_sq"), py::arg("delta"));

    m.def("cat_size",
          [](int n_particles, double theta0, double sigma, double delta, RdmMode mode,
             int n_max) {
              return cat_size({n_particles, {theta0, sigma}}, delta, mode, n_max);
          },
          py::arg("n_particles"), py::arg("theta0"), py::arg("sigma"), py::arg("delta"),
          py::arg("mode") = RdmMode::FiniteN, py::arg("n_max") = 100);

    m.def("relative_cat_size",
          [](double theta0, double sigma, double delta, int n_max) {
              return relative_cat_size({theta0, sigma}, delta, n_max);
          },
          py::arg("theta0"), py::arg("sigma"), py::arg("delta"), py::arg("n_max") = 100);

    m.def("von_neumann_entropy",
          [](const py::array_t<std::complex<double>>& rho) {
              return von_neumann_entropy(from_numpy(rho));
          },
          py::arg("rho"));

    m.def("entropy_curve",
          [](double theta0, double sigma, int n_lo, int n_hi, std::optional<int> n_particles) {
              const auto curve = n_particles
                  ? entropy_curve(SuperpositionSpec{*n_particles, {theta0, sigma}}, n_lo, n_hi)
                  : entropy_curve(GaussianSpread{theta0, sigma}, n_lo, n_hi);
              return curve.values;
          },
          py::arg("theta0"), py::arg("sigma"), py::arg("n_lo"), py::arg("n_hi"),
          py::arg("n_particles") = py::none());

    m.def("disconnectivity",
          [](const std::vector<double>& entropies, double threshold) {
              EntropyCurve curve;
              for (std::size_t i = 0; i < entropies.size(); ++i)
                  curve.values.emplace_back(static_cast<int>(i) + 1, entropies[i]);
              const auto res = disconnectivity(curve, threshold);
              py::dict d;
              d["betas"] = res.betas;
              d["threshold"] = res.threshold;
              d["D"] = res.d_value;
              return d;
          },
          py::arg("entropies"), py::arg("threshold") = 0.05);

    m.def("fock_disconnectivity",
          [](const std::vector<long>& counts, double threshold) {
              return fock_disconnectivity({counts}, threshold).d_value;
          },
          py::arg("counts"), py::arg("threshold") = 0.05);

    m.def("run_protocol",
          [](const std::vector<double>& overlaps, double prior_a) {
              const auto trace = run_protocol({overlaps, prior_a});
              py::list steps;
              for (const auto& s : trace.steps)
                  steps.append(py::make_tuple(s.index, s.r, s.p));
              py::dict d;
              d["steps"] = steps;
              d["final_success_probability"] = trace.final_success_probability;
              return d;
          },
          py::arg("overlaps"), py::arg("prior_a") = 0.5);

    m.def("simulate_protocol",
          [](const std::vector<double>& overlaps, double prior_a, Branch true_branch,
             std::uint64_t seed, long trials) {
              return simulate_protocol({overlaps, prior_a}, true_branch, seed, trials);
          },
          py::arg("overlaps"), py::arg("prior_a"), py::arg("true_branch"), py::arg("seed"),
          py::arg("trials"));

    m.def("fit_number_distribution",
          [](const std::vector<double>& target, int n_particles, double theta0_step,
             double theta0_max, double sigma_step, double sigma_max,
             const std::vector<double>& deltas, RdmMode mode) {
              FitGrid grid;
              grid.theta0_step = theta0_step;
              grid.theta0_max = theta0_max;
              grid.sigma_step = sigma_step;
              grid.sigma_max = sigma_max;
              NumberDistribution dist;
              dist.probs = target;
              const auto res = fit_number_distribution(dist, n_particles, grid, deltas, mode);
              py::dict d;
              d["theta0_over_pi"] = res.theta0_over_pi;
              d["sigma_over_pi"] = res.sigma_over_pi;
              d["residual"] = res.residual;
              py::dict sizes;
              for (const auto& [delta, cs] : res.cat_sizes)
                  sizes[py::float_(delta)] = cs.cat_size();
              d["cat_sizes"] = sizes;
              return d;
          },
          py::arg("target"), py::arg("n_particles"), py::arg("theta0_step") = 0.01,
          py::arg("theta0_max") = 0.25, py::arg("sigma_step") = 0.005,
          py::arg("sigma_max") = 0.05, py::arg("deltas") = std::vector<double>{},
          py::arg("mode") = RdmMode::FiniteN);
}
