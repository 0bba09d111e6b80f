// Python bindings for the confidence-sequence engines and their helpers.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "acs/betting.hpp"
#include "acs/bootstrap.hpp"
#include "acs/preb.hpp"
#include "acs/simlab.hpp"
#include "acs/streams.hpp"

namespace py = pybind11;
using namespace acs;

namespace {

std::string interval_repr(const Interval& iv) {
    if (iv.is_empty()) return "Interval.empty()";
    std::ostringstream ss;
    ss << "Interval(" << iv.lo() << ", " << iv.hi() << ")";
    return ss.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Anytime-valid confidence sequences for means of [0,1]-bounded streams";

    py::class_<Interval>(m, "Interval")
        .def(py::init<double, double>(), py::arg("lo"), py::arg("hi"))
        .def_static("empty", &Interval::empty)
        .def_static("unit", &Interval::unit)
        .def("is_empty", &Interval::is_empty)
        .def("lo", &Interval::lo)
        .def("hi", &Interval::hi)
        .def("width", &Interval::width)
        .def("contains", &Interval::contains, py::arg("x"))
        .def("__eq__", [](const Interval& a, const Interval& b) { return a == b; })
        .def("__repr__", &interval_repr);

    py::class_<PredictableStats>(m, "PredictableStats")
        .def(py::init<>())
        .def("update", &PredictableStats::update, py::arg("x"))
        .def("mu_hat", &PredictableStats::mu_hat)
        .def("var_hat", &PredictableStats::var_hat)
        .def("count", &PredictableStats::count);

    m.def("psi_e", &psi_e, py::arg("lam"),
          "Exponential-family divergence used by the plug-in empirical Bernstein radius");
    m.def("predictable_fraction", &predictable_fraction, py::arg("stats"), py::arg("alpha"),
          "Betting fraction computed from statistics of the observations seen so far");

    py::class_<BettingConfig>(m, "BettingConfig")
        .def(py::init<>())
        .def_readwrite("grid_size", &BettingConfig::grid_size)
        .def_readwrite("theta", &BettingConfig::theta)
        .def_readwrite("trunc", &BettingConfig::trunc)
        .def_readwrite("alpha", &BettingConfig::alpha);

    py::class_<BettingEngine>(m, "BettingEngine")
        .def(py::init<BettingConfig>(), py::arg("config") = BettingConfig{})
        .def("step", &BettingEngine::step, py::arg("x"),
             "Feed one observation; returns the running-intersection interval")
        .def("current", &BettingEngine::current)
        .def("count", &BettingEngine::count)
        .def("ever_empty", &BettingEngine::ever_empty)
        .def("grid_value", &BettingEngine::grid_value, py::arg("j"))
        .def("log_wealth", &BettingEngine::log_wealth, py::arg("j"));

    py::class_<PrEbEngine>(m, "PrEbEngine")
        .def(py::init<double>(), py::arg("alpha") = 0.05)
        .def("step", &PrEbEngine::step, py::arg("x"))
        .def("current", &PrEbEngine::current)
        .def("center", &PrEbEngine::center)
        .def("radius", &PrEbEngine::radius)
        .def("ever_empty", &PrEbEngine::ever_empty);

    py::class_<BootstrapConfig>(m, "BootstrapConfig")
        .def(py::init<>())
        .def_readwrite("replicates", &BootstrapConfig::replicates)
        .def_readwrite("batches", &BootstrapConfig::batches)
        .def_readwrite("alpha", &BootstrapConfig::alpha)
        .def_readwrite("seed", &BootstrapConfig::seed);

    py::class_<BootstrapEngine>(m, "BootstrapEngine")
        .def(py::init<BootstrapConfig, std::uint64_t>(), py::arg("config") = BootstrapConfig{},
             py::arg("stream_id") = 0)
        .def("step", &BootstrapEngine::step, py::arg("x"))
        .def("current", &BootstrapEngine::current)
        .def("prefix_interval", &BootstrapEngine::prefix_interval)
        .def("count", &BootstrapEngine::count)
        .def("current_batch", &BootstrapEngine::current_batch);

    m.def("batch_index", &batch_index, py::arg("t"), py::arg("batches"));
    m.def(
        "quantile",
        [](std::vector<double> values, double q) {
            std::sort(values.begin(), values.end());
            return quantile_sorted(values, q);
        },
        py::arg("values"), py::arg("q"),
        "Linear-interpolation empirical quantile (values need not be sorted)");
    m.def(
        "bootstrap_ci",
        [](const std::vector<double>& data, const BootstrapConfig& cfg, std::uint64_t stream_id,
           std::int64_t t) { return bootstrap_ci(data, cfg, stream_id, t); },
        py::arg("data"), py::arg("config") = BootstrapConfig{}, py::arg("stream_id") = 0,
        py::arg("t") = 1);

    m.def(
        "gen_beta_stream",
        [](double a, double b, std::int64_t n, std::uint64_t seed) {
            std::vector<double> xs;
            for (const auto& rec : gen_beta_stream(a, b, n, seed)) xs.push_back(rec.x);
            return xs;
        },
        py::arg("a"), py::arg("b"), py::arg("n"), py::arg("seed"));
    m.def(
        "gen_bernoulli_stream",
        [](double p, std::int64_t n, std::uint64_t seed) {
            std::vector<double> xs;
            for (const auto& rec : gen_bernoulli_stream(p, n, seed)) xs.push_back(rec.x);
            return xs;
        },
        py::arg("p"), py::arg("n"), py::arg("seed"));
}
