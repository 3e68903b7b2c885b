#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qprime/cli.hpp"
#include "qprime/formspec.hpp"
#include "qprime/serialize.hpp"

namespace py = pybind11;
using namespace qprime;

namespace {

EisensteinConvention convention(const std::string& name)
{
    if (name == "paper") {
        return EisensteinConvention::paper;
    }
    if (name == "classical") {
        return EisensteinConvention::classical;
    }
    throw py::value_error("convention must be 'paper' or 'classical'");
}

// Everything crosses the boundary as JSON text; the Python side decodes it.
std::string expand(const std::string& spec, std::size_t precision, const std::string& conv)
{
    const auto c = convention(conv);
    return to_json(quasiform_expand(load_form(spec, c), precision, c)).dump();
}

std::string parse(const std::string& spec, const std::string& conv)
{
    return to_json(load_form(spec, convention(conv))).dump();
}

std::string decompose(const std::string& spec, std::size_t precision, const std::string& conv)
{
    const auto c = convention(conv);
    return to_json(split_eis_cusp(load_form(spec, c), precision, c)).dump();
}

std::string decide(const std::string& spec, std::uint64_t bound, bool include_small, const std::string& conv)
{
    const auto c = convention(conv);
    const QuasiForm f = load_form(spec, c);
    OmegaTildeOptions options;
    options.conv = c;
    Json j {{"omega_tilde", to_json(omega_tilde_decide(f, options))},
        {"omega_scan", to_json(omega_scan(f, bound, include_small, c))}};
    return j.dump();
}

std::string finite_check_json(const std::string& spec, std::vector<std::uint64_t> primes)
{
    const QuasiForm f = load_form(spec);
    const auto poly = prime_polynomial(f);
    if (primes.empty()) {
        primes = first_primes(static_cast<std::size_t>(poly.degree_bound) + 1);
    }
    Json j {{"finite_check", to_json(finite_check(f, primes))}, {"prime_polynomial", to_json(poly)}};
    return j.dump();
}

std::string macmahon(int a_max, std::size_t n_max)
{
    return to_json(macmahon_table(a_max, n_max)).dump();
}

std::string signstats(const std::string& spec, std::uint64_t bound, std::vector<std::uint64_t> grid,
    const std::string& conv)
{
    const auto c = convention(conv);
    if (grid.empty()) {
        grid.push_back(bound);
    }
    return to_json(partial_sum_report(load_form(spec, c), bound, grid, c)).dump();
}

std::string deligne(int weight, std::uint64_t bound)
{
    return to_json(deligne_check(weight, bound)).dump();
}

py::tuple run_cli(const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

} // namespace

PYBIND11_MODULE(_qprime, m)
{
    m.doc() = "Exact quasimodular forms of level one";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    m.def("expand", &expand, py::arg("spec"), py::arg("precision") = 20, py::arg("convention") = "paper");
    m.def("parse", &parse, py::arg("spec"), py::arg("convention") = "paper");
    m.def("decompose", &decompose, py::arg("spec"), py::arg("precision") = default_certificate_precision,
        py::arg("convention") = "paper");
    m.def("decide", &decide, py::arg("spec"), py::arg("bound") = 100, py::arg("include_small") = false,
        py::arg("convention") = "paper");
    m.def("finite_check", &finite_check_json, py::arg("spec"), py::arg("primes") = std::vector<std::uint64_t> {});
    m.def("macmahon", &macmahon, py::arg("a_max"), py::arg("n_max"));
    m.def("signstats", &signstats, py::arg("spec"), py::arg("bound"), py::arg("grid") = std::vector<std::uint64_t> {},
        py::arg("convention") = "paper");
    m.def("deligne", &deligne, py::arg("weight"), py::arg("bound"));
    m.def("run_cli", &run_cli, py::arg("args"));
}
