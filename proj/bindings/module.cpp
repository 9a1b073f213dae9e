#include <pybind11/pybind11.h>

#include "pfaffian/reports.hpp"

namespace py = pybind11;
using namespace pfaffian;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::object: {
            py::dict d;
            for (const auto& [key, value] : j.items()) d[py::str(key)] = json_to_py(value);
            return d;
        }
        case Json::value_t::array: {
            py::list l;
            for (const auto& v : j) l.append(json_to_py(v));
            return l;
        }
        case Json::value_t::string:
            return py::str(j.get<std::string>());
        case Json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case Json::value_t::number_integer:
        case Json::value_t::number_unsigned:
            return py::int_(j.get<std::int64_t>());
        case Json::value_t::number_float:
            return py::float_(j.get<double>());
        default:
            return py::none();
    }
}

Subexpression gamma_or_default(const std::string& gamma, std::size_t len) {
    if (gamma.empty()) {
        Subexpression g;
        g.take.assign(len, false);
        return g;
    }
    return parse_subexpression(gamma);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Poisson structures, Pfaffians and Frobenius splittings on flag-variety charts";

    py::register_exception<Error>(m, "PfaffianError");

    m.def(
        "chart",
        [](const std::string& type, const std::string& word, const std::string& gamma) {
            RootSystem rs = RootSystem::from_label(type);
            WeylWord u = parse_word(word);
            return json_to_py(chart_report(rs, u, gamma_or_default(gamma, u.size())));
        },
        py::arg("type"), py::arg("word"), py::arg("gamma") = "",
        "Bracket coefficients, weights and eigenvalues of a Bott-Samelson chart");

    m.def(
        "split",
        [](const std::string& type, const std::string& word, const std::string& gamma,
           std::int64_t prime) {
            RootSystem rs = RootSystem::from_label(type);
            WeylWord u = parse_word(word);
            return json_to_py(split_report(rs, u, gamma_or_default(gamma, u.size()), prime));
        },
        py::arg("type"), py::arg("word"), py::arg("gamma"), py::arg("prime"),
        "Pfaffian certificate and Frobenius splitting verdict for a chart");

    m.def(
        "split_data",
        [](const std::string& json_text, std::int64_t prime) {
            CGLData d = cgl_from_json(json_text);
            std::int64_t p = prime ? prime : d.prime;
            if (p == 0) throw ParseError("no prime given");
            return json_to_py(split_report(d, p));
        },
        py::arg("json_text"), py::arg("prime") = 0,
        "Same pipeline on custom chart data serialized as JSON");

    m.def(
        "gu_split",
        [](const std::string& type, std::int64_t prime) {
            return json_to_py(gu_split_report(RootSystem::from_label(type), prime));
        },
        py::arg("type"), py::arg("prime"),
        "Splitting of the basic affine space chart via the mixed structure");

    m.def(
        "leaves",
        [](const std::string& type, const std::string& space) {
            if (space != "gu" && space != "gb") throw ParseError("space must be 'gu' or 'gb'");
            return json_to_py(leaves_report(RootSystem::from_label(type),
                                            space == "gu" ? Space::GU : Space::GB));
        },
        py::arg("type"), py::arg("space") = "gu", "Torus leaf enumeration by Bruhat pairs");
}
