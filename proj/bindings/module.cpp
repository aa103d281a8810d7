#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "decmon/bigint.hpp"
#include "decmon/channel.hpp"
#include "decmon/errors.hpp"
#include "decmon/code.hpp"
#include "decmon/gf2.hpp"
#include "decmon/lta.hpp"
#include "decmon/monomial.hpp"
#include "decmon/monomial_set.hpp"
#include "decmon/partition.hpp"
#include "decmon/polar.hpp"
#include "decmon/version.hpp"

namespace py = pybind11;
using namespace decmon;

namespace {

py::object to_pyint(const BigInt& x) {
    // exact arbitrary-precision round trip through the decimal string
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(x.str().c_str(), nullptr, 10));
}

std::vector<std::string> bitvec_strings(const std::vector<BitVector>& vs) {
    std::vector<std::string> out;
    out.reserve(vs.size());
    for (const auto& v : vs) out.push_back(v.str());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "decreasing monomial codes: polar construction, duality, orbits";
    mod.attr("__version__") = kVersion;

    py::register_exception<CapError>(mod, "CapError", PyExc_RuntimeError);

    py::class_<Monomial>(mod, "Monomial")
        .def(py::init<int, uint32_t>(), py::arg("m"), py::arg("mask"))
        .def_static("parse", &Monomial::parse, py::arg("m"), py::arg("text"))
        .def_property_readonly("m", &Monomial::var_count)
        .def_property_readonly("mask", &Monomial::mask)
        .def_property_readonly("degree", &Monomial::degree)
        .def("indices", &Monomial::indices)
        .def("complement", &Monomial::complement)
        .def("__str__", &Monomial::str)
        .def("__repr__", [](const Monomial& g) { return "<Monomial " + g.str() + ">"; })
        .def("__eq__", [](const Monomial& a, const Monomial& b) { return a == b; });

    mod.def("weak_leq", &weak_leq, "divisibility order");
    mod.def("leq", &leq, "the refined monomial order");

    py::class_<MonomialSet>(mod, "MonomialSet")
        .def(py::init<int, std::vector<uint32_t>>(), py::arg("m"), py::arg("masks"))
        .def_property_readonly("m", &MonomialSet::var_count)
        .def_property_readonly("masks", [](const MonomialSet& s) { return s.masks(); })
        .def("__len__", &MonomialSet::size)
        .def("contains", &MonomialSet::contains);

    mod.def("is_decreasing", &is_decreasing);
    mod.def("is_weakly_decreasing", &is_weakly_decreasing);
    mod.def("decreasing_closure", &decreasing_closure);
    mod.def("interval", &interval);

    py::class_<Partition>(mod, "Partition")
        .def_readonly("rows", &Partition::rows)
        .def_readonly("width", &Partition::width)
        .def_readonly("parts", &Partition::parts)
        .def_property_readonly("size", &Partition::size);
    mod.def("young_partition", &young_partition);
    mod.def("gaussian_binomial",
            [](int m, int r) { return to_pyint(gaussian_binomial(m, r)); });

    py::class_<MonomialCode>(mod, "MonomialCode")
        .def(py::init<MonomialSet>())
        .def(py::init([](int m, const std::vector<uint32_t>& masks) {
                 return MonomialCode(MonomialSet(m, masks));
             }),
             py::arg("m"), py::arg("masks"))
        .def_static("reed_muller", &MonomialCode::reed_muller, py::arg("r"), py::arg("m"))
        .def_property_readonly("m", &MonomialCode::var_count)
        .def_property_readonly("length", &MonomialCode::length)
        .def_property_readonly("dimension", &MonomialCode::dimension)
        .def_property_readonly("masks",
                               [](const MonomialCode& c) { return c.monomials().masks(); })
        .def_property_readonly("decreasing", &MonomialCode::decreasing)
        .def_property_readonly("weakly_decreasing", &MonomialCode::weakly_decreasing)
        .def("__eq__", [](const MonomialCode& a, const MonomialCode& b) { return a == b; });

    mod.def("dual", &dual);
    mod.def("r_plus", &r_plus);
    mod.def("r_minus", &r_minus);
    mod.def("min_distance", &min_distance);
    mod.def("weakly_self_dual", &weakly_self_dual);
    mod.def("min_weight_count",
            [](const MonomialCode& c) { return to_pyint(min_weight_count(c)); });
    mod.def("min_weight_bruteforce", [](const MonomialCode& c) {
        auto r = min_weight_bruteforce(c.monomials());
        return py::make_tuple(r.distance, to_pyint(r.count));
    });
    mod.def("generator_matrix_text",
            [](const MonomialCode& c) { return generator_matrix(c.monomials()).str(); });
    mod.def("evaluate", [](const Monomial& g) { return evaluate(g).str(); });

    mod.def("orbit_size", [](const Monomial& g) { return to_pyint(orbit_size(g)); });
    mod.def("orbit_enumerate", [](const Monomial& g) {
        std::vector<std::vector<uint32_t>> out;
        for (const auto& p : orbit_enumerate(g)) out.push_back(p.terms());
        return out;
    });
    mod.def("min_weight_enumerate",
            [](const MonomialCode& c) { return bitvec_strings(min_weight_enumerate(c)); });

    py::class_<SymmetricChannel>(mod, "SymmetricChannel")
        .def(py::init<std::vector<double>, std::vector<double>, std::vector<uint32_t>>(),
             py::arg("p0"), py::arg("p1"), py::arg("involution"))
        .def_property_readonly("alphabet_size", &SymmetricChannel::alphabet_size)
        .def("bhattacharyya", &SymmetricChannel::bhattacharyya);
    mod.def("make_bec", &make_bec, py::arg("p"));
    mod.def("make_bsc", &make_bsc, py::arg("p"));
    mod.def("parse_channel_spec", &parse_channel_spec);
    mod.def("transform_minus",
            [](const SymmetricChannel& W) { return transform_minus(W); });
    mod.def("transform_plus",
            [](const SymmetricChannel& W) { return transform_plus(W); });
    mod.def("sign_sequence", [](const Monomial& g) { return sign_sequence(g).str(); });
    mod.def("synthesize_bit_channel",
            [](const SymmetricChannel& W, const Monomial& g) {
                return synthesize_bit_channel(W, g);
            });
    mod.def("rank_monomials", [](const SymmetricChannel& W, int m) {
        std::vector<std::pair<uint32_t, double>> out;
        for (const auto& r : rank_monomials(W, m)) out.emplace_back(r.mask, r.b);
        return out;
    });
    mod.def("construct_polar",
            [](const SymmetricChannel& W, int m, uint64_t k) {
                return construct_polar(W, m, k);
            },
            py::arg("channel"), py::arg("m"), py::arg("k"));
    mod.def("monte_carlo_bhattacharyya",
            [](const SymmetricChannel& W, const Monomial& g, uint64_t samples, uint64_t seed) {
                auto r = monte_carlo_bhattacharyya(W, g, samples, seed);
                return py::make_tuple(r.estimate, r.std_error);
            },
            py::arg("channel"), py::arg("g"), py::arg("samples") = 1000000,
            py::arg("seed") = 1);
}
