#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ixmult/errors.hpp"
#include "ixmult/homology.hpp"
#include "ixmult/monomial_ideal.hpp"
#include "ixmult/parser.hpp"
#include "ixmult/scheme.hpp"
#include "ixmult/script.hpp"
#include "ixmult/std_basis.hpp"

namespace py = pybind11;
using namespace ixm;

namespace {

// Thin handles: the core types hold shared_ptr<const PolyRing>, which is not a
// pybind11 holder, so the module wraps them by value.
struct PyRing {
    RingPtr ptr;
};
struct PyAffine {
    AffineScheme scheme;
};
struct PyProjective {
    ProjectiveScheme scheme;
};

Rational to_rational(const py::handle& h) {
    if (py::isinstance<py::int_>(h)) return Rational(h.cast<long>());
    if (py::isinstance<py::str>(h)) return Rational::from_string(h.cast<std::string>());
    throw UserError("coordinates must be integers or rational strings like '1/2'");
}

std::vector<Rational> to_coords(const py::sequence& seq) {
    std::vector<Rational> out;
    out.reserve(py::len(seq));
    for (const auto& h : seq) out.push_back(to_rational(h));
    return out;
}

Ideal ideal_from(const RingPtr& ring, const std::vector<std::string>& gens) {
    std::vector<Polynomial> ps;
    ps.reserve(gens.size());
    for (const auto& g : gens) ps.push_back(parse_polynomial(g, ring));
    return Ideal(ring, std::move(ps));
}

std::vector<std::string> gen_strings(const Ideal& I) {
    std::vector<std::string> out;
    out.reserve(I.gens().size());
    for (const auto& f : I.gens()) out.push_back(f.str());
    return out;
}

py::dict naive_dict(const NaiveResult& r) {
    py::dict d;
    d["value"] = r.value;
    d["on_intersection"] = r.on_intersection;
    return d;
}

py::dict serre_dict(const SerreResult& r) {
    py::dict d;
    d["chi"] = r.profile.chi;
    d["tor_lengths"] = r.profile.lengths;
    d["on_intersection"] = r.on_intersection;
    return d;
}

std::string scheme_repr(const char* kind, const Ideal& I) {
    std::string s = std::string(kind) + "(" + I.ring()->str() + "; ";
    const auto gens = gen_strings(I);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) s += ", ";
        s += gens[i];
    }
    return s + ")";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Intersection multiplicities of affine and projective schemes over Q.";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const InternalError& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        } catch (const UserError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<PyRing>(m, "Ring")
        .def(py::init([](const std::vector<std::string>& variables) {
                 return PyRing{PolyRing::make(variables)};
             }),
             py::arg("variables"))
        .def_property_readonly("variables",
                               [](const PyRing& r) { return r.ptr->var_names(); })
        .def("__repr__", [](const PyRing& r) { return r.ptr->str(); });

    py::class_<PyAffine>(m, "AffineScheme")
        .def_property_readonly(
            "generators", [](const PyAffine& s) { return gen_strings(s.scheme.ideal()); })
        .def("__repr__",
             [](const PyAffine& s) { return scheme_repr("AffineScheme", s.scheme.ideal()); });

    py::class_<PyProjective>(m, "ProjectiveScheme")
        .def_property_readonly(
            "generators", [](const PyProjective& s) { return gen_strings(s.scheme.ideal()); })
        .def("__repr__", [](const PyProjective& s) {
            return scheme_repr("ProjectiveScheme", s.scheme.ideal());
        });

    m.def(
        "affine_scheme",
        [](const PyRing& ring, const std::vector<std::string>& generators) {
            return PyAffine{AffineScheme(ideal_from(ring.ptr, generators))};
        },
        py::arg("ring"), py::arg("generators"),
        "Affine subscheme of A^n cut out by the given polynomials.");

    m.def(
        "projective_scheme",
        [](const PyRing& ring, const std::vector<std::string>& generators) {
            return PyProjective{ProjectiveScheme(ideal_from(ring.ptr, generators))};
        },
        py::arg("ring"), py::arg("generators"),
        "Projective subscheme cut out by the given homogeneous polynomials.");

    m.def(
        "naive_multiplicity",
        [](const PyAffine& y, const PyAffine& z, const py::sequence& point) {
            return naive_dict(naive_multiplicity(
                y.scheme, z.scheme, RationalPoint::affine(to_coords(point))));
        },
        py::arg("y"), py::arg("z"), py::arg("point"),
        "Length of the local ring of the intersection at an affine point.");

    m.def(
        "naive_multiplicity",
        [](const PyProjective& y, const PyProjective& z, const py::sequence& point) {
            return naive_dict(projective_naive_multiplicity(
                y.scheme, z.scheme, RationalPoint::projective(to_coords(point))));
        },
        py::arg("y"), py::arg("z"), py::arg("point"));

    m.def(
        "serre_multiplicity",
        [](const PyAffine& y, const PyAffine& z, const py::sequence& point) {
            return serre_dict(serre_multiplicity(
                y.scheme, z.scheme, RationalPoint::affine(to_coords(point))));
        },
        py::arg("y"), py::arg("z"), py::arg("point"),
        "Alternating sum of Tor lengths at the point, with the length profile.");

    m.def(
        "serre_multiplicity",
        [](const PyProjective& y, const PyProjective& z, const py::sequence& point) {
            return serre_dict(projective_serre_multiplicity(
                y.scheme, z.scheme, RationalPoint::projective(to_coords(point))));
        },
        py::arg("y"), py::arg("z"), py::arg("point"));

    m.def(
        "degree",
        [](const PyProjective& y) { return projective_degree(y.scheme.ideal()); },
        py::arg("y"), "Degree of a projective scheme, from its Hilbert series.");

    m.def(
        "eliminate",
        [](const PyRing& ring, const std::vector<std::string>& generators,
           const std::vector<std::string>& variables) {
            Ideal E = eliminate(ideal_from(ring.ptr, generators), variables);
            py::dict d;
            d["ring"] = E.ring()->str();
            d["generators"] = gen_strings(E);
            return d;
        },
        py::arg("ring"), py::arg("generators"), py::arg("variables"),
        "Generators of the ideal's intersection with the subring omitting `variables`.");

    m.def(
        "tor_length",
        [](int i, const PyRing& ring, const std::vector<std::string>& i_gens,
           const std::vector<std::string>& j_gens, const py::sequence& point) -> py::object {
            auto [local, shift] =
                localize_at_point(ring.ptr, RationalPoint::affine(to_coords(point)));
            (void)local;
            Length t = tor_length(i, shift.apply(ideal_from(ring.ptr, i_gens)),
                                  shift.apply(ideal_from(ring.ptr, j_gens)));
            if (!t.has_value()) return py::none();
            return py::int_(*t);
        },
        py::arg("i"), py::arg("ring"), py::arg("i_generators"), py::arg("j_generators"),
        py::arg("point"),
        "Length of Tor_i of the two quotients, localized at an affine point; None if "
        "infinite.");

    m.def(
        "bezout_check",
        [](const PyProjective& y, const PyProjective& z, const py::list& points) {
            std::vector<RationalPoint> pts;
            pts.reserve(py::len(points));
            for (const auto& h : points)
                pts.push_back(RationalPoint::projective(to_coords(h.cast<py::sequence>())));
            BezoutReport rep = bezout_check(y.scheme, z.scheme, pts);
            py::list mults;
            for (const auto& [pt, chi] : rep.multiplicities)
                mults.append(py::make_tuple(pt.str(), chi));
            py::dict d;
            d["deg_y"] = rep.deg_y;
            d["deg_z"] = rep.deg_z;
            d["multiplicities"] = mults;
            d["total"] = rep.total;
            d["product"] = rep.product;
            d["matches"] = rep.matches;
            return d;
        },
        py::arg("y"), py::arg("z"), py::arg("points"),
        "Sum chi over the listed points and compare with the degree product.");

    m.def("run_script", &run_script, py::arg("source"), py::arg("machine") = false,
          "Execute a script and return its text (or NDJSON machine) output.");
}
