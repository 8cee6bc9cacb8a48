#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "bellpoly/bounds.hpp"
#include "bellpoly/correlation.hpp"
#include "bellpoly/polyhedra.hpp"
#include "bellpoly/strategies.hpp"
#include "bellpoly/symmetry.hpp"

namespace py = pybind11;
using namespace bellpoly;

namespace {

py::object fraction(const Rational& r) {
    // Leaked so it is never released after interpreter shutdown.
    static const auto* cls = new py::object(py::module_::import("fractions").attr("Fraction"));
    return (*cls)(to_string(r));
}

py::int_ pyint(const Integer& z) { return py::int_(py::str(to_string(z))); }

Rational rational(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

Integer integer(const py::handle& h) { return parse_integer(py::str(h).cast<std::string>()); }

py::list fractions(const RationalVector& v) {
    py::list out;
    for (const auto& x : v) out.append(fraction(x));
    return out;
}

RationalVector rationals(const py::sequence& s) {
    RationalVector out;
    for (const auto& h : s) out.push_back(rational(h));
    return out;
}

py::list point_list(const std::vector<ReducedPoint>& pts) {
    py::list out;
    for (const auto& p : pts) out.append(fractions(p.coords));
    return out;
}

VRep vrep(const py::sequence& points) {
    VRep v;
    for (const auto& p : points) v.points.push_back(rationals(p.cast<py::sequence>()));
    if (v.points.empty()) throw std::invalid_argument("empty point list");
    v.dimension = v.points.front().size();
    v.validate();
    return v;
}

py::tuple inequality(const LinearInequality& q) {
    py::list c;
    for (const auto& x : q.coeffs) c.append(pyint(x));
    return py::make_tuple(c, pyint(q.bound));
}

LinearInequality to_inequality(const py::handle& h) {
    const auto t = h.cast<py::sequence>();
    IntegerVector c;
    for (const auto& x : t[0].cast<py::sequence>()) c.push_back(integer(x));
    return LinearInequality::make(c, integer(t[1]));
}

py::tuple equation(const LinearEquation& e) {
    py::list c;
    for (const auto& x : e.coeffs) c.append(pyint(x));
    return py::make_tuple(c, pyint(e.rhs));
}

LinearEquation to_equation(const py::handle& h) {
    const auto t = h.cast<py::sequence>();
    IntegerVector c;
    for (const auto& x : t[0].cast<py::sequence>()) c.push_back(integer(x));
    return LinearEquation::make(c, integer(t[1]));
}

// Tables cross the boundary as {"scenario": (ma, mb, ka, kb), "p": {(a, b, i, j): Fraction}}.
py::dict table_dict(const CorrelationTable& t) {
    const Scenario& sc = t.scenario();
    py::dict p;
    for (int i = 0; i < sc.ma; ++i)
        for (int j = 0; j < sc.mb; ++j)
            for (int a = 0; a < sc.ka; ++a)
                for (int b = 0; b < sc.kb; ++b) p[py::make_tuple(a, b, i, j)] = fraction(t.at(a, b, i, j));
    py::dict out;
    out["scenario"] = py::make_tuple(sc.ma, sc.mb, sc.ka, sc.kb);
    out["p"] = p;
    return out;
}

CorrelationTable table(const py::dict& d) {
    const auto s = d["scenario"].cast<std::vector<int>>();
    if (s.size() != 4) throw std::invalid_argument("scenario needs four counts");
    const Scenario sc{s[0], s[1], s[2], s[3]};
    sc.validate();
    CorrelationTable t(sc);
    for (const auto& [key, value] : d["p"].cast<py::dict>()) {
        const auto k = key.cast<std::vector<int>>();
        if (k.size() != 4) throw std::invalid_argument("entry keys are (a, b, i, j)");
        (void)t.checked(k[0], k[1], k[2], k[3]);
        t.entry(t.index(k[0], k[1], k[2], k[3])) = rational(value);
    }
    return t;
}

Space space_of(const std::string& s) { return parse_space(s); }

}  // namespace

PYBIND11_MODULE(_bellpoly, m) {
    m.doc() = "Exact correlation polytopes with classical communication";

    m.def("stirling", [](int n, int k) { return pyint(stirling_second_kind(n, k)); }, py::arg("n"), py::arg("k"));

    m.def(
        "lsr_vertices",
        [](int ma, int mb, const std::string& space) {
            return point_list(project_all(space_of(space), enumerate_lsr_vertices(Scenario{ma, mb, 2, 2})));
        },
        py::arg("ma"), py::arg("mb"), py::arg("space") = "bidir");
    m.def(
        "fixed_vertices",
        [](int ma, int mb, int bits, const std::string& direction) {
            Direction d;
            if (direction == "a>b")
                d = Direction::alice_to_bob;
            else if (direction == "b>a")
                d = Direction::bob_to_alice;
            else
                throw std::invalid_argument("direction is 'a>b' or 'b>a'");
            return point_list(enumerate_fixed_cc_vertices(Scenario{ma, mb, 2, 2}, d, bits));
        },
        py::arg("ma"), py::arg("mb"), py::arg("bits") = 1, py::arg("direction") = "a>b");
    m.def(
        "bidir_vertices",
        [](int ma, int mb, int bits) { return point_list(enumerate_bidir_cc_vertices(Scenario{ma, mb, 2, 2}, bits)); },
        py::arg("ma"), py::arg("mb"), py::arg("bits") = 1);

    m.def("affine_dimension", [](const py::sequence& points) { return affine_dimension(vrep(points)); });

    m.def("facets", [](const py::sequence& points) {
        HRep h;
        const VRep v = vrep(points);
        {
            py::gil_scoped_release release;
            h = facets_from_vertices(v);
        }
        py::list ineqs, eqs;
        for (const auto& q : h.inequalities) ineqs.append(inequality(q));
        for (const auto& e : h.equations) eqs.append(equation(e));
        py::dict out;
        out["inequalities"] = ineqs;
        out["equations"] = eqs;
        return out;
    });

    m.def(
        "classes",
        [](const py::sequence& inequalities, int ma, int mb, const std::string& space, const py::sequence& equations) {
            std::vector<LinearInequality> qs;
            for (const auto& h : inequalities) qs.push_back(to_inequality(h));
            std::vector<LinearEquation> es;
            for (const auto& h : equations) es.push_back(to_equation(h));
            py::list out;
            for (const auto& c : partition_into_classes(qs, Scenario{ma, mb, 2, 2}, space_of(space), es)) {
                py::dict d;
                d["representative"] = inequality(c.representative);
                d["members"] = c.members;
                d["orbit_size"] = c.orbit_size;
                d["trivial"] = c.trivial;
                out.append(d);
            }
            return out;
        },
        py::arg("inequalities"), py::arg("ma"), py::arg("mb"), py::arg("space"),
        py::arg("equations") = py::list());

    m.def("membership", [](const py::sequence& x, const py::sequence& points) -> py::tuple {
        const VRep v = vrep(points);
        const RationalVector p = rationals(x);
        const MembershipResult r = membership(p, v);
        if (const auto* in = std::get_if<Inside>(&r)) {
            py::list w;
            for (const auto& [k, val] : in->weights) w.append(py::make_tuple(k, fraction(val)));
            return py::make_tuple("inside", w);
        }
        return py::make_tuple("outside", inequality(std::get<Outside>(r).separator));
    });

    m.def("hat_distribution", [](int ma, int mb) { return table_dict(hat_distribution(ma, mb)); });
    m.def("uniform_table", [](int ma, int mb) { return table_dict(CorrelationTable::uniform(Scenario{ma, mb, 2, 2})); });

    m.def(
        "project",
        [](const py::dict& t, const std::string& space) { return fractions(project(space_of(space), table(t)).coords); },
        py::arg("table"), py::arg("space") = "bidir");

    m.def("no_signaling", [](const py::dict& t) {
        const auto f = check_no_signaling(table(t));
        return py::make_tuple(f.alice_marginal_well_defined, f.bob_marginal_well_defined);
    });

    m.def("simulate", [](const py::dict& t) {
        const CorrelationTable in = table(t);
        const StrategyEnsemble e = bacon_toner_ensemble(in);
        int bits = 0;
        for (const auto& [w, s] : e.entries) bits = std::max(bits, std::get<FixedCcStrategy>(s).bit_cost());
        py::dict out;
        out["bits"] = bits;
        out["strategies"] = e.entries.size();
        out["exact"] = ensemble_to_table(e) == in;
        return out;
    });

    m.def(
        "lower_bound",
        [](int ma, int mb, int bits) {
            const LowerBoundReport r = lower_bound_report(ma, mb, bits);
            py::dict out;
            out["roles_swapped"] = r.roles_swapped;
            out["exhaustive_ran"] = r.exhaustive_ran;
            out["exhaustive_refuted"] = r.exhaustive_refuted;
            out["strategies_checked"] = r.strategies_checked;
            out["certificates_hold"] = r.certificates_hold;
            out["lp_outside"] = r.lp_outside;
            out["agree"] = r.agree();
            out["separator"] = r.separator ? py::object(inequality(*r.separator)) : py::none();
            return out;
        },
        py::arg("ma"), py::arg("mb"), py::arg("bits"));

    py::register_exception<std::domain_error>(m, "DomainError", PyExc_ValueError);
}
