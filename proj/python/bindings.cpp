#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ssg/abelian.hpp"
#include "ssg/catalog.hpp"
#include "ssg/contraction.hpp"
#include "ssg/invsemi.hpp"
#include "ssg/schreier.hpp"
#include "ssg/selfsim.hpp"
#include "ssg/spectra.hpp"
#include "ssg/words.hpp"

namespace py = pybind11;
using namespace ssg;

namespace {

words::Alphabet alpha_of(const selfsim::Group& g) {
    return words::Alphabet{g->alphabet()};
}

selfsim::Element element(const selfsim::Group& g, const std::string& word) {
    return selfsim::parse_element(g, word);
}

contraction::Nucleus nucleus_of(const selfsim::Group& g, size_t cap) {
    auto r = contraction::nucleus(g, cap);
    if (r.exceeded)
        throw SizeBoundExceeded("nucleus candidate set passed the cap of " +
                                std::to_string(cap));
    return *r.value;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact computation with self-similar groups and semigroups "
              "defined by finite automata";

    py::register_exception<Error>(m, "DomainError");

    py::class_<selfsim::Group>(m, "Group")
        .def_property_readonly("name",
                               [](const selfsim::Group& g) { return g->name(); })
        .def_property_readonly(
            "alphabet", [](const selfsim::Group& g) { return g->alphabet(); })
        .def_property_readonly("generators",
                               [](const selfsim::Group& g) {
                                   std::vector<std::string> names;
                                   for (const auto& gen : g->generators())
                                       names.push_back(gen.name);
                                   return names;
                               })
        .def("__repr__", [](const selfsim::Group& g) {
            return "<Group " + g->name() + ">";
        });

    m.def("parse_group", &selfsim::parse_group_dsl, py::arg("text"),
          "group from its definition text");
    m.def("group_text",
          [](const selfsim::Group& g) { return selfsim::render_group_dsl(*g); });

    m.def(
        "act",
        [](const selfsim::Group& g, const std::string& word, const std::string& w) {
            auto e = element(g, word);
            if (w.find('(') != std::string::npos) {
                auto om = words::parse_omega(w, alpha_of(g));
                return words::render_omega(selfsim::act_omega(e, om));
            }
            return words::render_word(
                selfsim::act(e, words::parse_word(w, alpha_of(g))));
        },
        py::arg("group"), py::arg("element"), py::arg("word"),
        "image of a finite word or PRE(PERIOD) word under the element");

    m.def(
        "restrict",
        [](const selfsim::Group& g, const std::string& word, const std::string& at) {
            auto r = selfsim::restriction(element(g, word),
                                          words::parse_word(at, alpha_of(g)));
            return selfsim::render_element(r);
        },
        py::arg("group"), py::arg("element"), py::arg("at"));

    m.def(
        "is_trivial",
        [](const selfsim::Group& g, const std::string& word) {
            return selfsim::is_trivial(element(g, word));
        },
        py::arg("group"), py::arg("word"));

    m.def(
        "order",
        [](const selfsim::Group& g, const std::string& word, int cap) -> py::object {
            auto r = selfsim::order(element(g, word), cap);
            if (r.order) return py::int_(*r.order);
            return py::none();
        },
        py::arg("group"), py::arg("word"), py::arg("cap") = 4096,
        "order of the element, or None if no power up to cap is trivial");

    m.def(
        "nucleus",
        [](const selfsim::Group& g, size_t cap) {
            auto n = nucleus_of(g, cap);
            std::vector<std::string> words_;
            for (const auto& e : n.elements)
                words_.push_back(selfsim::render_gword(*g, e.word));
            return words_;
        },
        py::arg("group"), py::arg("cap") = 4096,
        "shortest words of the nucleus elements, identity first");

    m.def(
        "is_contracting",
        [](const selfsim::Group& g, size_t cap) -> py::object {
            auto r = contraction::is_contracting(g, cap);
            if (r.yes) return py::bool_(true);
            return py::none();
        },
        py::arg("group"), py::arg("cap") = 4096,
        "True, or None when the capped search is inconclusive");

    m.def(
        "level_order",
        [](const selfsim::Group& g, int n) {
            return py::cast(selfsim::level_quotient_order(*g, n).str());
        },
        py::arg("group"), py::arg("level"),
        "order of the induced permutation group on level n, as a decimal string");

    m.def(
        "hausdorff",
        [](const selfsim::Group& g, int n) {
            auto h = selfsim::hausdorff_estimate(*g, n);
            return std::make_tuple(h.value, h.exact, h.num, h.den);
        },
        py::arg("group"), py::arg("level"),
        "(value, exact, num, den) of the level-n dimension estimate");

    m.def(
        "schreier_edges",
        [](const selfsim::Group& g, int n) {
            auto graph = schreier::level_schreier(g, {}, n);
            return std::make_tuple(graph.names, graph.edges);
        },
        py::arg("group"), py::arg("level"),
        "(vertex names, labeled edge list) of the level-n action graph");

    m.def(
        "spectrum",
        [](const selfsim::Group& g, int n, bool normalized, double tol) {
            auto sp = spectra::eigenvalues_sym(
                spectra::hecke_matrix(g, {}, n, normalized), tol);
            return std::make_tuple(sp.values, sp.multiplicity);
        },
        py::arg("group"), py::arg("level"), py::arg("normalized") = true,
        py::arg("tol") = 1e-9,
        "(values, multiplicities) of the level-n generator-sum operator");

    m.def(
        "asymptotic_equiv",
        [](const selfsim::Group& g, const std::string& l, const std::string& r,
           size_t cap) {
            contraction::EquivalenceQuery q{
                words::parse_left(l, alpha_of(g)),
                words::parse_left(r, alpha_of(g))};
            return contraction::asymptotically_equivalent(nucleus_of(g, cap), q);
        },
        py::arg("group"), py::arg("left"), py::arg("right"), py::arg("cap") = 4096,
        "asymptotic equivalence of two (TAIL)SUFFIX boundary words");

    py::class_<abelian::DigitSystem>(m, "DigitSystem")
        .def_property_readonly("name",
                               [](const abelian::DigitSystem& d) { return d.name; })
        .def_property_readonly("dim", &abelian::DigitSystem::dim)
        .def_property_readonly("alphabet", &abelian::DigitSystem::alphabet)
        .def("__repr__", [](const abelian::DigitSystem& d) {
            return "<DigitSystem " + d.name + ">";
        });

    m.def("parse_digit_system", &catalog::parse_digit_system, py::arg("text"));
    m.def("digit_system_text", &catalog::render_digit_system, py::arg("system"));

    m.def(
        "finite_state",
        [](const abelian::DigitSystem& d) { return abelian::is_finite_state(d.A); },
        py::arg("system"));

    m.def(
        "digit_automaton",
        [](const abelian::DigitSystem& d, const std::vector<std::int64_t>& g,
           size_t cap) {
            auto r = abelian::digit_automaton(d, g, cap);
            if (r.exceeded)
                throw SizeBoundExceeded("state set passed the cap of " +
                                        std::to_string(cap));
            return std::make_tuple(r.states, r.machine.m().trans,
                                   r.machine.m().out);
        },
        py::arg("system"), py::arg("vector"), py::arg("cap") = 65536,
        "(state vectors, transition table, output table) of the adding machine");

    m.def(
        "abelian_equiv",
        [](const abelian::DigitSystem& d, const std::string& l, const std::string& r) {
            words::Alphabet a{d.alphabet()};
            return abelian::abelian_asymptotic_eq(d, words::parse_left(l, a),
                                                  words::parse_left(r, a));
        },
        py::arg("system"), py::arg("left"), py::arg("right"));

    py::class_<invsemi::RuleTable>(m, "RuleTable")
        .def_property_readonly("name", &invsemi::RuleTable::name)
        .def_property_readonly("maps",
                               [](const invsemi::RuleTable& t) {
                                   std::vector<std::string> names;
                                   for (const auto& m_ : t.maps())
                                       names.push_back(m_.name);
                                   return names;
                               })
        .def("__repr__", [](const invsemi::RuleTable& t) {
            return "<RuleTable " + t.name() + ">";
        });

    m.def("parse_rule_table", &invsemi::parse_table, py::arg("text"));
    m.def("rule_table_text", &invsemi::render_table, py::arg("table"));

    m.def(
        "apply_map",
        [](const invsemi::RuleTable& t, const std::string& map, const std::string& w) {
            auto om = words::parse_omega(w, t.sft().alphabet(), t.symbols());
            return words::render_omega(invsemi::apply_map(t, map, om), t.symbols());
        },
        py::arg("table"), py::arg("map"), py::arg("word"),
        "image of a PRE(PERIOD) word under the named partial map");

    m.def("fibonacci_successor", &invsemi::fibonacci_successor, py::arg("m"),
          py::arg("length") = 32);

    m.def("involution_check", &invsemi::involution_check, py::arg("table"),
          py::arg("map"), py::arg("depth") = 6);

    m.def("catalog_names", &catalog::names);
    m.def(
        "catalog_entry",
        [](const std::string& name) -> py::object {
            const auto& e = catalog::lookup(name);
            if (e.is_group()) return py::cast(e.group());
            if (e.is_digit_system()) return py::cast(e.digit_system());
            return py::cast(e.rule_table());
        },
        py::arg("name"), "the named group, digit system or rule table");
    m.def(
        "catalog_note",
        [](const std::string& name) { return catalog::lookup(name).note; },
        py::arg("name"));
}
