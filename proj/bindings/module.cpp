#include <pybind11/pybind11.h>

#include <sstream>

#include "m0n/basis.hpp"
#include "m0n/errors.hpp"
#include "m0n/fcurve.hpp"
#include "m0n/invariant.hpp"
#include "m0n/io.hpp"
#include "m0n/keel.hpp"
#include "m0n/lm.hpp"
#include "m0n/perm.hpp"
#include "m0n/search.hpp"

namespace py = pybind11;
using namespace m0n;

namespace {

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace

PYBIND11_MODULE(_m0n, m) {
    m.doc() = "group-invariant curve classes and toric limits on moduli of pointed rational curves";

    py::register_exception<SizeOutOfRange>(m, "SizeOutOfRange", PyExc_ValueError);
    py::register_exception<EmptyOrFull>(m, "EmptyOrFull", PyExc_ValueError);
    py::register_exception<AdjacentDivisor>(m, "AdjacentDivisor", PyExc_ValueError);
    py::register_exception<InvalidPartition>(m, "InvalidPartition", PyExc_ValueError);
    py::register_exception<BadSize>(m, "BadSize", PyExc_ValueError);
    py::register_exception<NotACurve>(m, "NotACurve", PyExc_ValueError);
    py::register_exception<NotOneDimensional>(m, "NotOneDimensional", PyExc_ValueError);
    py::register_exception<DegenerateFamily>(m, "DegenerateFamily", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<Timeout>(m, "Timeout", PyExc_RuntimeError);
    py::register_exception<BudgetExhausted>(m, "BudgetExhausted", PyExc_RuntimeError);
    py::register_exception<GermDepthExceeded>(m, "GermDepthExceeded", PyExc_RuntimeError);
    py::register_exception<UnsupportedFieldExtension>(m, "UnsupportedFieldExtension", PyExc_RuntimeError);
    py::register_exception<UnsupportedExceptionalLocus>(m, "UnsupportedExceptionalLocus", PyExc_RuntimeError);

    m.def("basis_size", [](int n) {
        return nonadjacent_basis(n).size();
    }, py::arg("n"));

    m.def("divisor_count", [](int n) {
        return DivisorTable::get(n).divisors.size();
    }, py::arg("n"));

    m.def("cyclic_class", [](int n, const std::string& g) {
        return curve_class_json(cyclic_fixed_class(parse_cycles(g, n)));
    }, py::arg("n"), py::arg("generator"));

    m.def("dihedral_class", [](int n, const std::string& g1, const std::string& g2) {
        return curve_class_json(dihedral_fixed_class(parse_cycles(g1, n), parse_cycles(g2, n)));
    }, py::arg("n"), py::arg("g1"), py::arg("g2"));

    m.def("cyclic_effective", [](int n, const std::string& g) {
        return expression_json(cyclic_effective_expression(parse_cycles(g, n)), n);
    }, py::arg("n"), py::arg("generator"));

    m.def("expand", [](const std::string& class_json) {
        CurveClass c = curve_class_from_json(class_json);
        return expression_json(expand_in_dual_basis(c), c.n);
    }, py::arg("class_json"));

    m.def("dual_expression", [](int n, const std::string& labels) {
        mask_t I = canonical_divisor(parse_label_set(labels, n), n);
        return expression_json(dual_basis_expression(I, n), n);
    }, py::arg("n"), py::arg("labels"));

    m.def("class_of_expression", [](const std::string& expr_json) {
        auto [e, n] = expression_from_json(expr_json);
        return curve_class_json(class_of(e, n));
    }, py::arg("expr_json"));

    m.def("deficiency_of", [](const std::string& expr_json) {
        auto [e, n] = expression_from_json(expr_json);
        (void)n;
        return deficiency(e);
    }, py::arg("expr_json"));

    m.def("kappa", [](const std::string& class_json) {
        return rat_str(kappa_pairing(curve_class_from_json(class_json)));
    }, py::arg("class_json"));

    m.def("psi", [](const std::string& class_json) {
        return rat_str(psi_pairing(curve_class_from_json(class_json)));
    }, py::arg("class_json"));

    m.def("kollar", [](const std::string& class_json) {
        return rat_str(kollar_bound(curve_class_from_json(class_json)));
    }, py::arg("class_json"));

    m.def("seek_effective", [](const std::string& expr_json, int max_level,
                               long long node_budget, bool restart) {
        auto [e, n] = expression_from_json(expr_json);
        SearchConfig cfg;
        cfg.max_level = max_level;
        cfg.node_budget = node_budget;
        cfg.restart = restart;
        SearchResult r = seek_effective_expression(e, n, cfg);
        return search_result_json(r, n);
    }, py::arg("expr_json"), py::arg("max_level") = 4,
       py::arg("node_budget") = 5'000'000LL, py::arg("restart") = true);

    m.def("keel_relations", [](int n, const std::string& f, const std::string& g) {
        auto rels = keel_relations_containing(fcurve_from_text(f, n), fcurve_from_text(g, n), n);
        std::string out = "[";
        for (size_t i = 0; i < rels.size(); ++i) {
            if (i) out += ",";
            out += expression_json(keel_expression(rels[i], n), n);
        }
        return out + "]";
    }, py::arg("n"), py::arg("f"), py::arg("g"));

    m.def("degenerate", [](const std::string& family_json, bool steps) {
        auto [fam, order] = family_from_json(family_json);
        (void)order;
        DegenerationResult r = degenerate(fam);
        if (steps) return degeneration_json(r, fam.n, fam.heavy0, fam.heavy_inf);
        return cycle_json(CycleData{fam.n, fam.heavy0, fam.heavy_inf, r.final_cycle});
    }, py::arg("family_json"), py::arg("steps") = false);

    m.def("lift", [](const std::string& cycle_json_s, const std::string& class_json) {
        CycleData cd = cycle_from_json(cycle_json_s);
        CurveClass c = curve_class_from_json(class_json);
        return expression_json(lift_cycle(cd.components, cd.h0, cd.hinf, c), c.n);
    }, py::arg("cycle_json"), py::arg("class_json"));

    m.def("stabilizer_order", [](const std::string& class_json, bool exhaustive, long long timeout_ms) {
        return stabilizer_order(curve_class_from_json(class_json), exhaustive, timeout_ms);
    }, py::arg("class_json"), py::arg("exhaustive") = false, py::arg("timeout_ms") = 0LL);

    m.def("fcurve_to_text", [](const std::string& expr_json) {
        auto [e, n] = expression_from_json(expr_json);
        (void)n;
        return expression_text(e);
    }, py::arg("expr_json"));
}
