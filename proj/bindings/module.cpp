#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ytl/lr.hpp"
#include "ytl/monomials.hpp"
#include "ytl/permutation.hpp"
#include "ytl/rep_theory.hpp"
#include "ytl/tableau.hpp"
#include "ytl/verify.hpp"

namespace py = pybind11;
using namespace ytl;

namespace {

py::int_ to_py(const Integer& v) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

Partition make_partition(const std::vector<int>& parts) { return Partition(parts); }

DPartition make_d_partition(const std::vector<std::vector<int>>& comps) {
    std::vector<Partition> out;
    out.reserve(comps.size());
    for (const auto& c : comps) out.push_back(Partition(c));
    return DPartition(std::move(out));
}

CyclePattern make_pattern(const std::vector<std::pair<int, int>>& cycles) {
    return CyclePattern(cycles);
}

std::vector<std::pair<int, int>> pattern_out(const CyclePattern& p) {
    return p.cycles;
}

std::vector<Rational> parse_u_values(const std::vector<std::string>& texts) {
    std::vector<Rational> out;
    for (const auto& t : texts) {
        Rational r = parse_rational(t);
        validate_u0(r);
        out.push_back(r);
    }
    return out;
}

py::list check_items_py(const std::vector<CheckItem>& items) {
    py::list out;
    for (const auto& item : items) {
        py::dict row;
        row["name"] = item.name;
        row["pass"] = item.pass;
        out.append(row);
    }
    return out;
}

py::dict report_to_dict(const FullReport& rep) {
    py::dict out;
    py::dict dims;
    dims["algebra"] = to_py(rep.dimensions.algebra_dim);
    dims["expected_quotient"] = to_py(rep.dimensions.expected_quotient_dim);
    dims["sum_of_squares"] = to_py(rep.dimensions.sum_squares);
    py::list us;
    for (const auto& u : rep.dimensions.u_values) us.append(u.get_str());
    dims["u_values"] = us;
    dims["ranks"] = rep.dimensions.ranks;
    py::list qdims;
    for (const auto& q : rep.dimensions.quotient_dims) qdims.append(to_py(q));
    dims["quotient_dimensions"] = qdims;
    dims["pass"] = rep.dimensions.pass;
    out["dimensions"] = dims;

    py::dict indep;
    indep["u"] = rep.independence.u0.get_str();
    indep["basis_size"] = rep.independence.basis_size;
    indep["independent"] = rep.independence.independent;
    indep["dependent_positions"] = rep.independence.dependent_positions;
    indep["pass"] = rep.independence.pass;
    out["basis_independence"] = indep;

    py::dict ledger;
    ledger["u"] = rep.ledger.u0.get_str();
    ledger["items"] = check_items_py(rep.ledger.checks);
    ledger["pass"] = rep.ledger.pass;
    out["relation_ledger"] = ledger;

    py::dict defining;
    defining["items"] = check_items_py(rep.defining.checks);
    defining["pass"] = rep.defining.pass;
    out["defining_relations"] = defining;

    py::dict spanning;
    spanning["trials"] = rep.spanning.trials;
    spanning["seed"] = rep.spanning.seed;
    spanning["failures"] = rep.spanning.failures;
    spanning["pass"] = rep.spanning.pass;
    out["word_spanning"] = spanning;

    if (rep.symbolic_rank) {
        out["symbolic_rank"] = *rep.symbolic_rank;
        out["symbolic_rank_matches"] = rep.symbolic_rank_matches;
    }
    out["pass"] = rep.pass;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact computations in the framed diagram quotient algebra";

    m.def("catalan", [](int n) { return to_py(catalan(n)); }, py::arg("n"));
    m.def(
        "dimension_formula",
        [](int d, int n) { return to_py(ytl_dimension_formula(d, n)); },
        py::arg("d"), py::arg("n"));
    m.def(
        "dimension_sum_squares",
        [](int d, int n) { return to_py(ytl_dimension_sum_squares(d, n)); },
        py::arg("d"), py::arg("n"));

    m.def(
        "partitions",
        [](int n) {
            std::vector<std::vector<int>> out;
            for (const auto& p : enumerate_partitions(n)) out.push_back(p.parts);
            return out;
        },
        py::arg("n"));
    m.def(
        "standard_tableaux_count",
        [](const std::vector<int>& shape) {
            return to_py(standard_tableaux_count(make_partition(shape)));
        },
        py::arg("shape"));
    m.def(
        "standard_d_tableaux_count",
        [](const std::vector<std::vector<int>>& shape) {
            return to_py(standard_d_tableaux_count(make_d_partition(shape)));
        },
        py::arg("shape"));

    m.def(
        "lr_coefficient",
        [](const std::vector<int>& lambda, const std::vector<int>& mu,
           const std::vector<int>& nu) {
            return to_py(lr_coefficient(make_partition(lambda), make_partition(mu),
                                        make_partition(nu)));
        },
        py::arg("lam"), py::arg("mu"), py::arg("nu"));
    m.def(
        "restriction_multiplicities",
        [](const std::vector<std::vector<int>>& lambda) {
            py::list out;
            for (const auto& [nu, c] :
                 restriction_multiplicities(make_d_partition(lambda)))
                out.append(py::make_tuple(nu.parts, to_py(c)));
            return out;
        },
        py::arg("lam"));
    m.def(
        "pieri_summands",
        [](const std::vector<std::vector<int>>& mu, int l) {
            std::vector<std::vector<std::vector<int>>> out;
            for (const auto& s : pieri_summands(make_d_partition(mu), l)) {
                std::vector<std::vector<int>> tuple;
                for (const auto& comp : s.components) tuple.push_back(comp.parts);
                out.push_back(std::move(tuple));
            }
            return out;
        },
        py::arg("mu"), py::arg("l"));

    m.def(
        "surviving_shapes",
        [](int d, int n) {
            py::list out;
            for (const auto& member : r_set(d, n).members) {
                py::dict row;
                std::vector<std::vector<int>> shape;
                for (const auto& comp : member.shape.components)
                    shape.push_back(comp.parts);
                row["shape"] = shape;
                row["family"] = member.family == IrrepFamily::single_component
                                    ? "single_component"
                                    : "two_single_columns";
                row["dimension"] = to_py(standard_d_tableaux_count(member.shape));
                out.append(row);
            }
            return out;
        },
        py::arg("d"), py::arg("n"));

    m.def(
        "z_row",
        [](int n) {
            py::list out;
            for (const auto& z : z_row(n)) out.append(to_py(z));
            return out;
        },
        py::arg("n"));
    m.def(
        "patterns",
        [](int n) {
            std::vector<std::vector<std::pair<int, int>>> out;
            for (const auto& p : enumerate_tn(n)) out.push_back(p.cycles);
            return out;
        },
        py::arg("n"));
    m.def(
        "monomial_block_size",
        [](int d, int n, int m) { return to_py(monomial_set_size(d, n, m)); },
        py::arg("d"), py::arg("n"), py::arg("m"));
    m.def(
        "quotient_basis",
        [](int d, int n) {
            py::list out;
            for (const auto& b : enumerate_quotient_basis(d, n))
                out.append(py::make_tuple(b.framing, pattern_out(b.pattern)));
            return out;
        },
        py::arg("d"), py::arg("n"));

    m.def(
        "pattern_to_permutation",
        [](const std::vector<std::pair<int, int>>& cycles, int n) {
            return pattern_to_permutation(make_pattern(cycles), n).img;
        },
        py::arg("pattern"), py::arg("n"));
    m.def(
        "permutation_to_pattern",
        [](const std::vector<int>& images) {
            return pattern_out(permutation_to_pattern(Permutation(images)));
        },
        py::arg("images"));

    m.def(
        "ideal_rank",
        [](int d, int n, const std::string& u) {
            Rational u0 = parse_rational(u);
            validate_u0(u0);
            return QuotientWorkspace(d, n, u0).ideal_rank();
        },
        py::arg("d"), py::arg("n"), py::arg("u"));
    m.def(
        "verify",
        [](int d, int n, const std::vector<std::string>& u_values, bool symbolic,
           std::uint64_t seed) {
            return report_to_dict(
                run_full_verification(d, n, parse_u_values(u_values), symbolic, seed));
        },
        py::arg("d"), py::arg("n"), py::arg("u_values") = std::vector<std::string>{},
        py::arg("symbolic") = false, py::arg("seed") = 0);
}
