#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "goodpoly/families.hpp"
#include "goodpoly/json_io.hpp"
#include "goodpoly/random.hpp"
#include "goodpoly/tableaux.hpp"
#include "goodpoly/verifier.hpp"

namespace py = pybind11;
namespace gp = goodpoly;

namespace {

py::object int_to_py(const gp::Int& value) {
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(value.str().c_str(), nullptr, 10));
}

gp::Int int_from_py(const py::object& value) {
    return gp::Int(py::str(value).cast<std::string>());
}

gp::Partition as_partition(const std::vector<std::int64_t>& parts) {
    return gp::Partition(parts);
}

gp::SchurCombination as_combination(
    std::size_t m,
    const std::vector<std::pair<py::object, std::vector<std::int64_t>>>& terms) {
    std::vector<gp::SchurTerm> converted;
    converted.reserve(terms.size());
    for (const auto& [coeff, partition] : terms)
        converted.push_back({int_from_py(coeff), gp::Partition(partition)});
    return gp::SchurCombination(m, std::move(converted));
}

py::list combination_to_py(const gp::SchurCombination& f) {
    py::list out;
    for (const auto& term : f.terms)
        out.append(py::make_tuple(int_to_py(term.coeff), term.partition.parts));
    return out;
}

py::list tableau_to_py(const gp::Tableau& t) {
    py::list rows;
    for (const auto& row : t.rows) rows.append(py::cast(row));
    return rows;
}

gp::Tableau tableau_from_py(const std::vector<std::vector<int>>& rows) {
    return gp::Tableau{rows};
}

py::dict polynomial_to_py(const gp::SparsePolynomial& f) {
    py::dict out;
    for (const auto& [e, c] : f.terms) out[py::tuple(py::cast(e))] = int_to_py(c);
    return out;
}

py::object json_to_py(const gp::json& j) {
    auto loads = py::module_::import("json").attr("loads");
    return loads(j.dump());
}

gp::LatticePolytope as_polytope(std::size_t m, const std::vector<gp::Vec>& gens) {
    return gp::LatticePolytope(m, gens);
}

} // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Schur expansions, Newton polytopes, and exact SNP/IDP checks";

    // partitions and orders
    mod.def(
        "dominates",
        [](const std::vector<std::int64_t>& beta, const std::vector<std::int64_t>& alpha) {
            return gp::dominates(as_partition(beta), as_partition(alpha));
        },
        py::arg("beta"), py::arg("alpha"));
    mod.def(
        "contains",
        [](const std::vector<std::int64_t>& beta, const std::vector<std::int64_t>& alpha) {
            return gp::contains(as_partition(beta), as_partition(alpha));
        },
        py::arg("beta"), py::arg("alpha"));
    mod.def(
        "generate_chain",
        [](const std::vector<std::int64_t>& alpha, const std::vector<std::int64_t>& beta) {
            py::list out;
            for (const auto& step : gp::generate_chain(as_partition(alpha), as_partition(beta)).steps)
                out.append(step.parts);
            return out;
        },
        py::arg("alpha"), py::arg("beta"));
    mod.def(
        "check_chain",
        [](const std::vector<std::vector<std::int64_t>>& steps,
           const std::vector<std::int64_t>& alpha, const std::vector<std::int64_t>& beta) {
            gp::BoxChain chain;
            for (const auto& s : steps) chain.steps.push_back(gp::Partition(s));
            auto res = gp::check_chain(chain, as_partition(alpha), as_partition(beta));
            return py::make_tuple(res.ok, res.failing_index
                                              ? py::object(py::cast(*res.failing_index))
                                              : py::none());
        },
        py::arg("chain"), py::arg("alpha"), py::arg("beta"));
    mod.def(
        "subchain",
        [](const std::vector<std::int64_t>& alpha, const std::vector<std::int64_t>& beta) {
            py::list out;
            for (const auto& step : gp::subchain(as_partition(alpha), as_partition(beta)))
                out.append(step.parts);
            return out;
        },
        py::arg("alpha"), py::arg("beta"));
    mod.def("sort_decreasing",
            [](const gp::Vec& p) { return gp::sort_decreasing(p).parts; });
    mod.def("sm_orbit", [](const std::vector<std::int64_t>& lambda) {
        return gp::sm_orbit(as_partition(lambda));
    });

    // tableaux
    mod.def(
        "enumerate_ssyt",
        [](const std::vector<std::int64_t>& shape, int m) {
            py::list out;
            gp::for_each_ssyt(as_partition(shape), m,
                              [&](const gp::Tableau& t) { out.append(tableau_to_py(t)); });
            return out;
        },
        py::arg("shape"), py::arg("m"));
    mod.def(
        "content_of",
        [](const std::vector<std::vector<int>>& rows, int m) {
            return gp::content_of(tableau_from_py(rows), m).counts;
        },
        py::arg("tableau"), py::arg("m"));
    mod.def(
        "kostka",
        [](const std::vector<std::int64_t>& shape, const gp::Vec& content) {
            return int_to_py(gp::kostka(as_partition(shape), gp::Content{content}));
        },
        py::arg("shape"), py::arg("content"));
    mod.def(
        "skew_row_bounded_count",
        [](const std::vector<std::int64_t>& lambda, const std::vector<std::int64_t>& mu) {
            return int_to_py(gp::skew_row_bounded_count(as_partition(lambda), as_partition(mu)));
        },
        py::arg("lambda_"), py::arg("mu"));
    mod.def(
        "column_split",
        [](const std::vector<std::vector<int>>& rows, int t_parts) {
            py::list out;
            for (const auto& part : gp::column_split(tableau_from_py(rows), t_parts))
                out.append(tableau_to_py(part));
            return out;
        },
        py::arg("tableau"), py::arg("t_parts"));

    // symmetric functions
    mod.def(
        "expand_schur",
        [](const std::vector<std::int64_t>& lambda, std::size_t m) {
            return polynomial_to_py(gp::expand_schur(as_partition(lambda), m));
        },
        py::arg("lambda_"), py::arg("m"));
    mod.def(
        "expand_combination",
        [](std::size_t m,
           const std::vector<std::pair<py::object, std::vector<std::int64_t>>>& terms) {
            return polynomial_to_py(gp::expand_combination(as_combination(m, terms)));
        },
        py::arg("m"), py::arg("terms"));
    mod.def(
        "to_schur_basis",
        [](std::size_t m, const std::map<std::vector<std::int64_t>, py::object>& terms) {
            gp::SparsePolynomial f(m);
            for (const auto& [e, c] : terms) f.add_term(e, int_from_py(c));
            return combination_to_py(gp::to_schur_basis(f));
        },
        py::arg("m"), py::arg("terms"));
    mod.def(
        "is_symmetric",
        [](std::size_t m, const std::map<std::vector<std::int64_t>, py::object>& terms) {
            gp::SparsePolynomial f(m);
            for (const auto& [e, c] : terms) f.add_term(e, int_from_py(c));
            return gp::is_symmetric(f);
        },
        py::arg("m"), py::arg("terms"));

    // polytopes
    mod.def(
        "contains_point",
        [](std::size_t m, const std::vector<gp::Vec>& gens, const gp::Vec& q) {
            return gp::contains_point(as_polytope(m, gens), q);
        },
        py::arg("m"), py::arg("generators"), py::arg("point"));
    mod.def(
        "vertices",
        [](std::size_t m, const std::vector<gp::Vec>& gens) {
            return gp::vertices(as_polytope(m, gens));
        },
        py::arg("m"), py::arg("generators"));
    mod.def(
        "lattice_points",
        [](std::size_t m, const std::vector<gp::Vec>& gens) {
            return gp::lattice_points(as_polytope(m, gens));
        },
        py::arg("m"), py::arg("generators"));
    mod.def("minkowski_power_points", &gp::minkowski_power_points,
            py::arg("points"), py::arg("t"));
    mod.def(
        "idp_check",
        [](std::size_t m, const std::vector<gp::Vec>& gens, std::int64_t t_max) {
            return json_to_py(gp::idp_report_to_json(gp::idp_check(as_polytope(m, gens), t_max)));
        },
        py::arg("m"), py::arg("generators"), py::arg("t_max"));
    mod.def(
        "dimension",
        [](std::size_t m, const std::vector<gp::Vec>& gens) {
            return gp::dimension(as_polytope(m, gens));
        },
        py::arg("m"), py::arg("generators"));

    // verifier
    mod.def(
        "check_snp",
        [](std::size_t m,
           const std::vector<std::pair<py::object, std::vector<std::int64_t>>>& terms) {
            auto expansion = gp::expand_combination(as_combination(m, terms));
            return json_to_py(gp::snp_report_to_json(gp::check_snp(expansion)));
        },
        py::arg("m"), py::arg("terms"));
    mod.def(
        "check_good",
        [](std::size_t m,
           const std::vector<std::pair<py::object, std::vector<std::int64_t>>>& terms) {
            return json_to_py(gp::goodness_report_to_json(gp::check_good(as_combination(m, terms))));
        },
        py::arg("m"), py::arg("terms"));
    mod.def(
        "verify_good_theorem",
        [](std::size_t m,
           const std::vector<std::pair<py::object, std::vector<std::int64_t>>>& terms,
           std::int64_t t_max) {
            return json_to_py(gp::verify_report_to_json(
                gp::verify_good_theorem(as_combination(m, terms), t_max)));
        },
        py::arg("m"), py::arg("terms"), py::arg("t_max"));
    mod.def(
        "rado_containment",
        [](const std::vector<std::int64_t>& alpha, const std::vector<std::int64_t>& beta) {
            return gp::rado_containment(as_partition(alpha), as_partition(beta));
        },
        py::arg("alpha"), py::arg("beta"));
    mod.def(
        "schur_membership",
        [](const gp::Vec& p, const std::vector<std::int64_t>& lambda) {
            return gp::schur_membership(p, as_partition(lambda));
        },
        py::arg("point"), py::arg("lambda_"));
    mod.def(
        "newton_of_combination",
        [](std::size_t m,
           const std::vector<std::pair<py::object, std::vector<std::int64_t>>>& terms) {
            return gp::newton_of_combination(as_combination(m, terms)).generators;
        },
        py::arg("m"), py::arg("terms"));

    // families
    mod.def(
        "dual_grothendieck",
        [](const std::vector<std::int64_t>& lambda, std::size_t m) {
            return combination_to_py(gp::dual_grothendieck(as_partition(lambda), m));
        },
        py::arg("lambda_"), py::arg("m"));
    mod.def(
        "chain_sum",
        [](const std::vector<std::int64_t>& alpha, const std::vector<std::int64_t>& beta) {
            return combination_to_py(gp::chain_sum(as_partition(alpha), as_partition(beta)));
        },
        py::arg("alpha"), py::arg("beta"));
    mod.def(
        "alternating_chain_sum",
        [](const std::vector<std::int64_t>& alpha, const std::vector<std::int64_t>& beta) {
            return combination_to_py(
                gp::alternating_chain_sum(as_partition(alpha), as_partition(beta)));
        },
        py::arg("alpha"), py::arg("beta"));
    mod.def("example_g2_310",
            []() { return combination_to_py(gp::example_g2_310()); });
}
