#pragma once

#include <json.hpp>

#include "goodpoly/families.hpp"
#include "goodpoly/polytope.hpp"
#include "goodpoly/symfunc.hpp"
#include "goodpoly/tableaux.hpp"
#include "goodpoly/verifier.hpp"

namespace goodpoly {

using json = nlohmann::json;

// Partitions and points are JSON integer arrays; big integers travel as
// decimal strings.
json partition_to_json(const Partition& p);
Partition partition_from_json(const json& j);

json point_to_json(const Vec& v);
Vec point_from_json(const json& j);

// Tableaux travel as arrays of rows, e.g. [[1,2,3],[2]].
json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const json& j);

json combination_to_json(const SchurCombination& f);
SchurCombination combination_from_json(const json& j);

json polynomial_to_json(const SparsePolynomial& f);
SparsePolynomial polynomial_from_json(const json& j);

json polytope_to_json(const LatticePolytope& p);
LatticePolytope polytope_from_json(const json& j);

json family_spec_to_json(const FamilySpec& spec);
FamilySpec family_spec_from_json(const json& j);

json snp_report_to_json(const SnpReport& r);
json idp_report_to_json(const IdpReport& r);
json goodness_report_to_json(const GoodnessReport& r);
json verify_report_to_json(const VerifyReport& r);

} // namespace goodpoly
