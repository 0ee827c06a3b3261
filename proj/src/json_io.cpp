#include "goodpoly/json_io.hpp"

#include <stdexcept>

namespace goodpoly {

namespace {

const json& expect(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string("missing field: ") + key);
    return j.at(key);
}

std::int64_t expect_int(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw std::invalid_argument(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

Vec int_array(const json& j, const char* what) {
    if (!j.is_array())
        throw std::invalid_argument(std::string(what) + " must be an array");
    Vec v;
    for (const auto& x : j) v.push_back(expect_int(x, what));
    return v;
}

Int coeff_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        std::size_t digits_from = s.size() > 0 && (s[0] == '-' || s[0] == '+') ? 1 : 0;
        bool ok = s.size() > digits_from;
        for (std::size_t i = digits_from; i < s.size() && ok; ++i)
            ok = s[i] >= '0' && s[i] <= '9';
        if (!ok) throw std::invalid_argument("coeff is not a decimal integer string");
        return Int(s);
    }
    throw std::invalid_argument("coeff must be an integer or decimal string");
}

} // namespace

json partition_to_json(const Partition& p) { return json(p.parts); }

Partition partition_from_json(const json& j) {
    try {
        return Partition(int_array(j, "partition"));
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("invalid partition: ") + e.what());
    }
}

json point_to_json(const Vec& v) { return json(v); }

Vec point_from_json(const json& j) { return int_array(j, "point"); }

json tableau_to_json(const Tableau& t) {
    json rows = json::array();
    for (const auto& row : t.rows) rows.push_back(json(row));
    return rows;
}

Tableau tableau_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("tableau must be an array of rows");
    Tableau t;
    for (const auto& row : j) {
        if (!row.is_array()) throw std::invalid_argument("tableau rows must be arrays");
        std::vector<int> r;
        for (const auto& x : row)
            r.push_back(static_cast<int>(expect_int(x, "tableau entry")));
        t.rows.push_back(std::move(r));
    }
    if (!is_valid_ssyt(t)) throw std::invalid_argument("rows do not form a valid tableau");
    return t;
}

json combination_to_json(const SchurCombination& f) {
    json terms = json::array();
    for (const auto& t : f.terms)
        terms.push_back({{"coeff", t.coeff.str()},
                         {"partition", partition_to_json(t.partition)}});
    return {{"m", f.m}, {"terms", terms}};
}

SchurCombination combination_from_json(const json& j) {
    std::int64_t m = expect_int(expect(j, "m"), "m");
    if (m < 1) throw std::invalid_argument("m must be positive");
    const json& jt = expect(j, "terms");
    if (!jt.is_array()) throw std::invalid_argument("terms must be an array");
    std::vector<SchurTerm> terms;
    for (const auto& t : jt) {
        Int c = coeff_from_json(expect(t, "coeff"));
        Partition p = partition_from_json(expect(t, "partition"));
        if (p.length() != static_cast<std::size_t>(m))
            throw std::invalid_argument("partition length does not match m");
        terms.push_back({std::move(c), std::move(p)});
    }
    return SchurCombination(static_cast<std::size_t>(m), std::move(terms));
}

json polynomial_to_json(const SparsePolynomial& f) {
    json out = json::array();
    for (const auto& [e, c] : f.terms)
        out.push_back({{"exponent", json(e)}, {"coeff", c.str()}});
    return out;
}

SparsePolynomial polynomial_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be an array of terms");
    SparsePolynomial f;
    bool first = true;
    for (const auto& t : j) {
        Vec e = int_array(expect(t, "exponent"), "exponent");
        if (first) {
            f.m = e.size();
            first = false;
        }
        f.add_term(e, coeff_from_json(expect(t, "coeff")));
    }
    return f;
}

json polytope_to_json(const LatticePolytope& p) {
    json gens = json::array();
    for (const auto& g : p.generators) gens.push_back(json(g));
    return {{"m", p.m}, {"generators", gens}};
}

LatticePolytope polytope_from_json(const json& j) {
    std::int64_t m = expect_int(expect(j, "m"), "m");
    if (m < 1) throw std::invalid_argument("m must be positive");
    const json& jg = expect(j, "generators");
    if (!jg.is_array()) throw std::invalid_argument("generators must be an array");
    std::vector<Vec> gens;
    for (const auto& g : jg) {
        Vec v = int_array(g, "generator");
        if (v.size() != static_cast<std::size_t>(m))
            throw std::invalid_argument("generator length does not match m");
        gens.push_back(std::move(v));
    }
    return LatticePolytope(static_cast<std::size_t>(m), std::move(gens));
}

json family_spec_to_json(const FamilySpec& spec) {
    json out{{"kind", family_kind_to_string(spec.kind)}, {"m", spec.m}};
    if (spec.lambda) out["lambda"] = partition_to_json(*spec.lambda);
    if (spec.alpha) out["alpha"] = partition_to_json(*spec.alpha);
    if (spec.beta) out["beta"] = partition_to_json(*spec.beta);
    return out;
}

FamilySpec family_spec_from_json(const json& j) {
    FamilySpec spec;
    spec.kind = family_kind_from_string(expect(j, "kind").get<std::string>());
    if (j.contains("m")) spec.m = static_cast<std::size_t>(expect_int(j.at("m"), "m"));
    if (j.contains("lambda")) spec.lambda = partition_from_json(j.at("lambda"));
    if (j.contains("alpha")) spec.alpha = partition_from_json(j.at("alpha"));
    if (j.contains("beta")) spec.beta = partition_from_json(j.at("beta"));
    return spec;
}

json snp_report_to_json(const SnpReport& r) {
    json missing = json::array();
    for (const auto& p : r.missing_points) missing.push_back(json(p));
    return {{"holds", r.holds}, {"missing_points", missing}};
}

json idp_report_to_json(const IdpReport& r) {
    json witness;
    if (r.witness)
        witness = {{"t", r.witness->t}, {"point", json(r.witness->point)}};
    return {{"holds", r.holds},
            {"checked_t_max", r.checked_t_max},
            {"witness", witness}};
}

json goodness_report_to_json(const GoodnessReport& r) {
    json a{{"holds", r.condition_a.holds}};
    a["failing_degree"] =
        r.condition_a.failing_degree ? json(*r.condition_a.failing_degree) : json();
    a["missing_point"] =
        r.condition_a.missing_point ? json(*r.condition_a.missing_point) : json();

    json b{{"holds", r.condition_b.holds}};
    json chain = json::array();
    for (const auto& p : r.condition_b.chain) chain.push_back(partition_to_json(p));
    b["chain"] = chain;
    b["reason"] = r.condition_b.reason.empty() ? json() : json(r.condition_b.reason);

    json bp{{"holds", r.condition_b_prime.holds}};
    bp["lambda_min"] = r.condition_b_prime.lambda_min
                           ? partition_to_json(*r.condition_b_prime.lambda_min)
                           : json();
    bp["lambda_max"] = r.condition_b_prime.lambda_max
                           ? partition_to_json(*r.condition_b_prime.lambda_max)
                           : json();

    return {{"good", r.good},
            {"condition_a", a},
            {"condition_a_prime", json{{"holds", r.condition_a_prime}}},
            {"condition_b", b},
            {"condition_b_prime", bp}};
}

json verify_report_to_json(const VerifyReport& r) {
    json out = goodness_report_to_json(r.goodness);
    out["snp"] = r.snp ? snp_report_to_json(*r.snp) : json();
    out["idp"] = r.idp ? idp_report_to_json(*r.idp) : json();
    out["theorem_violation"] = r.theorem_violation;
    return out;
}

} // namespace goodpoly
