#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "goodpoly/json_io.hpp"
#include "goodpoly/random.hpp"

namespace gp = goodpoly;
using gp::json;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

gp::Partition partition_flag(const std::string& text, const char* name) {
    try {
        return gp::partition_from_json(parse_json(text));
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string(name) + ": " + e.what());
    }
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void emit_points_csv(std::ostream& out, const std::string& kind,
                     const std::vector<gp::Vec>& points) {
    for (const auto& p : points) {
        out << kind;
        for (auto x : p) out << "," << x;
        out << "," << gp::vec_sum(p) << "\n";
    }
}

// Inputs that can be either a combination ({"terms": ...}) or a polytope
// ({"generators": ...}).
gp::LatticePolytope polytope_from_input(const json& j) {
    if (j.is_object() && j.contains("generators")) return gp::polytope_from_json(j);
    if (j.is_object() && j.contains("terms")) {
        auto f = gp::combination_from_json(j);
        auto expansion = gp::expand_combination(f);
        return gp::newton_polytope(expansion);
    }
    throw std::invalid_argument("expected a polytope or a Schur combination object");
}

struct CommonOpts {
    std::string in = "-";
    std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_format = false) {
    cmd->add_option("--in", opts.in, "Input file (default: stdin)");
    if (with_format)
        cmd->add_option("--format", opts.format, "Output format: json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
}

int run(int argc, char** argv) {
    CLI::App app{"Schur combinations, Newton polytopes, and exact SNP/IDP checks"};
    app.require_subcommand(1);

    CommonOpts expand_opts;
    auto* cmd_expand = app.add_subcommand(
        "expand", "Expand a Schur combination into a sparse polynomial");
    add_common(cmd_expand, expand_opts, true);

    CommonOpts newton_opts;
    auto* cmd_newton = app.add_subcommand(
        "newton", "Vertices and lattice points of a Newton polytope");
    add_common(cmd_newton, newton_opts, true);

    CommonOpts snp_opts;
    auto* cmd_snp = app.add_subcommand("snp", "Check the saturated Newton polytope property");
    add_common(cmd_snp, snp_opts);

    CommonOpts idp_opts;
    std::int64_t idp_t_max = 0;
    auto* cmd_idp = app.add_subcommand("idp", "Check the integer decomposition property");
    add_common(cmd_idp, idp_opts);
    cmd_idp->add_option("--t-max", idp_t_max,
                        "Largest dilation to certify (default: max(2, dim-1))");

    CommonOpts good_opts;
    auto* cmd_good = app.add_subcommand("good", "Check conditions (a), (a'), (b), (b')");
    add_common(cmd_good, good_opts);

    CommonOpts verify_opts;
    std::int64_t verify_t_max = 0;
    auto* cmd_verify = app.add_subcommand(
        "verify", "Goodness plus SNP and IDP certification in one report");
    add_common(cmd_verify, verify_opts);
    cmd_verify->add_option("--t-max", verify_t_max, "Largest dilation to certify");

    std::string chain_alpha, chain_beta;
    auto* cmd_chain = app.add_subcommand(
        "chain", "Box-addition chain and coarse subchain between two partitions");
    cmd_chain->add_option("--alpha", chain_alpha, "Lower partition, e.g. [3,1,0]")
        ->required();
    cmd_chain->add_option("--beta", chain_beta, "Upper partition, e.g. [3,3,3]")
        ->required();

    std::string family_kind = "chain_sum";
    std::string family_lambda, family_alpha, family_beta;
    std::int64_t family_m = 0;
    auto* cmd_family = app.add_subcommand("family", "Materialize a built-in combination");
    cmd_family
        ->add_option("--kind", family_kind,
                     "dual_grothendieck | chain_sum | alternating_chain_sum | example_g2_310")
        ->required();
    cmd_family->add_option("--lambda", family_lambda, "Partition for dual_grothendieck");
    cmd_family->add_option("--alpha", family_alpha, "Chain lower endpoint");
    cmd_family->add_option("--beta", family_beta, "Chain upper endpoint");
    cmd_family->add_option("-m,--vars", family_m, "Number of variables");

    std::string rado_alpha, rado_beta;
    auto* cmd_rado = app.add_subcommand(
        "rado", "Newton(s_alpha) ⊆ Newton(s_beta) via dominance");
    cmd_rado->add_option("--alpha", rado_alpha)->required();
    cmd_rado->add_option("--beta", rado_beta)->required();

    std::uint64_t search_seed = 0;
    std::int64_t search_count = 50, search_m = 3, search_max_size = 6,
                 search_max_coeff = 5, search_max_terms = 5, search_t_max = 2;
    auto* cmd_search = app.add_subcommand(
        "search", "Sample random combinations and look for SNP without IDP");
    cmd_search->add_option("--seed", search_seed, "RNG seed (echoed in the report)");
    cmd_search->add_option("--count", search_count, "Number of samples");
    cmd_search->add_option("-m,--vars", search_m, "Number of variables");
    cmd_search->add_option("--max-size", search_max_size, "Cap on |partition|");
    cmd_search->add_option("--max-coeff", search_max_coeff, "Cap on |coefficient|");
    cmd_search->add_option("--max-terms", search_max_terms, "Cap on term count");
    cmd_search->add_option("--t-max", search_t_max, "Largest dilation to certify");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (cmd_expand->parsed()) {
        auto f = gp::combination_from_json(parse_json(read_input(expand_opts.in)));
        auto expansion = gp::expand_combination(f);
        if (expand_opts.format == "csv") {
            std::cout << "coeff";
            for (std::size_t i = 1; i <= expansion.m; ++i) std::cout << ",x" << i;
            std::cout << ",degree\n";
            for (const auto& [e, c] : expansion.terms) {
                std::cout << c.str();
                for (auto x : e) std::cout << "," << x;
                std::cout << "," << gp::vec_sum(e) << "\n";
            }
        } else {
            emit(gp::polynomial_to_json(expansion));
        }
    } else if (cmd_newton->parsed()) {
        auto p = polytope_from_input(parse_json(read_input(newton_opts.in)));
        auto verts = gp::vertices(p);
        auto points = gp::lattice_points(p);
        if (newton_opts.format == "csv") {
            std::cout << "kind";
            for (std::size_t i = 1; i <= p.m; ++i) std::cout << ",x" << i;
            std::cout << ",degree\n";
            emit_points_csv(std::cout, "vertex", verts);
            emit_points_csv(std::cout, "point", points);
        } else {
            json jv = json::array(), jp = json::array();
            for (const auto& v : verts) jv.push_back(json(v));
            for (const auto& q : points) jp.push_back(json(q));
            emit({{"m", p.m}, {"vertices", jv}, {"lattice_points", jp}});
        }
    } else if (cmd_snp->parsed()) {
        auto f = gp::combination_from_json(parse_json(read_input(snp_opts.in)));
        auto expansion = gp::expand_combination(f);
        emit(gp::snp_report_to_json(gp::check_snp(expansion)));
    } else if (cmd_idp->parsed()) {
        auto p = polytope_from_input(parse_json(read_input(idp_opts.in)));
        std::int64_t t_max = idp_t_max > 0 ? idp_t_max : gp::default_t_max(p);
        emit(gp::idp_report_to_json(gp::idp_check(p, t_max)));
    } else if (cmd_good->parsed()) {
        auto f = gp::combination_from_json(parse_json(read_input(good_opts.in)));
        emit(gp::goodness_report_to_json(gp::check_good(f)));
    } else if (cmd_verify->parsed()) {
        auto f = gp::combination_from_json(parse_json(read_input(verify_opts.in)));
        std::int64_t t_max = verify_t_max;
        if (t_max <= 0) {
            auto expansion = gp::expand_combination(f);
            if (expansion.is_zero())
                throw std::invalid_argument("combination expands to the zero polynomial");
            t_max = gp::default_t_max(gp::newton_polytope(expansion));
        }
        auto report = gp::verify_good_theorem(f, t_max);
        emit(gp::verify_report_to_json(report));
        if (report.theorem_violation) {
            std::cerr << "THEOREM-VIOLATION: good combination failed SNP or IDP\n";
            return 2;
        }
    } else if (cmd_chain->parsed()) {
        auto alpha = partition_flag(chain_alpha, "--alpha");
        auto beta = partition_flag(chain_beta, "--beta");
        json jc = json::array(), js = json::array();
        for (const auto& p : gp::generate_chain(alpha, beta).steps)
            jc.push_back(gp::partition_to_json(p));
        for (const auto& p : gp::subchain(alpha, beta))
            js.push_back(gp::partition_to_json(p));
        emit({{"alpha", gp::partition_to_json(alpha)},
              {"beta", gp::partition_to_json(beta)},
              {"chain", jc},
              {"subchain", js}});
    } else if (cmd_family->parsed()) {
        gp::FamilySpec spec;
        spec.kind = gp::family_kind_from_string(family_kind);
        if (!family_lambda.empty()) spec.lambda = partition_flag(family_lambda, "--lambda");
        if (!family_alpha.empty()) spec.alpha = partition_flag(family_alpha, "--alpha");
        if (!family_beta.empty()) spec.beta = partition_flag(family_beta, "--beta");
        if (family_m > 0) spec.m = static_cast<std::size_t>(family_m);
        else if (spec.lambda) spec.m = spec.lambda->length();
        emit(gp::combination_to_json(gp::materialize(spec)));
    } else if (cmd_rado->parsed()) {
        auto alpha = partition_flag(rado_alpha, "--alpha");
        auto beta = partition_flag(rado_beta, "--beta");
        bool contained = gp::rado_containment(alpha, beta);
        emit({{"alpha", gp::partition_to_json(alpha)},
              {"beta", gp::partition_to_json(beta)},
              {"contained", contained}});
    } else if (cmd_search->parsed()) {
        gp::Rng rng(search_seed);
        json candidates = json::array();
        std::int64_t sampled = 0;
        for (std::int64_t i = 0; i < search_count; ++i) {
            auto f = gp::random_combination(rng, static_cast<std::size_t>(search_m),
                                            search_max_size, search_max_coeff,
                                            static_cast<std::size_t>(search_max_terms));
            if (f.terms.empty()) continue;
            ++sampled;
            auto expansion = gp::expand_combination(f);
            auto snp = gp::check_snp(expansion);
            if (!snp.holds) continue;
            auto idp = gp::idp_check(gp::newton_polytope(expansion), search_t_max);
            if (!idp.holds)
                candidates.push_back({{"combination", gp::combination_to_json(f)},
                                      {"snp", gp::snp_report_to_json(snp)},
                                      {"idp", gp::idp_report_to_json(idp)}});
        }
        emit({{"seed", search_seed},
              {"samples", sampled},
              {"m", search_m},
              {"max_size", search_max_size},
              {"t_max", search_t_max},
              {"candidates", candidates}});
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "THEOREM-VIOLATION: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
