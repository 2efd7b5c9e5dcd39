// Batch CLI over the library: one verb per invocation, JSON in, JSON out.
// Exit codes: 0 success, 1 malformed input, 2 domain error, 3 budget error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "etale/io.hpp"

namespace {

using etale::Json;

std::string read_source(const std::string& spec) {
    if (spec == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(spec);
    if (!in) throw etale::invalid_input_error("cannot open file: " + spec);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Json parse_json(const std::string& text, const char* what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw etale::invalid_input_error(std::string("bad JSON in ") + what + ": " + e.what());
    }
}

struct Options {
    std::string verb;
    std::string algebra_src;
    std::string input_src;
    std::string rho;
    std::uint64_t budget = 0; // 0 = default
    std::string output;
    bool timings = false;
};

etale::AlgebraPtr load_algebra(const Options& opt) {
    if (opt.algebra_src.empty())
        throw etale::invalid_input_error("this verb needs --algebra");
    return etale::algebra_from_json(parse_json(read_source(opt.algebra_src), "--algebra"));
}

Json load_input(const Options& opt) {
    if (opt.input_src.empty())
        throw etale::invalid_input_error("this verb needs --input");
    return parse_json(read_source(opt.input_src), "--input");
}

etale::EnumerationBudget make_budget(const Options& opt) {
    etale::EnumerationBudget b;
    if (opt.budget) {
        b.max_subspace_candidates = opt.budget;
        b.max_element_sweep = opt.budget;
    }
    return b;
}

const Json& need(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw etale::invalid_input_error(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

Json run_verb(const Options& opt) {
    using namespace etale;
    const std::string& verb = opt.verb;

    if (verb == "minpoly") {
        AlgebraPtr A = load_algebra(opt);
        AlgebraElement a = element_from_json(load_input(opt), A);
        return Json{{"minpoly", poly_to_json(min_poly(a))}};
    }
    if (verb == "idempotents") {
        AlgebraPtr A = load_algebra(opt);
        AlgebraElement a = element_from_json(load_input(opt), A);
        Polynomial f = min_poly(a);
        if (!squarefree_test(f))
            throw not_in_u_error("minimal polynomial is not squarefree");
        auto [E2, roots] = splitting_extension(f);
        AlgebraPtr big = A->extend_scalars(E2);
        AlgebraElement ax = embed_element(a, big);
        std::vector<Scalar> rs;
        for (const auto& r : roots) rs.push_back(embed(r, E2));
        auto idems = lagrange_idempotents(ax, rs);
        Json roots_json = Json::array();
        for (const auto& r : rs) roots_json.push_back(r.to_text());
        Json idems_json = Json::array();
        for (const auto& e : idems) idems_json.push_back(element_to_json(e));
        return Json{{"field", field_to_json(E2)},
                    {"roots", roots_json},
                    {"idempotents", idems_json}};
    }
    if (verb == "psi") {
        AlgebraPtr A = load_algebra(opt);
        AlgebraElement a = element_from_json(load_input(opt), A);
        EtaleSubalgebra E = psi(a);
        return Json{{"basis", etale_subalgebra_to_json(E)},
                    {"type", partition_to_json(E.type())}};
    }
    if (verb == "phi") {
        AlgebraPtr A = load_algebra(opt);
        Json in = load_input(opt);
        AlgebraElement a = element_from_json(need(need(in, "config"), "a"), A);
        PsiConfig cfg = need(in, "config").contains("L")
                            ? PsiConfig::with_complement(
                                  a, subspace_from_json(need(in, "config").at("L"),
                                                        A->field(), A->dim()))
                            : PsiConfig::standard(a);
        EtaleSubalgebra Ep = etale_subalgebra_from_json(need(in, "subalgebra"), A);
        AlgebraElement b = phi(Ep, cfg);
        return Json{{"element", element_to_json(b)}};
    }
    if (verb == "type") {
        AlgebraPtr A = load_algebra(opt);
        EtaleSubalgebra E = etale_subalgebra_from_json(load_input(opt), A);
        return Json{{"type", partition_to_json(E.type())}};
    }
    if (verb == "is-subfield") {
        AlgebraPtr A = load_algebra(opt);
        EtaleSubalgebra E = etale_subalgebra_from_json(load_input(opt), A);
        return Json{{"is_subfield", E.is_subfield()}};
    }
    if (verb == "ideal-system") {
        AlgebraPtr A = load_algebra(opt);
        EtaleSubalgebra E = etale_subalgebra_from_json(load_input(opt), A);
        return ideal_system_to_json(ideal_system_from_subalgebra(E));
    }
    if (verb == "from-ideal-system") {
        AlgebraPtr A = load_algebra(opt);
        Json in = load_input(opt);
        FieldPtr E2 = field_from_json(need(in, "field"));
        AlgebraPtr big = A->extend_scalars(E2);
        const Json& ideals_json = need(in, "ideals");
        std::vector<RightIdeal> ideals;
        for (const auto& ij : ideals_json)
            ideals.emplace_back(big, subspace_from_json(ij, E2, big->dim()));
        IdealSystem sys = IdealSystem::from_ideals(big, std::move(ideals), A->field());
        EtaleSubalgebra E = subalgebra_from_ideal_system(sys);
        return Json{{"basis", etale_subalgebra_to_json(E)},
                    {"type", partition_to_json(E.type())}};
    }
    if (verb == "plucker") {
        Json in = load_input(opt);
        FieldPtr F = field_from_json(need(in, "field"));
        Subspace W = subspace_from_json(need(in, "plane"), F, 4);
        return Json{{"point", plucker_to_json(plucker_embed(W))}};
    }
    if (verb == "plucker-inv") {
        Json in = load_input(opt);
        FieldPtr F = field_from_json(need(in, "field"));
        PluckerPoint p = plucker_from_json(need(in, "point"), F);
        return Json{{"plane", subspace_to_json(plucker_inverse(p))}};
    }
    if (verb == "intersect") {
        Json in = load_input(opt);
        QuadraticSpace qs = quadratic_space_from_json(in);
        Subspace W = subspace_from_json(need(in, "plane"), qs.field(), qs.dim());
        return point_pair_to_json(line_quadric_intersect(W, qs));
    }
    if (verb == "pair-to-line") {
        Json in = load_input(opt);
        FieldPtr F = field_from_json(need(in, "field"));
        PointPairOnQuadric pp = point_pair_from_json(in, F);
        return Json{{"plane", subspace_to_json(pair_to_line(pp))}};
    }
    if (verb == "enumerate") {
        AlgebraPtr A = load_algebra(opt);
        Json in = load_input(opt);
        unsigned m = need(in, "m").get<unsigned>();
        auto subs = enum_etale_subalgebras(A, m, make_budget(opt));
        if (in.contains("type")) {
            Partition want = partition_from_json(in.at("type"));
            std::vector<EtaleSubalgebra> filtered;
            for (const auto& E : subs)
                if (E.type() == want) filtered.push_back(E);
            subs = std::move(filtered);
        }
        Json list = Json::array();
        for (const auto& E : subs) list.push_back(etale_subalgebra_to_json(E));
        return Json{{"count", subs.size()}, {"subalgebras", list}};
    }
    if (verb == "verify-moduli") {
        AlgebraPtr A = load_algebra(opt);
        if (opt.rho.empty()) throw invalid_input_error("verify-moduli needs --rho");
        Partition rho = Partition::from_text(opt.rho);
        EnumerationReport rep = verify_moduli_count(A, rho, make_budget(opt));
        return report_to_json(rep, A, opt.timings);
    }
    throw etale::invalid_input_error("unknown verb: " + verb);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with etale subalgebras of central simple algebras"};
    app.require_subcommand(1);

    Options opt;
    const std::vector<std::string> verbs = {
        "minpoly",   "idempotents",       "psi",     "phi",        "type",
        "is-subfield", "ideal-system",    "from-ideal-system",     "plucker",
        "plucker-inv", "intersect",       "pair-to-line",          "enumerate",
        "verify-moduli"};
    for (const auto& v : verbs) {
        auto* sub = app.add_subcommand(v);
        sub->add_option("--algebra", opt.algebra_src, "algebra descriptor (file or -)");
        sub->add_option("--input", opt.input_src, "operand JSON (file or -)");
        sub->add_option("--rho", opt.rho, "partition, e.g. 1,1");
        sub->add_option("--budget", opt.budget, "enumeration budget override");
        sub->add_option("--output", opt.output, "write result here instead of stdout");
        sub->add_flag("--timings", opt.timings, "include wall-clock seconds in reports");
        sub->callback([&opt, v] { opt.verb = v; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 1 : 0;
    }

    try {
        Json result = run_verb(opt);
        std::string text = result.dump(2) + "\n";
        if (opt.output.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(opt.output);
            if (!out) throw etale::invalid_input_error("cannot open output: " + opt.output);
            out << text;
        }
        return 0;
    } catch (const etale::budget_error& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 3;
    } catch (const etale::invalid_input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const etale::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const etale::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
