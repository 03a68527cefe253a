// Command-line front end: analyze, roots, hilbert, pbw, catalog, recognize.
// Exit codes: 0 success, 1 parse/validation error, 2 not arithmetic within cap.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "nichols/catalog.hpp"
#include "nichols/diagram_io.hpp"
#include "nichols/lyndon.hpp"
#include "nichols/oracle.hpp"
#include "nichols/report.hpp"

using namespace nichols;

namespace {

EnumerationCaps caps_from_env(std::int64_t cap_flag) {
    EnumerationCaps caps;
    if (const char* env = std::getenv("NICHOLS_CAP")) {
        caps.max_points = static_cast<std::size_t>(std::stoll(env));
        caps.max_roots = 10 * caps.max_points;
    }
    if (cap_flag > 0) {
        caps.max_points = static_cast<std::size_t>(cap_flag);
        caps.max_roots = 10 * caps.max_points;
    }
    return caps;
}

BraidingMatrix load_diagram(const std::string& path) {
    if (path == "-") {
        std::string text((std::istreambuf_iterator<char>(std::cin)),
                         std::istreambuf_iterator<char>());
        return parse_diagram_text(text);
    }
    return parse_diagram_file(path);
}

int run_analyze(const std::string& file, std::int64_t cap, bool no_recognize, bool timing,
                bool roots_only) {
    BraidingMatrix q = load_diagram(file);
    AnalyzeOptions opts;
    opts.caps = caps_from_env(cap);
    opts.recognize = !no_recognize && !roots_only;
    opts.include_timing = timing;
    auto rep = analyze_report(q, opts);
    if (roots_only) {
        if (rep["status"] != "arithmetic") {
            std::cout << rep.dump(2) << "\n";
            return 2;
        }
        std::cout << rep["points"].dump(2) << "\n";
        return 0;
    }
    std::cout << rep.dump(2) << "\n";
    return rep["status"] == "arithmetic" ? 0 : 2;
}

int run_hilbert(const std::string& file, int degree) {
    BraidingMatrix q = load_diagram(file);
    GroupoidBundle b = enumerate_groupoid(q.twist_class());
    int x = b.point_index(q.twist_class());
    auto pred = NicholsOracle::pbw_prediction(root_heights(b, x), degree);
    NicholsOracle oracle(q);
    auto dims = oracle.hilbert_series(degree);
    nlohmann::ordered_json out;
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    bool match = true;
    BigInt total = 0;
    for (const auto& [d, dim] : dims) {
        auto it = pred.find(d);
        BigInt expect = it == pred.end() ? 0 : it->second;
        nlohmann::ordered_json row;
        row["degree"] = format_root(d);
        row["dim"] = dim;
        row["pbw"] = expect.str();
        table.push_back(std::move(row));
        if (BigInt(dim) != expect) match = false;
        total += dim;
    }
    out["degree_bound"] = degree;
    out["dims"] = std::move(table);
    out["total_up_to_bound"] = total.str();
    out["verdict"] = match ? "MATCH" : "MISMATCH";
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_pbw(const std::string& file) {
    BraidingMatrix q = load_diagram(file);
    GroupoidBundle b = enumerate_groupoid(q.twist_class());
    int x = b.point_index(q.twist_class());
    auto words = root_lyndon_words(q.theta(), positive_roots(b, x));
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& [beta, word] : words) {
        nlohmann::ordered_json row;
        row["root"] = format_root(beta);
        row["lyndon_word"] = word_digits(word);
        row["commutator"] = hyperletter_tree(word);
        auto x_beta = hyperletter(q, word);
        row["terms"] = x_beta.terms.size();
        out.push_back(std::move(row));
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_recognize(const std::string& file, std::int64_t cap) {
    BraidingMatrix q = load_diagram(file);
    auto hits = Catalog::instance().recognize(q, caps_from_env(cap));
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& h : hits) {
        nlohmann::ordered_json hit;
        hit["label"] = h.label;
        hit["params"] = h.params;
        hit["point"] = h.point;
        out.push_back(std::move(hit));
    }
    std::cout << out.dump(2) << "\n";
    if (hits.empty()) std::cerr << "unrecognized (arithmetic but not matched)\n";
    return 0;
}

int run_catalog_list() {
    for (const auto& label : Catalog::instance().labels()) std::cout << label << "\n";
    return 0;
}

int run_catalog_gen(const std::string& label, const std::string& params,
                    std::int64_t zeta_order) {
    auto built = Catalog::instance().build_diagram(label, CatalogParams::parse(params));
    if (zeta_order > 0 && built.matrix.ctx().declared_torsion != zeta_order) {
        std::cerr << "error: " << label << " uses torsion order "
                  << built.matrix.ctx().declared_torsion << ", not " << zeta_order << "\n";
        return 1;
    }
    std::cout << diagram_to_json(built.matrix).dump(2) << "\n";
    return 0;
}

void print_verify(const VerifyReport& rep, bool verbose) {
    std::cout << (rep.match ? "MATCH " : "MISMATCH ") << rep.label
              << (rep.params.empty() ? "" : " [" + rep.params + "]") << "\n";
    if (verbose)
        for (const auto& c : rep.checks) std::cout << "  " << c << "\n";
    for (const auto& m : rep.mismatches) std::cout << "  " << m << "\n";
}

int run_catalog_verify(const std::string& label, const std::string& params, bool verbose) {
    auto rep = Catalog::instance().verify(label, CatalogParams::parse(params));
    print_verify(rep, verbose);
    return rep.match ? 0 : 1;
}

int run_catalog_verify_all(bool verbose) {
    bool all = true;
    for (const auto& inst : Catalog::instance().default_instances()) {
        auto rep = Catalog::instance().verify(inst.label, CatalogParams::parse(inst.params));
        print_verify(rep, verbose);
        all = all && rep.match;
    }
    std::cout << (all ? "verify-all: MATCH" : "verify-all: MISMATCH") << "\n";
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Weyl-groupoid and Nichols-algebra calculator for braidings of diagonal type"};
    app.require_subcommand(1);

    std::string file, label, params, point;
    std::int64_t cap = 0, zeta_order = 0;
    int degree = 6;
    bool no_recognize = false, timing = false, verbose = false;

    auto* analyze = app.add_subcommand("analyze", "full pipeline report for a diagram file");
    analyze->add_option("file", file, "diagram JSON file ('-' for stdin)")->required();
    analyze->add_option("--cap", cap, "override the point cap");
    analyze->add_flag("--no-recognize", no_recognize, "skip catalog recognition");
    analyze->add_flag("--timing", timing, "include timings (report no longer byte-stable)");

    auto* roots = app.add_subcommand("roots", "positive roots, heights and Cartan flags per point");
    roots->add_option("file", file)->required();
    roots->add_option("--cap", cap);

    auto* hilbert = app.add_subcommand("hilbert", "multigraded dims vs the PBW prediction");
    hilbert->add_option("file", file)->required();
    hilbert->add_option("--degree", degree, "total degree bound");

    auto* pbw = app.add_subcommand("pbw", "root Lyndon words and commutator trees");
    pbw->add_option("file", file)->required();

    auto* recognize = app.add_subcommand("recognize", "match a diagram against the catalog");
    recognize->add_option("file", file)->required();
    recognize->add_option("--cap", cap);

    auto* catalog = app.add_subcommand("catalog", "catalog operations");
    catalog->require_subcommand(1);
    auto* list = catalog->add_subcommand("list", "list all family labels");
    auto* gen = catalog->add_subcommand("gen", "emit a generated diagram file");
    gen->add_option("label", label)->required();
    gen->add_option("--params", params, "instance parameters, e.g. theta=3,N=5");
    gen->add_option("--zeta-order", zeta_order, "expected torsion order (validated)");
    gen->add_option("--point", point, "point name, e.g. a1");
    auto* verify = catalog->add_subcommand("verify", "verify one catalog entry");
    verify->add_option("label", label)->required();
    verify->add_option("--params", params);
    verify->add_flag("-v,--verbose", verbose);
    auto* verify_all = catalog->add_subcommand("verify-all", "run the full fixture suite");
    verify_all->add_flag("-v,--verbose", verbose);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return run_analyze(file, cap, no_recognize, timing, false);
        if (*roots) return run_analyze(file, cap, true, false, true);
        if (*hilbert) return run_hilbert(file, degree);
        if (*pbw) return run_pbw(file);
        if (*recognize) return run_recognize(file, cap);
        if (*list) return run_catalog_list();
        if (*gen) {
            if (!point.empty()) params += (params.empty() ? "" : ",") + std::string("point=") + point;
            return run_catalog_gen(label, params, zeta_order);
        }
        if (*verify) return run_catalog_verify(label, params, verbose);
        if (*verify_all) return run_catalog_verify_all(verbose);
    } catch (const cap_exceeded_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const generic_parameter_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
