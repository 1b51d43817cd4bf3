// Command line front end: load codes and (q-)matroids, compute invariants,
// and run theorem-verification suites.
//
// Exit codes: 0 success / all checks pass, 1 theorem violation, 2 usage or
// parse error, 3 size guard.  Identical inputs and flags produce
// byte-identical output.

#include <bit>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qmatroids/verify.hpp"

using namespace qmatroids;

namespace {

std::string basename_of(const std::string& path) {
    auto pos = path.find_last_of("/\\");
    return pos == std::string::npos ? path : path.substr(pos + 1);
}

QMatroid load_qmatroid(const std::string& qmatroid_path, const std::string& code_path) {
    if (qmatroid_path.empty() == code_path.empty())
        throw InvalidArgument("exactly one of --qmatroid and --code is required");
    if (!qmatroid_path.empty())
        return qmatroid_from_json(read_text_file(qmatroid_path));
    return associated_qmatroid(code_from_json(read_text_file(code_path)));
}

CharPolyMethod method_from(const std::string& name) {
    if (name == "definition") return CharPolyMethod::definition;
    if (name == "flats") return CharPolyMethod::flats;
    if (name == "recursive") return CharPolyMethod::recursive;
    throw InvalidArgument("unknown method '" + name + "'");
}

struct Options {
    std::string qmatroid_path;
    std::string code_path;
    std::string matroid_path;
    std::string corpus_path;
    std::string method = "flats";
    std::string metric = "rank";
    std::string format = "text";
    std::string suite;
    unsigned t = 1;
    unsigned seed = 1;
    std::size_t samples = 200000;
    bool cross_check = false;
    bool companion = false;
    bool check_axioms = false;
};

int run_charpoly(const Options& opt) {
    QMatroid qm = load_qmatroid(opt.qmatroid_path, opt.code_path);
    std::cout << char_poly(qm, method_from(opt.method)).str() << "\n";
    if (opt.cross_check) {
        Polynomial d = char_poly(qm, CharPolyMethod::definition);
        Polynomial f = char_poly(qm, CharPolyMethod::flats);
        Polynomial r = char_poly(qm, CharPolyMethod::recursive);
        if (d == f && f == r) {
            std::cout << "cross-check: pass\n";
        } else {
            std::cout << "cross-check: fail definition=" << d.str() << " flats=" << f.str()
                      << " recursive=" << r.str() << "\n";
            return 1;
        }
    }
    return 0;
}

int run_projectivize(const Options& opt) {
    QMatroid qm = load_qmatroid(opt.qmatroid_path, opt.code_path);
    Projectivization p(qm);
    std::cout << matroid_json(p.matroid());
    return 0;
}

int run_weights(const Options& opt) {
    if (opt.code_path.empty()) throw InvalidArgument("--code is required");
    LinearCode c = code_from_json(read_text_file(opt.code_path));
    if (opt.companion) c = hamming_assoc_code(c);
    Metric metric = opt.metric == "hamming" ? Metric::hamming : Metric::rank;
    WeightDistribution wd = weight_distribution(c, metric);
    if (opt.format == "csv")
        std::cout << weight_report_csv(wd);
    else if (opt.format == "json")
        std::cout << weight_report_json(wd);
    else
        std::cout << wd.str() << "\n";
    return 0;
}

int run_verify(const Options& opt) {
    std::vector<CheckResult> results;
    if (opt.suite == "charpoly") {
        results = verify_charpoly_suite(
            load_qmatroid(opt.qmatroid_path, opt.code_path),
            basename_of(opt.qmatroid_path.empty() ? opt.code_path : opt.qmatroid_path));
    } else if (opt.suite == "projectivization") {
        results = verify_projectivization_suite(
            load_qmatroid(opt.qmatroid_path, opt.code_path),
            basename_of(opt.qmatroid_path.empty() ? opt.code_path : opt.qmatroid_path));
    } else if (opt.suite == "maps") {
        if (opt.corpus_path.empty()) throw InvalidArgument("--corpus is required");
        results = verify_maps_suite(map_corpus_from_json(read_text_file(opt.corpus_path)));
    } else if (opt.suite == "critical") {
        if (opt.code_path.empty()) throw InvalidArgument("--code is required");
        LinearCode c = code_from_json(read_text_file(opt.code_path));
        results = verify_critical_suite(c, opt.t, basename_of(opt.code_path));
    } else if (opt.suite == "weights") {
        if (opt.code_path.empty()) throw InvalidArgument("--code is required");
        LinearCode c = code_from_json(read_text_file(opt.code_path));
        results = verify_weights_suite(c, basename_of(opt.code_path));
    } else {
        throw InvalidArgument("unknown suite '" + opt.suite + "'");
    }
    std::cout << checks_json(results);
    for (const CheckResult& r : results)
        if (!r.pass()) {
            std::cerr << "violation: " << r.theorem << " at " << r.instance << ": "
                      << r.witness << "\n";
            return 1;
        }
    return 0;
}

int run_maps(const Options& opt) {
    if (opt.corpus_path.empty()) throw InvalidArgument("--corpus is required");
    auto corpus = map_corpus_from_json(read_text_file(opt.corpus_path));
    for (const MapCorpusItem& item : corpus) {
        bool weak = is_qweak(item.map, item.domain, item.codomain);
        bool strong = is_qstrong(item.map, item.domain, item.codomain);
        std::cout << item.name << ": q-weak=" << (weak ? "yes" : "no")
                  << " q-strong=" << (strong ? "yes" : "no") << "\n";
    }
    return 0;
}

int run_info(const Options& opt) {
    int given = !opt.qmatroid_path.empty() + !opt.code_path.empty() + !opt.matroid_path.empty();
    if (given != 1)
        throw InvalidArgument("exactly one of --qmatroid, --code, --matroid is required");

    if (!opt.code_path.empty()) {
        LinearCode c = code_from_json(read_text_file(opt.code_path));
        std::cout << "type: code\n"
                  << "q: " << c.q() << "\n"
                  << "m: " << c.m() << "\n"
                  << "n: " << c.length() << "\n"
                  << "k: " << c.dimension() << "\n"
                  << "size: " << c.size() << "\n";
        return 0;
    }

    if (!opt.qmatroid_path.empty()) {
        QMatroid qm = qmatroid_from_json(read_text_file(opt.qmatroid_path));
        std::cout << "type: q-matroid\n"
                  << "q: " << qm.field()->q() << "\n"
                  << "n: " << qm.dim() << "\n"
                  << "rank: " << qm.rank_full() << "\n"
                  << "flats: " << qm.flats().size() << "\n"
                  << "loops-dim: " << qm.loops_subspace().dim() << "\n";
        if (opt.check_axioms) {
            AxiomReport rep = check_qmatroid_axioms(qm);
            std::cout << "axioms: " << (rep.ok() ? "ok" : "violated") << "\n";
            if (!rep.ok()) {
                std::cerr << "violation: " << rep.violations.front().axiom << " at "
                          << rep.violations.front().witness << "\n";
                return 1;
            }
        }
        return 0;
    }

    Matroid m = matroid_from_json(read_text_file(opt.matroid_path));
    std::cout << "type: matroid\n"
              << "elements: " << m.size() << "\n"
              << "rank: " << m.rank_full() << "\n"
              << "flats: " << m.flats().size() << "\n"
              << "loops: " << std::popcount(m.loops()) << "\n";
    if (opt.check_axioms) {
        AxiomReport rep = check_matroid_axioms(m, opt.seed, opt.samples);
        std::cout << "axioms: " << (rep.ok() ? "ok" : "violated") << "\n";
        if (!rep.ok()) {
            std::cerr << "violation: " << rep.violations.front().axiom << " at "
                      << rep.violations.front().witness << "\n";
            return 1;
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"q-matroid invariants, projectivization, and rank-metric verification"};
    app.require_subcommand(1);

    CLI::App* charpoly = app.add_subcommand("charpoly", "characteristic polynomial");
    charpoly->add_option("--qmatroid", opt.qmatroid_path, "q-matroid JSON file");
    charpoly->add_option("--code", opt.code_path, "code JSON file");
    charpoly->add_option("--method", opt.method, "definition | flats | recursive")
        ->check(CLI::IsMember({"definition", "flats", "recursive"}));
    charpoly->add_flag("--cross-check", opt.cross_check, "compare all three methods");

    CLI::App* projectivize =
        app.add_subcommand("projectivize", "matroid on projective points, as JSON");
    projectivize->add_option("--qmatroid", opt.qmatroid_path, "q-matroid JSON file");
    projectivize->add_option("--code", opt.code_path, "code JSON file");

    CLI::App* weights = app.add_subcommand("weights", "weight distribution of a code");
    weights->add_option("--code", opt.code_path, "code JSON file");
    weights->add_option("--metric", opt.metric, "rank | hamming")
        ->check(CLI::IsMember({"rank", "hamming"}));
    weights->add_option("--format", opt.format, "text | csv | json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    weights->add_flag("--companion", opt.companion,
                      "use the Hamming companion code over the projective points");

    CLI::App* verify = app.add_subcommand("verify", "run a theorem-verification suite");
    verify->add_option("suite", opt.suite,
                       "projectivization | maps | charpoly | critical | weights")
        ->required()
        ->check(CLI::IsMember({"projectivization", "maps", "charpoly", "critical", "weights"}));
    verify->add_option("--qmatroid", opt.qmatroid_path, "q-matroid JSON file");
    verify->add_option("--code", opt.code_path, "code JSON file");
    verify->add_option("--corpus", opt.corpus_path, "map corpus JSON file");
    verify->add_option("--t", opt.t, "tuple length for the critical suite")
        ->check(CLI::Range(1u, 8u));

    CLI::App* maps = app.add_subcommand("maps", "classify the maps of a corpus");
    maps->add_option("--corpus", opt.corpus_path, "map corpus JSON file");

    CLI::App* info = app.add_subcommand("info", "summarize one input object");
    info->add_option("--qmatroid", opt.qmatroid_path, "q-matroid JSON file");
    info->add_option("--code", opt.code_path, "code JSON file");
    info->add_option("--matroid", opt.matroid_path, "matroid JSON file");
    info->add_flag("--check-axioms", opt.check_axioms, "run the rank-axiom checker");
    info->add_option("--seed", opt.seed, "seed for sampled axiom checking");
    info->add_option("--samples", opt.samples, "sample count for large groundsets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (charpoly->parsed()) return run_charpoly(opt);
        if (projectivize->parsed()) return run_projectivize(opt);
        if (weights->parsed()) return run_weights(opt);
        if (verify->parsed()) return run_verify(opt);
        if (maps->parsed()) return run_maps(opt);
        if (info->parsed()) return run_info(opt);
    } catch (const GuardError& e) {
        std::cerr << "size guard: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidArgument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
