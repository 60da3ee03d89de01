// qsp: command-line front end for the quasi K-matrix and quasi R-matrix engines.
//
// Exit status: 0 all requested checks pass, 1 a check failed, 2 parse error, 3 validation error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsp/appendix.hpp"
#include "qsp/catalogue.hpp"
#include "qsp/quasik.hpp"
#include "qsp/quasir.hpp"
#include "qsp/satake.hpp"

using namespace qsp;
namespace fs = std::filesystem;

namespace {

struct ParseFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ValidationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string spec;
    std::string params;
    int height = -1;
    std::string word;
    std::string format = "text";
    int bound = 5;
    int family_n = 4;
    std::string label;
    std::string dir;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseFailure("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// A file path, or a catalogue name when no such file exists. --params overlays "c" and "s".
DiagramSpec load_spec(const RunConfig& cfg) {
    nlohmann::json j;
    try {
        if (fs::exists(cfg.spec)) {
            j = nlohmann::json::parse(read_file(cfg.spec));
        } else {
            const auto names = catalogue_names();
            if (std::find(names.begin(), names.end(), cfg.spec) == names.end())
                throw ParseFailure("no such spec file or catalogue diagram: " + cfg.spec);
            j = nlohmann::json::parse(diagram_spec_json(catalogue_spec(cfg.spec)));
        }
        if (!cfg.params.empty()) {
            auto p = nlohmann::json::parse(read_file(cfg.params));
            for (const char* key : {"c", "s"})
                if (p.contains(key)) j[key] = p[key];
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseFailure(std::string("invalid JSON: ") + e.what());
    }
    try {
        return parse_diagram_spec(j.dump());
    } catch (const SpecParseError& e) {
        throw ParseFailure(e.what());
    } catch (const std::exception& e) {
        throw ValidationFailure(e.what());
    }
}

QSPData load_qsp(const RunConfig& cfg) {
    DiagramSpec spec = load_spec(cfg);
    SatakeReport v = validate_satake(spec.diagram);
    if (!v.valid) throw ValidationFailure("invalid Satake diagram\n" + v.str());
    try {
        return QSPData::from_spec(spec);
    } catch (const ParamError& e) {
        throw ValidationFailure(e.what());
    }
}

int height_of(const RunConfig& cfg, const QSPData& d) { return cfg.height >= 0 ? cfg.height : d.default_height(); }

// "1,2,1" -> {0,1,0}
Word parse_word(const std::string& text) {
    Word w;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size() || v < 1) throw std::invalid_argument(tok);
            w.push_back(v - 1);
        } catch (const std::exception&) {
            throw ParseFailure("bad word letter '" + tok + "'");
        }
    }
    return w;
}

std::string display_name(const std::string& name) {
    std::size_t k = name.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(name[k - 1]))) --k;
    if (k == 0 || k == name.size()) return name;
    return name.substr(0, k) + "_" + name.substr(k);
}

std::string series_text(const KSeries& K) {
    std::ostringstream os;
    bool first = true;
    for (const auto& mu : K.weights()) {
        if (!first) os << "\n";
        first = false;
        if (height(mu) == 0)
            os << AlgElem::from_uvec(K.at(mu)).str();
        else
            os << weight_str(mu) << ": " << AlgElem::from_uvec(K.at(mu)).str();
    }
    return os.str();
}

std::string render(const KSeries& K, const std::string& fmt) {
    if (fmt == "json") return K.json();
    if (fmt == "latex") return K.latex();
    return series_text(K);
}

std::string render(const CheckReport& r, const std::string& fmt) {
    if (fmt == "json") {
        nlohmann::ordered_json j;
        j["name"] = r.name;
        j["pass"] = r.pass;
        j["conjectural"] = r.conjectural;
        j["lines"] = r.lines;
        return j.dump();
    }
    if (fmt == "latex") {
        std::string s = "% " + r.str();
        for (std::size_t p = s.find('\n'); p != std::string::npos; p = s.find('\n', p + 1)) s.insert(p + 1, "% ");
        return s;
    }
    return r.str();
}

int report(const CheckReport& r, const std::string& fmt) {
    std::cout << render(r, fmt) << "\n";
    return r.pass ? 0 : 1;
}

// QSP_CACHE_DIR, when set, keeps finished `qkm solve` outputs keyed by spec, height and format.
std::string cached(const std::string& key, const std::function<std::string()>& compute) {
    const char* dir = std::getenv("QSP_CACHE_DIR");
    if (!dir || !*dir) return compute();
    fs::path p = fs::path(dir) / ("qkm-" + std::to_string(std::hash<std::string>{}(key)) + ".txt");
    if (fs::exists(p)) {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        std::string s = ss.str();
        const auto nl = s.find('\n');
        if (nl != std::string::npos && s.substr(0, nl) == std::to_string(key.size())) return s.substr(nl + 1);
    }
    std::string out = compute();
    fs::create_directories(dir);
    std::ofstream(p) << key.size() << "\n" << out;
    return out;
}

int cmd_validate(const RunConfig& cfg) {
    DiagramSpec spec = load_spec(cfg);
    SatakeReport v = validate_satake(spec.diagram);
    const std::string name = display_name(spec.diagram.name.empty() ? cfg.spec : spec.diagram.name);
    if (!v.valid) {
        std::cout << "invalid: " << name << "\n" << v.str() << "\n";
        return 3;
    }
    RestrictedData r = restricted_data(spec.diagram);
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["valid"] = true;
        j["name"] = name;
        j["restricted_type"] = r.restricted_type;
        j["non_reduced"] = r.non_reduced;
        std::vector<int> reps;
        for (int i : r.reps) reps.push_back(i + 1);
        j["representatives"] = reps;
        nlohmann::ordered_json cox = nlohmann::ordered_json::array();
        for (const auto& [ij, m] : r.coxeter) cox.push_back({ij.first + 1, ij.second + 1, m});
        j["coxeter"] = cox;
        std::vector<int> w0;
        for (int i : r.w0_tilde) w0.push_back(i + 1);
        j["w0_tilde"] = w0;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "valid: " << name << ", restricted type " << r.restricted_type << "\n";
    }
    return 0;
}

int cmd_restricted(const RunConfig& cfg) {
    DiagramSpec spec = load_spec(cfg);
    if (!validate_satake(spec.diagram).valid) throw ValidationFailure("invalid Satake diagram");
    RestrictedData r = restricted_data(spec.diagram);
    CheckReport rep = length_additivity_check(r, cfg.bound);
    rep.note("restricted type " + r.restricted_type + (r.non_reduced ? " (non-reduced)" : ""));
    for (const auto& [ij, m] : r.coxeter)
        rep.note("m~(" + std::to_string(ij.first + 1) + "," + std::to_string(ij.second + 1) + ") = " + std::to_string(m));
    rep.note("w0~ = " + word_str(r.w0_tilde));
    return report(rep, cfg.format);
}

int cmd_solve(const RunConfig& cfg) {
    QSPData d = load_qsp(cfg);
    const int N = height_of(cfg, d);
    const std::string key = diagram_spec_json(load_spec(cfg)) + "|" + std::to_string(N) + "|" + cfg.format;
    std::cout << cached(key, [&] { return render(solve_qkm(d, N), cfg.format); }) << "\n";
    return 0;
}

int cmd_factor(const RunConfig& cfg) {
    QSPData d = load_qsp(cfg);
    const int N = height_of(cfg, d);
    Word w = cfg.word.empty() ? d.restricted.w0_tilde : parse_word(cfg.word);
    for (int l : w)
        if (l >= d.diagram.size() || d.restricted.rep_of[static_cast<std::size_t>(l)] != l)
            throw ValidationFailure("letter " + std::to_string(l + 1) + " is not a white orbit representative");
    if (!d.restricted.is_tilde_reduced(w)) throw ValidationFailure("word " + word_str(w) + " is not reduced");
    std::vector<KSeries> parts = partial_factors(d, w, N);
    KSeries P = partial_qkm(d, w, N);
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["word"] = nlohmann::ordered_json::array();
        for (int l : w) j["word"].push_back(l + 1);
        j["factors"] = nlohmann::ordered_json::array();
        for (const auto& f : parts) j["factors"].push_back(nlohmann::ordered_json::parse(f.json()));
        j["product"] = nlohmann::ordered_json::parse(P.json());
        std::cout << j.dump() << "\n";
        return 0;
    }
    for (std::size_t k = 0; k < parts.size(); ++k) {
        std::cout << (cfg.format == "latex" ? "% " : "") << "factor " << k + 1 << "\n" << render(parts[k], cfg.format) << "\n";
    }
    std::cout << (cfg.format == "latex" ? "% " : "") << "product\n" << render(P, cfg.format) << "\n";
    return 0;
}

int cmd_theoremA(const RunConfig& cfg, bool headline) {
    QSPData d = load_qsp(cfg);
    CheckReport r = check_theoremA(d, height_of(cfg, d));
    if (headline && cfg.format == "text") {
        int words = 0;
        for (const auto& l : r.lines) words += l.rfind("word ", 0) == 0;
        std::cout << r.name << ": " << (r.pass ? "PASS" : "FAIL") << (r.conjectural ? " (conjectural)" : "") << " ("
                  << (words == 2 ? std::string("both words") : std::to_string(words) + " words") << ")\n";
        for (const auto& l : r.lines) std::cout << "  " << l << "\n";
        return r.pass ? 0 : 1;
    }
    return report(r, cfg.format);
}

int cmd_intertwiner(const RunConfig& cfg) {
    QSPData d = load_qsp(cfg);
    const int N = height_of(cfg, d);
    KSeries K = solve_qkm(d, N);
    CheckReport r = intertwiner_check(d, K, N);
    r.merge(derivation_vanishing_check(d, K));
    return report(r, cfg.format);
}

RootDatum datum_of(const RunConfig& cfg) {
    try {
        return RootDatum::from_label(cfg.label);
    } catch (const std::exception& e) {
        throw ParseFailure("bad root datum label '" + cfg.label + "': " + e.what());
    }
}

Word longest_word(const RootDatum& rd, const RunConfig& cfg) {
    if (!cfg.word.empty()) return parse_word(cfg.word);
    std::vector<int> all(static_cast<std::size_t>(rd.rank()));
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = static_cast<int>(k);
    return longest_element(rd, all).reduced_word();
}

int cmd_rmat_factor(const RunConfig& cfg) {
    RootDatum rd = datum_of(cfg);
    const int N = cfg.height >= 0 ? cfg.height : 4;
    RSeries R;
    try {
        R = R_factored(rd, longest_word(rd, cfg), N);
    } catch (const std::invalid_argument& e) {
        throw ValidationFailure(e.what());
    }
    std::cout << (cfg.format == "json" ? R.json() : R.str()) << "\n";
    return 0;
}

int cmd_rmat_verify(const RunConfig& cfg) {
    RootDatum rd = datum_of(cfg);
    const int N = cfg.height >= 0 ? cfg.height : 4;
    RSeries R;
    try {
        R = R_factored(rd, longest_word(rd, cfg), N);
    } catch (const std::invalid_argument& e) {
        throw ValidationFailure(e.what());
    }
    CheckReport all;
    all.name = "R intertwiner";
    for (int i = 0; i < rd.rank(); ++i) all.merge(verify_R_intertwiner(R, i, N));
    return report(all, cfg.format);
}

int cmd_appendix(const RunConfig& cfg) { return report(appendix_identity_suite(cfg.bound, cfg.family_n), cfg.format); }

int cmd_catalogue_list() {
    for (const auto& n : catalogue_names()) {
        RestrictedData r = restricted_data(catalogue_spec(n).diagram);
        std::cout << n << " " << r.restricted_type << "\n";
    }
    return 0;
}

int cmd_catalogue_export(const RunConfig& cfg) {
    fs::create_directories(cfg.dir);
    for (const auto& n : catalogue_names()) {
        std::string lower = n;
        for (char& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        std::ofstream(fs::path(cfg.dir) / (lower + ".json")) << nlohmann::ordered_json::parse(diagram_spec_json(catalogue_spec(n))).dump(2)
                                                             << "\n";
    }
    std::cout << catalogue_names().size() << " diagrams written to " << cfg.dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasi K-matrices of quantum symmetric pairs"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::function<int()> action;

    auto spec_opts = [&](CLI::App* c) {
        c->add_option("spec", cfg.spec, "diagram spec file or catalogue name")->required();
        c->add_option("--params", cfg.params, "JSON file with \"c\" and \"s\" overriding the diagram file");
    };
    auto fmt_opt = [&](CLI::App* c) {
        c->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json", "latex"}));
    };
    auto height_opt = [&](CLI::App* c) { c->add_option("--height", cfg.height)->check(CLI::NonNegativeNumber); };

    auto* satake = app.add_subcommand("satake", "Satake diagrams and restricted Weyl groups");
    satake->require_subcommand(1);
    auto* validate = satake->add_subcommand("validate", "check admissibility");
    spec_opts(validate);
    fmt_opt(validate);
    validate->callback([&] { action = [&] { return cmd_validate(cfg); }; });
    auto* restricted = satake->add_subcommand("restricted", "Coxeter data and length additivity");
    spec_opts(restricted);
    fmt_opt(restricted);
    restricted->add_option("--bound", cfg.bound, "restricted length bound")->check(CLI::NonNegativeNumber);
    restricted->callback([&] {
        action = [&] { return cmd_restricted(cfg); };
    });

    auto* qkm = app.add_subcommand("qkm", "quasi K-matrices");
    qkm->require_subcommand(1);
    auto* solve = qkm->add_subcommand("solve", "oracle by the derivation recursion");
    spec_opts(solve);
    fmt_opt(solve);
    height_opt(solve);
    solve->callback([&] { action = [&] { return cmd_solve(cfg); }; });
    auto* factor = qkm->add_subcommand("factor", "partial quasi K-matrix along a word");
    spec_opts(factor);
    fmt_opt(factor);
    height_opt(factor);
    factor->add_option("--word", cfg.word, "comma-separated 1-based orbit representatives");
    factor->callback([&] { action = [&] { return cmd_factor(cfg); }; });
    auto* compare = qkm->add_subcommand("compare", "oracle against the factorisation");
    spec_opts(compare);
    fmt_opt(compare);
    height_opt(compare);
    compare->callback([&] { action = [&] { return cmd_theoremA(cfg, true); }; });

    auto* verify = app.add_subcommand("verify", "verification runs");
    verify->require_subcommand(1);
    auto* appendix = verify->add_subcommand("appendix", "rank-two identity suite");
    fmt_opt(appendix);
    appendix->add_option("--bound", cfg.bound)->check(CLI::NonNegativeNumber);
    appendix->add_option("--family-n", cfg.family_n, "member of the AIII_n family")->check(CLI::Range(4, 12));
    appendix->callback([&] { action = [&] { return cmd_appendix(cfg); }; });
    auto* thA = verify->add_subcommand("theoremA", "oracle against the factorisation");
    spec_opts(thA);
    fmt_opt(thA);
    height_opt(thA);
    thA->callback([&] { action = [&] { return cmd_theoremA(cfg, false); }; });
    auto* inter = verify->add_subcommand("intertwiner", "bar intertwining and vanishing derivations");
    spec_opts(inter);
    fmt_opt(inter);
    height_opt(inter);
    inter->callback([&] { action = [&] { return cmd_intertwiner(cfg); }; });

    auto* rmat = app.add_subcommand("rmat", "quasi R-matrix");
    rmat->require_subcommand(1);
    for (const char* name : {"factor", "verify"}) {
        auto* c = rmat->add_subcommand(name, std::string(name) == "factor" ? "product over a reduced word of w0"
                                                                           : "intertwining identity for every E_i, F_i, K_i");
        c->add_option("label", cfg.label, "root datum, e.g. A2 or B2")->required();
        c->add_option("--word", cfg.word, "comma-separated reduced word of w0");
        fmt_opt(c);
        height_opt(c);
        const bool is_factor = std::string(name) == "factor";
        c->callback([&, is_factor] {
            action = [&, is_factor] { return is_factor ? cmd_rmat_factor(cfg) : cmd_rmat_verify(cfg); };
        });
    }

    auto* cat = app.add_subcommand("catalogue", "bundled diagrams");
    cat->require_subcommand(1);
    cat->add_subcommand("list")->callback([&] { action = [] { return cmd_catalogue_list(); }; });
    auto* exp = cat->add_subcommand("export", "write one spec file per diagram");
    exp->add_option("dir", cfg.dir)->required();
    exp->callback([&] { action = [&] { return cmd_catalogue_export(cfg); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        return action();
    } catch (const ParseFailure& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationFailure& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 3;
    } catch (const ParamError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 3;
    } catch (const InconsistentSystem& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
