// Command-line interface: computes and certifies complete eigenvalue sets
// of s-blowup hypergraphs, with machine-readable JSON/CSV output.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "blowup/charpoly.hpp"
#include "blowup/classifier.hpp"
#include "blowup/engine.hpp"
#include "blowup/graph.hpp"
#include "blowup/weights.hpp"

using json = nlohmann::ordered_json;
using namespace blowup;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitVerification = 4;
constexpr int kExitNumeric = 5;

struct InputOptions {
    std::string file;
    std::string graph6;
    std::string edges;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    auto* f = cmd->add_option("--input", in.file, "edge-list file");
    auto* g = cmd->add_option("--graph6", in.graph6, "graph6 string");
    auto* e = cmd->add_option("--edges", in.edges, "inline edge list ('u v; u v; ...')");
    f->excludes(g)->excludes(e);
    g->excludes(e);
}

struct LoadedGraph {
    Graph graph;
    std::string format;
    std::string source;
};

LoadedGraph load_graph(const InputOptions& in) {
    if (!in.graph6.empty()) return {parse_graph6(in.graph6), "graph6", in.graph6};
    if (!in.edges.empty()) {
        std::string text = in.edges;
        for (char& c : text)
            if (c == ';' || c == ',') c = '\n';
        return {parse_edge_list(text), "edge_list", in.edges};
    }
    if (!in.file.empty()) {
        std::ifstream f(in.file);
        if (!f) throw ParseError("cannot open input file: " + in.file);
        std::stringstream ss;
        ss << f.rdbuf();
        return {parse_edge_list(ss.str()), "file", in.file};
    }
    throw ValidationError("no graph input given (use --input, --graph6 or --edges)");
}

json complex_json(std::complex<double> z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json graph_json(const LoadedGraph& lg) {
    json edges = json::array();
    for (auto [u, v] : lg.graph.edges()) edges.push_back(json::array({u, v}));
    return json{{"format", lg.format},
                {"source", lg.source},
                {"n", lg.graph.vertex_count()},
                {"edges", edges}};
}

json witness_json(const Witness& w) {
    if (w.zero_certificate)
        return json{{"type", "zero_single_vertex"},
                    {"subset", w.subset.vertices()},
                    {"eta", w.eta_exponents},
                    {"rotation", 0}};
    return json{{"type", "eta"},
                {"subset", w.subset.vertices()},
                {"eta", w.eta_exponents},
                {"rotation", w.rotation}};
}

json document(const std::string& command, const LoadedGraph& lg, std::optional<int> s,
              json result, json meta) {
    json doc;
    doc["schema_version"] = "1";
    doc["command"] = command;
    doc["input"] = graph_json(lg);
    doc["s"] = s ? json(*s) : json(nullptr);
    doc["result"] = std::move(result);
    doc["meta"] = std::move(meta);
    return doc;
}

json meta_for(const SpectrumReport& rep, bool timing) {
    return json{{"tolerance", rep.tol},
                {"reductions",
                 {{"eta", rep.options.use_eta_reduction},
                  {"rotation_quotient", rep.options.use_rotation_quotient},
                  {"connected", rep.options.use_connected_reduction}}},
                {"certified", rep.options.certify},
                {"counts",
                 {{"subsets", rep.counts.subsets},
                  {"matrices", rep.counts.matrices},
                  {"eigenvalue_records", rep.counts.records}}},
                {"wall_ms", timing ? json(rep.counts.wall_ms) : json(nullptr)}};
}

std::string join_ints(const std::vector<int>& v, char sep) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out.push_back(sep);
        out += std::to_string(v[i]);
    }
    return out;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int run_spectrum(const InputOptions& in, int s, double tol, bool no_eta, bool no_rot, bool no_conn,
                 bool no_certify, int threads, bool csv, bool timing) {
    LoadedGraph lg = load_graph(in);
    EngineOptions opts;
    opts.tol = tol;
    opts.use_eta_reduction = !no_eta;
    opts.use_rotation_quotient = !no_rot;
    opts.use_connected_reduction = !no_conn;
    opts.certify = !no_certify;
    opts.worker_count = threads;
    SpectrumReport rep = blowup_spectrum(lg.graph, s, opts);

    if (csv) {
        std::ostringstream out;
        out << "re,im,residual,witness_subset,witness_eta\n";
        out.precision(17);
        for (const auto& v : rep.values) {
            out << v.value.real() << "," << v.value.imag() << ",";
            if (v.residual) out << *v.residual;
            out << "," << join_ints(v.witness.subset.vertices(), ';') << ","
                << join_ints(v.witness.eta_exponents, ';') << "\n";
        }
        std::cout << out.str();
        return 0;
    }

    json values = json::array();
    for (const auto& v : rep.values) {
        json entry;
        entry["value"] = complex_json(v.value);
        entry["residual"] = v.residual ? json(*v.residual) : json(nullptr);
        entry["witness"] = witness_json(v.witness);
        values.push_back(std::move(entry));
    }
    emit(document("spectrum", lg, s, json{{"eigenvalues", std::move(values)}},
                  meta_for(rep, timing)));
    return 0;
}

int run_verify(const std::string& spectrum_file, int s) {
    std::ifstream f(spectrum_file);
    if (!f) throw ParseError("cannot open spectrum file: " + spectrum_file);
    json doc;
    try {
        doc = json::parse(f);
    } catch (const json::exception& e) {
        throw ParseError(std::string("spectrum file is not valid JSON: ") + e.what());
    }
    try {
        if (doc.at("s").get<int>() != s)
            throw ValidationError("--s does not match the spectrum document");
        LoadedGraph lg;
        lg.format = doc.at("input").at("format").get<std::string>();
        lg.source = doc.at("input").at("source").get<std::string>();
        lg.graph = Graph(doc.at("input").at("n").get<int>());
        for (const auto& e : doc.at("input").at("edges"))
            lg.graph.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
        double tol = doc.at("meta").at("tolerance").get<double>();

        std::vector<ReportedValue> values;
        for (const auto& entry : doc.at("result").at("eigenvalues")) {
            ReportedValue v;
            v.value = {entry.at("value").at("re").get<double>(),
                       entry.at("value").at("im").get<double>()};
            const auto& w = entry.at("witness");
            v.witness.zero_certificate = w.at("type").get<std::string>() == "zero_single_vertex";
            v.witness.subset.parent_n = lg.graph.vertex_count();
            for (const auto& vv : w.at("subset"))
                v.witness.subset.members |= 1ull << vv.get<int>();
            for (const auto& fe : w.at("eta")) v.witness.eta_exponents.push_back(fe.get<int>());
            v.witness.rotation = w.at("rotation").get<int>();
            values.push_back(std::move(v));
        }

        VerifyResult res = verify_spectrum(lg.graph, s, values, tol);
        json out = json::array();
        for (const auto& v : res.values)
            out.push_back(json{{"value", complex_json(v.value)},
                               {"passed", v.passed},
                               {"residual", v.residual},
                               {"message", v.message}});
        emit(document("verify", lg, s,
                      json{{"all_passed", res.all_passed}, {"values", std::move(out)}},
                      json{{"tolerance", tol}, {"wall_ms", nullptr}}));
        return res.all_passed ? 0 : kExitVerification;
    } catch (const json::exception& e) {
        throw ParseError(std::string("spectrum document missing fields: ") + e.what());
    }
}

int run_classify(const InputOptions& in, int s, double lambda) {
    LoadedGraph lg = load_graph(in);
    HNVerdict v = classify_real_eigenvalue(lg.graph, s, lambda);
    json result;
    result["lambda"] = v.lambda;
    result["verdict"] = v.verdict == HNClass::H ? "H" : (v.verdict == HNClass::N ? "N" : "ZERO");
    if (v.verdict != HNClass::N) {
        result["eigenvector"] = v.eigenvector;
        result["residual"] = v.residual;
        if (v.verdict == HNClass::H) result["witness_subset"] = v.witness_subset.vertices();
    } else {
        json fails = json::array();
        for (const auto& f : v.failures)
            fails.push_back(json{{"subset", f.subset.vertices()}, {"reason", f.reason}});
        result["failures"] = std::move(fails);
    }
    emit(document("classify", lg, s, std::move(result), json{{"wall_ms", nullptr}}));
    return 0;
}

int run_charpoly(const InputOptions& in, int s, const std::string& eta_csv) {
    LoadedGraph lg = load_graph(in);
    EtaAssignment h;
    h.s = s;
    std::stringstream ss(eta_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            h.exponents.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw ParseError("--eta: malformed exponent '" + tok + "'");
        }
    }
    PolyCoeffs p = char_poly(adjacency_from_eta(lg.graph, h));
    json coeffs = json::array();
    for (const auto& c : p.coeffs) coeffs.push_back(complex_json(c));
    emit(document("charpoly", lg, s,
                  json{{"degree", p.degree()}, {"coefficients_ascending", std::move(coeffs)},
                       {"eta_exponents", h.exponents}},
                  json{{"wall_ms", nullptr}}));
    return 0;
}

int run_blowup(const InputOptions& in, int s) {
    LoadedGraph lg = load_graph(in);
    auto [h, bm] = build_blowup(lg.graph, s);
    json edges = json::array();
    for (const auto& e : h.edges) edges.push_back(e);
    emit(document("blowup", lg, s, json{{"k", h.k}, {"n", h.n}, {"edges", std::move(edges)}},
                  json{{"wall_ms", nullptr}}));
    return 0;
}

int run_radius(const InputOptions& in) {
    LoadedGraph lg = load_graph(in);
    emit(document("radius", lg, std::nullopt, json{{"rho", spectral_radius(lg.graph)}},
                  json{{"wall_ms", nullptr}}));
    return 0;
}

int run_crossval(const InputOptions& in, int s, double tol) {
    LoadedGraph lg = load_graph(in);
    EngineOptions opts;
    opts.tol = tol;
    CrossValidationReport rep = cross_validate_reductions(lg.graph, s, opts);
    json runs = json::array();
    for (const auto& r : rep.runs) {
        json missing = json::array(), extra = json::array();
        for (const auto& z : r.diff_vs_baseline.a_minus_b) missing.push_back(complex_json(z));
        for (const auto& z : r.diff_vs_baseline.b_minus_a) extra.push_back(complex_json(z));
        runs.push_back(json{{"name", r.name},
                            {"matrices", r.matrices},
                            {"values", r.value_count},
                            {"extra_vs_baseline", std::move(missing)},
                            {"missing_vs_baseline", std::move(extra)}});
    }
    emit(document("crossval", lg, s,
                  json{{"all_equal", rep.all_equal}, {"runs", std::move(runs)}},
                  json{{"tolerance", tol}, {"wall_ms", nullptr}}));
    return rep.all_equal ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"eigenvalues of s-blowup hypergraphs via weighted induced subgraphs"};
    app.require_subcommand(1);

    // spectrum
    auto* sc_spectrum = app.add_subcommand("spectrum", "complete certified eigenvalue set");
    InputOptions in_spectrum;
    add_input_options(sc_spectrum, in_spectrum);
    int s_spectrum = 2;
    double tol = 1e-7;
    bool no_eta = false, no_rot = false, no_conn = false, no_certify = false;
    bool csv = false, json_flag = false, timing = false;
    int threads = 1;
    sc_spectrum->add_option("--s", s_spectrum, "half-uniformity (blowup block size)")->required();
    sc_spectrum->add_option("--tol", tol, "merge tolerance");
    sc_spectrum->add_flag("--no-eta-reduction", no_eta);
    sc_spectrum->add_flag("--no-rotation-quotient", no_rot);
    sc_spectrum->add_flag("--no-connected-reduction", no_conn);
    sc_spectrum->add_flag("--no-certify", no_certify);
    sc_spectrum->add_option("--threads", threads, "worker count");
    sc_spectrum->add_flag("--json", json_flag, "JSON output (default)");
    sc_spectrum->add_flag("--csv", csv, "CSV output");
    sc_spectrum->add_flag("--timing", timing, "include wall-clock time in meta");

    // verify
    auto* sc_verify = app.add_subcommand("verify", "re-certify a saved spectrum document");
    int s_verify = 2;
    std::string spectrum_file;
    sc_verify->add_option("--s", s_verify)->required();
    sc_verify->add_option("--spectrum", spectrum_file, "spectrum JSON document")->required();

    // classify
    auto* sc_classify = app.add_subcommand("classify", "H/N classification of a real eigenvalue");
    InputOptions in_classify;
    add_input_options(sc_classify, in_classify);
    int s_classify = 2;
    double lambda = 0.0;
    sc_classify->add_option("--s", s_classify)->required();
    sc_classify->add_option("--lambda", lambda, "real eigenvalue to classify")->required();

    // charpoly
    auto* sc_charpoly = app.add_subcommand("charpoly", "characteristic polynomial of a weighting");
    InputOptions in_charpoly;
    add_input_options(sc_charpoly, in_charpoly);
    int s_charpoly = 2;
    std::string eta_csv;
    sc_charpoly->add_option("--s", s_charpoly)->required();
    sc_charpoly->add_option("--eta", eta_csv, "comma-separated eta exponents")->required();

    // blowup
    auto* sc_blowup = app.add_subcommand("blowup", "export the blowup hypergraph as JSON");
    InputOptions in_blowup;
    add_input_options(sc_blowup, in_blowup);
    int s_blowup = 2;
    sc_blowup->add_option("--s", s_blowup)->required();

    // radius
    auto* sc_radius = app.add_subcommand("radius", "adjacency spectral radius of the base graph");
    InputOptions in_radius;
    add_input_options(sc_radius, in_radius);

    // crossval
    auto* sc_crossval = app.add_subcommand("crossval", "cross-validate the symmetry reductions");
    InputOptions in_crossval;
    add_input_options(sc_crossval, in_crossval);
    int s_crossval = 2;
    double tol_crossval = 1e-7;
    sc_crossval->add_option("--s", s_crossval)->required();
    sc_crossval->add_option("--tol", tol_crossval);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (sc_spectrum->parsed())
            return run_spectrum(in_spectrum, s_spectrum, tol, no_eta, no_rot, no_conn, no_certify,
                                threads, csv, timing);
        if (sc_verify->parsed()) return run_verify(spectrum_file, s_verify);
        if (sc_classify->parsed()) return run_classify(in_classify, s_classify, lambda);
        if (sc_charpoly->parsed()) return run_charpoly(in_charpoly, s_charpoly, eta_csv);
        if (sc_blowup->parsed()) return run_blowup(in_blowup, s_blowup);
        if (sc_radius->parsed()) return run_radius(in_radius);
        if (sc_crossval->parsed()) return run_crossval(in_crossval, s_crossval, tol_crossval);
    } catch (const ParseError& e) {
        std::cerr << json{{"error", {{"type", "parse"}, {"message", e.what()}}}}.dump() << "\n";
        return kExitInput;
    } catch (const ValidationError& e) {
        std::cerr << json{{"error", {{"type", "validation"}, {"message", e.what()}}}}.dump()
                  << "\n";
        return kExitInput;
    } catch (const CertificationError& e) {
        std::cerr << json{{"error", {{"type", "certification"}, {"message", e.what()}}}}.dump()
                  << "\n";
        return kExitVerification;
    } catch (const NumericError& e) {
        std::cerr << json{{"error", {{"type", "numeric"}, {"message", e.what()}}}}.dump() << "\n";
        return kExitNumeric;
    }
    return kExitUsage;
}
