// Command-line front-end: generate instances, colour, detect, certify, verify.

#include <spindle/coloring.hpp>
#include <spindle/generators.hpp>
#include <spindle/io.hpp>
#include <spindle/nice.hpp>
#include <spindle/spindles.hpp>
#include <spindle/suitable.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace spindle;
using nlohmann::json;

namespace {

constexpr int exit_invalid = 1;
constexpr int exit_usage = 2;

struct Globals {
    bool json_out = false;
    int threads = 1;
    std::uint64_t seed = 0;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json witness_json(const SubdivisionWitness &w)
{
    json fwd = json::array(), bwd = json::array();
    for (const auto &p : w.forward)
        fwd.push_back(p.vertices);
    for (const auto &p : w.backward)
        bwd.push_back(p.vertices);
    return {{"x", w.x}, {"y", w.y}, {"forward", fwd}, {"backward", bwd}};
}

std::string path_text(const DiPath &p)
{
    std::string s;
    for (std::size_t i = 0; i < p.vertices.size(); ++i)
        s += (i ? " " : "") + std::to_string(p.vertices[i]);
    return s;
}

Digraph load(const std::string &path)
{
    try {
        return read_edge_list_file(path);
    } catch (const PreconditionError &e) {
        throw UsageError(e.what());
    }
}

void emit(std::ostream &out, const std::string &text, const std::string &file)
{
    if (file.empty() || file == "-") {
        out << text;
        return;
    }
    std::ofstream f(file);
    if (!f)
        throw UsageError("cannot write " + file);
    f << text;
}

// ---------------------------------------------------------------------------

struct GenArgs {
    std::string family;
    int n = 5, k = 3, b = 4;
    double p = 0.3;
    std::string format = "edgelist";
    std::string output;
};

int run_gen(const GenArgs &a, const Globals &g)
{
    Digraph d;
    std::vector<std::string> header{"family " + a.family};
    if (a.family == "odd-cycle") {
        d = odd_dicycle(a.n);
        header.push_back("n " + std::to_string(a.n));
    } else if (a.family == "rotative") {
        d = rotative_tournament(a.k);
        header.push_back("k " + std::to_string(a.k));
    } else if (a.family == "complete") {
        d = bidirected_complete(a.n);
        header.push_back("n " + std::to_string(a.n));
    } else if (a.family == "transitive") {
        d = transitive_tournament(a.n);
        header.push_back("n " + std::to_string(a.n));
    } else if (a.family == "random-strong") {
        d = random_strong_digraph(a.n, a.p, g.seed);
        std::ostringstream s;
        s << "n " << a.n << " p " << a.p << " seed " << g.seed;
        header.push_back(s.str());
    } else if (a.family == "random-tournament") {
        d = random_strong_tournament(a.n, g.seed);
        header.push_back("n " + std::to_string(a.n) + " seed " + std::to_string(g.seed));
    } else if (a.family == "dkb" || a.family == "theorem3") {
        int b = a.family == "dkb" ? a.b : 4;
        auto base = search_dkb(a.k, b, a.n, g.seed);
        if (!base)
            throw UsageError("no D_{k,b} found for k=" + std::to_string(a.k) + " b=" + std::to_string(b) +
                             " n=" + std::to_string(a.n) + " seed=" + std::to_string(g.seed));
        header.push_back("k " + std::to_string(a.k) + " b " + std::to_string(b) + " n " + std::to_string(a.n) +
                         " seed " + std::to_string(g.seed));
        if (a.family == "dkb") {
            d = *base;
        } else {
            auto inst = theorem3_construct(*base, a.k);
            d = inst.digraph;
            header.push_back("hub arc " + std::to_string(inst.x_last) + " " + std::to_string(inst.z));
        }
    } else {
        throw UsageError("unknown family \"" + a.family +
                         "\" (odd-cycle, rotative, complete, transitive, random-strong, random-tournament, dkb, "
                         "theorem3)");
    }
    std::ostringstream out;
    if (a.format == "dot")
        write_dot(out, d);
    else if (a.format == "edgelist")
        write_edge_list(out, d, header);
    else
        throw UsageError("unknown format \"" + a.format + "\" (edgelist, dot)");
    emit(std::cout, out.str(), a.output);
    return 0;
}

int run_chi(const std::string &file, int limit, const Globals &g)
{
    auto d = load(file);
    ChromaticResult r;
    try {
        r = exact_chromatic(d, limit);
    } catch (const TooLargeError &e) {
        throw UsageError(e.what());
    }
    if (g.json_out)
        std::cout << json{{"chi", r.chromatic_number}, {"colors", r.coloring.colors}}.dump() << '\n';
    else
        std::cout << "chi " << r.chromatic_number << '\n';
    return 0;
}

int run_detect(const std::string &file, const std::string &pattern, bool exhaustive, long long budget,
               const Globals &g)
{
    auto d = load(file);
    BispindlePattern pat;
    try {
        pat = BispindlePattern::parse(pattern);
    } catch (const PreconditionError &e) {
        throw UsageError(e.what());
    }
    SearchOptions opt;
    opt.threads = g.threads;
    opt.node_budget = exhaustive ? 0 : budget;
    auto r = find_subdivision(d, pat, opt);
    if (g.json_out) {
        json j{{"pattern", pat.to_string()}, {"status", to_string(r.status)}};
        if (r.witness)
            j["witness"] = witness_json(*r.witness);
        std::cout << j.dump() << '\n';
    } else {
        std::cout << to_string(r.status) << '\n';
        if (r.witness) {
            std::cout << "x " << r.witness->x << " y " << r.witness->y << '\n';
            for (const auto &p : r.witness->forward)
                std::cout << "forward " << path_text(p) << '\n';
            for (const auto &p : r.witness->backward)
                std::cout << "backward " << path_text(p) << '\n';
        }
    }
    return 0;
}

int run_certify(const std::string &file, const std::string &theorem, int k, const std::string &output,
                const Globals &g)
{
    auto d = load(file);
    Theorem t;
    try {
        t = parse_theorem(theorem);
    } catch (const PreconditionError &e) {
        throw UsageError(e.what());
    }
    if (t == Theorem::p211)
        k = 2;
    if (k < theorem_min_k(t))
        throw UsageError("--k must be at least " + std::to_string(theorem_min_k(t)) + " for " + theorem);
    if (!is_strong(d) || d.order() < 2)
        throw UsageError("digraph must be strong with at least two vertices");
    SearchOptions search;
    search.threads = g.threads;

    std::variant<Coloring, SubdivisionWitness> result;
    std::string note;
    switch (t) {
    case Theorem::p211: {
        ChromaticResult chi;
        try {
            chi = exact_chromatic(d);
        } catch (const TooLargeError &e) {
            throw UsageError(e.what());
        }
        if (chi.chromatic_number < 4) {
            note = "chi = " + std::to_string(chi.chromatic_number) + " < 4";
            result = chi.coloring;
        } else {
            result = extract_b211(d);
        }
        break;
    }
    case Theorem::bk11:
        result = certify_b_k11(d, k, search);
        break;
    case Theorem::bk1k: {
        SuitableOptions opt;
        opt.search = search;
        result = certify_b_k1k(d, k, opt);
        break;
    }
    }
    auto cert = make_certificate(t, k, result);
    emit(std::cout, certificate_to_json(cert), output);
    const char *kind = std::holds_alternative<Coloring>(result) ? "coloring" : "witness";
    if (g.json_out) {
        json j{{"kind", kind}, {"theorem", theorem}, {"parameter", k}};
        if (!note.empty())
            j["note"] = note;
        std::cout << j.dump() << '\n';
    } else if (!output.empty() && output != "-") {
        std::cout << kind << (note.empty() ? "" : " (" + note + ")") << '\n';
    }
    return 0;
}

int run_verify(const std::string &file, const std::string &cert_file, const Globals &g)
{
    auto d = load(file);
    std::ifstream f(cert_file);
    if (!f)
        throw UsageError("cannot open " + cert_file);
    std::stringstream buf;
    buf << f.rdbuf();
    Verdict v;
    try {
        v = verify_certificate(d, parse_certificate(buf.str()));
    } catch (const PreconditionError &e) {
        v.reasons.push_back(e.what());
    }
    if (g.json_out)
        std::cout << json{{"valid", v.valid}, {"reasons", v.reasons}}.dump() << '\n';
    else {
        std::cout << (v.valid ? "valid" : "invalid") << '\n';
        for (const auto &r : v.reasons)
            std::cerr << "  " << r << '\n';
    }
    return v.valid ? 0 : exit_invalid;
}

int fail(const Globals &g, int code, const std::string &msg)
{
    if (g.json_out)
        std::cout << json{{"error", msg}, {"exit", code}}.dump() << '\n';
    else
        std::cerr << "error: " << msg << '\n';
    return code;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Certifying tools for spindle and bispindle subdivisions in digraphs"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json_out, "machine-readable output");
    app.add_option("--threads", g.threads, "worker threads for subdivision search")->check(CLI::Range(1, 256));
    app.add_option("--seed", g.seed, "seed for random families");
    app.fallthrough();

    GenArgs gen;
    auto *gen_cmd = app.add_subcommand("gen", "generate a digraph family");
    gen_cmd->add_option("family", gen.family, "odd-cycle, rotative, complete, transitive, random-strong, "
                                              "random-tournament, dkb, theorem3")
        ->required();
    gen_cmd->add_option("--n", gen.n, "order");
    gen_cmd->add_option("--k", gen.k, "parameter k");
    gen_cmd->add_option("--b", gen.b, "blocks parameter of D_{k,b}");
    gen_cmd->add_option("--p", gen.p, "arc probability")->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--format", gen.format, "edgelist or dot");
    gen_cmd->add_option("-o,--output", gen.output, "output file (stdout when omitted)");

    std::string file, cert_file, pattern, theorem, output;
    int k = 3, limit = default_exact_limit;
    bool exhaustive = false;
    long long budget = SearchOptions{}.node_budget;

    auto *chi_cmd = app.add_subcommand("chi", "exact chromatic number");
    chi_cmd->add_option("file", file, "edge list")->required();
    chi_cmd->add_option("--limit", limit, "largest order accepted");

    auto *detect_cmd = app.add_subcommand("detect", "search for a subdivision");
    detect_cmd->add_option("file", file, "edge list")->required();
    detect_cmd->add_option("--pattern", pattern, "k1,k2:k3 or B(k1,k2;k3)")->required();
    detect_cmd->add_flag("--exhaustive", exhaustive, "no search budget");
    detect_cmd->add_option("--budget", budget, "search nodes per hub pair");

    auto *certify_cmd = app.add_subcommand("certify", "run a certifier and write its certificate");
    certify_cmd->add_option("file", file, "edge list")->required();
    certify_cmd->add_option("--theorem", theorem, "p211, bk11 or bk1k")->required();
    certify_cmd->add_option("--k", k, "parameter k");
    certify_cmd->add_option("-o,--output", output, "certificate file (stdout when omitted)");

    auto *verify_cmd = app.add_subcommand("verify", "check a certificate");
    verify_cmd->add_option("file", file, "edge list")->required();
    verify_cmd->add_option("certificate", cert_file, "certificate JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*gen_cmd)
            return run_gen(gen, g);
        if (*chi_cmd)
            return run_chi(file, limit, g);
        if (*detect_cmd)
            return run_detect(file, pattern, exhaustive, budget, g);
        if (*certify_cmd)
            return run_certify(file, theorem, k, output, g);
        if (*verify_cmd)
            return run_verify(file, cert_file, g);
    } catch (const UsageError &e) {
        return fail(g, exit_usage, e.what());
    } catch (const PreconditionError &e) {
        return fail(g, exit_usage, e.what());
    } catch (const std::exception &e) {
        return fail(g, 3, e.what());
    }
    return exit_usage;
}
