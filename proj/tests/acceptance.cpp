// Acceptance run: one PASS/FAIL line per criterion, with timing.

#include <gadgets.hpp>
#include <support.hpp>
#include <tamper.hpp>

#include <spindle/bounds.hpp>
#include <spindle/coloring.hpp>
#include <spindle/extremal.hpp>
#include <spindle/generators.hpp>
#include <spindle/io.hpp>
#include <spindle/nice.hpp>
#include <spindle/spindles.hpp>
#include <spindle/suitable.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace spindle;
using namespace testing_support;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    std::vector<std::string> notes;

    void require(bool cond, const std::string &what)
    {
        if (!cond) {
            if (ok)
                detail = what;
            ok = false;
        }
    }
};

int failures = 0;

void criterion(int id, const std::string &name, double limit_s, const std::function<Outcome()> &body)
{
    auto t0 = std::chrono::steady_clock::now();
    Outcome r;
    try {
        r = body();
    } catch (const std::exception &e) {
        r.ok = false;
        r.detail = std::string("exception: ") + e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && s >= limit_s) {
        r.detail = (r.detail.empty() ? "" : r.detail + "; ") + "over the time limit";
        r.ok = false;
    }
    char head[160];
    std::snprintf(head, sizeof head, "%s criterion %2d  %-40s %8.2fs", r.ok ? "PASS" : "FAIL", id, name.c_str(), s);
    std::cout << head;
    if (!r.detail.empty())
        std::cout << "  " << r.detail;
    std::cout << '\n';
    for (const auto &n : r.notes)
        std::cout << "      " << n << '\n';
    std::cout.flush();
    failures += !r.ok;
}

// ---------------------------------------------------------------------------

Outcome b211_reproduction()
{
    Outcome o;
    const auto pat = BispindlePattern::b(2, 1, 1);
    auto check = [&](const Digraph &d, const std::string &name) {
        auto w = extract_b211(d);
        o.require(verify_witness(d, pat, w), name + ": witness rejected");
    };
    check(spindle::bidirected_complete(4), "K4");
    check(spindle::bidirected_complete(5), "K5");
    int kept = 0, tried = 0;
    for (std::uint64_t seed = 0; kept < 300; ++seed) {
        int n = 4 + static_cast<int>(seed % 4);
        auto d = random_strong_digraph(n, 0.55 + 0.05 * static_cast<double>(seed % 6), seed);
        ++tried;
        if (brute_chromatic(d) < 4)
            continue;
        ++kept;
        check(d, "seed " + std::to_string(seed));
    }
    o.notes.push_back(std::to_string(kept) + " random digraphs with chi >= 4 out of " + std::to_string(tried));
    return o;
}

Outcome odd_cycle_tightness()
{
    Outcome o;
    SearchOptions full;
    full.node_budget = 0;
    for (int n : {3, 5, 7, 9}) {
        auto d = odd_dicycle(n);
        o.require(exact_chromatic(d).chromatic_number == 3, "chi of C" + std::to_string(n));
        o.require(find_subdivision(d, BispindlePattern::b(2, 1, 1), full).status == Detection::absent,
                  "B(2,1;1) in C" + std::to_string(n));
    }
    return o;
}

Outcome tournaments()
{
    Outcome o;
    int strong5 = 0;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            pairs.emplace_back(i, j);
    for (int mask = 0; mask < (1 << 10); ++mask) {
        Digraph t(5);
        for (int b = 0; b < 10; ++b) {
            auto [i, j] = pairs[static_cast<std::size_t>(b)];
            if ((mask >> b) & 1)
                t.add_arc(i, j);
            else
                t.add_arc(j, i);
        }
        if (!strong_by_closure(t))
            continue;
        ++strong5;
        o.require(verify_witness(t, BispindlePattern::b(3, 1, 1), tournament_b_k11(t, 3)),
                  "order 5, mask " + std::to_string(mask));
    }
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto t = random_strong_tournament(7, seed);
        o.require(verify_witness(t, BispindlePattern::b(4, 1, 1), tournament_b_k11(t, 4)),
                  "order 7, seed " + std::to_string(seed));
    }
    o.notes.push_back(std::to_string(strong5) + " strong labelled tournaments on 5 vertices, 200 on 7");
    return o;
}

Outcome sequence_lemmas()
{
    Outcome o;
    long long checked = 0;
    for (int k = 1; k <= 3; ++k)
        for (int p = 1; p <= 9; ++p) {
            std::vector<int> seq(static_cast<std::size_t>(p), 1);
            while (true) {
                for (int l = 1; l <= 3; ++l) {
                    long long need = 1;
                    for (int i = 0; i < k; ++i)
                        need *= l;
                    if (p >= need) {
                        ++checked;
                        o.require(min_witness_ok(seq, lemma_min(seq, l, k), l), "lemma_min");
                    }
                }
                for (int m = 1; m <= 4; ++m)
                    if (p > k * (m - 1)) {
                        ++checked;
                        o.require(max_witness_ok(seq, lemma_max(seq, m, k), m), "lemma_max");
                    }
                int i = 0;
                while (i < p && ++seq[static_cast<std::size_t>(i)] > k)
                    seq[static_cast<std::size_t>(i++)] = 1;
                if (i == p)
                    break;
            }
        }
    o.notes.push_back(std::to_string(checked) + " witnesses checked");
    return o;
}

Outcome certifier_k11()
{
    Outcome o;
    int colorings = 0, witnesses = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        int n = 3 + static_cast<int>(seed % 12);
        auto d = random_strong_digraph(n, 0.15 + 0.1 * static_cast<double>(seed % 5), seed);
        auto r = certify_b_k11(d, 3);
        if (auto *c = std::get_if<Coloring>(&r)) {
            ++colorings;
            o.require(is_proper(d, *c) && c->bound <= 12, "seed " + std::to_string(seed) + ": colouring");
        } else {
            ++witnesses;
            o.require(verify_witness(d, BispindlePattern::b(3, 1, 1), std::get<SubdivisionWitness>(r)),
                      "seed " + std::to_string(seed) + ": witness");
        }
    }
    o.notes.push_back(std::to_string(colorings) + " colourings, " + std::to_string(witnesses) + " witnesses");
    return o;
}

Outcome certifier_k1k()
{
    Outcome o;
    auto b = compute_bounds(1);
    o.require(b.gamma == 8 * b.beta, "gamma_1 != 8 beta_1");
    o.require(b.gamma == BigInt(10982304), "gamma_1 value");
    int colorings = 0, witnesses = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        int n = 3 + static_cast<int>(seed % 10);
        auto d = random_strong_digraph(n, 0.15 + 0.1 * static_cast<double>(seed % 5), seed);
        auto r = certify_b_k1k(d, 1);
        if (auto *c = std::get_if<Coloring>(&r)) {
            ++colorings;
            o.require(is_proper(d, *c) && BigInt(c->bound) <= b.gamma, "seed " + std::to_string(seed) + ": colouring");
        } else {
            ++witnesses;
            o.require(verify_witness(d, BispindlePattern::b(1, 1, 1), std::get<SubdivisionWitness>(r)),
                      "seed " + std::to_string(seed) + ": witness");
        }
    }
    o.notes.push_back(std::to_string(colorings) + " colourings, " + std::to_string(witnesses) + " witnesses");
    return o;
}

Outcome extraction_suite()
{
    using namespace gadgets;
    Outcome o;
    auto report = [&](const std::string &name, const Digraph &d, const BispindlePattern &pat,
                      const std::optional<SubdivisionWitness> &w, const std::vector<std::string> &trace,
                      const std::string &traced_as) {
        bool fired = traced_as.empty() || traced(trace, traced_as);
        bool good = w && verify_witness(d, pat, *w);
        o.require(fired && good, name + (fired ? ": witness rejected" : ": extraction did not fire"));
        std::string how = traced_as.empty() ? "direct" : "";
        for (const auto &t : trace)
            if (t.rfind(traced_as + ":", 0) == 0)
                how = t.substr(traced_as.size() + 1);
        o.notes.push_back((fired && good ? "ok    " : "FAILED ") + name + " (" + pat.to_string() + ", " + how + ")");
    };
    auto as_witness = [](const auto &v) -> std::optional<SubdivisionWitness> {
        if (auto *w = std::get_if<SubdivisionWitness>(&v))
            return *w;
        return std::nullopt;
    };
    const auto b111 = BispindlePattern::b(1, 1, 1);
    std::vector<std::string> trace;
    SuitableOptions opt;
    opt.trace = &trace;

    {
        auto g = far_meeting();
        trace.clear();
        report("dis", g.d, b111, as_witness(dis_classify(g.d, g.c, 0, 1, 2, 20, opt)), trace, "dis");
    }
    {
        auto g = interface_triangle();
        trace.clear();
        auto in = build_interface(g.d, g.c, 0, opt);
        std::optional<SubdivisionWitness> w;
        if (auto *i = std::get_if<Interface>(&in))
            w = check_acyclic_interface(g.d, g.c, *i, opt);
        report("no-dicycle", g.d, b111, w, trace, "no-dicycle");
    }
    {
        auto g = interface_chain();
        trace.clear();
        auto low = opt;
        low.plus_path_limit = 3;
        Coloring partial{std::vector<Color>(static_cast<std::size_t>(g.d.order()), uncoloured), 0};
        report("c+", g.d, b111, as_witness(rainbow_extend(g.d, g.c, 0, partial, low)), trace, "c+");
    }
    {
        auto g = far_meeting();
        trace.clear();
        report("Rpos", g.d, b111, as_witness(level_decompose(g.d, g.c, {0, 1, 2}, 0, opt)), trace, "Rpos");
    }
    {
        auto g = far_overflow();
        trace.clear();
        report("D2 overflow", g.d, b111, as_witness(color_component_suitable(g.d, g.c, {0, 1}, opt)), trace, "D2");
    }
    {
        auto g = prime_arcs();
        trace.clear();
        report("X'", g.d, b111, as_witness(color_component_suitable(g.d, g.c, {0, 1, 2}, opt)), trace, "X'");
    }
    {
        auto g = root_chords();
        trace.clear();
        auto low = opt;
        low.level_path_limit = 1;
        report("D0", g.d, b111, as_witness(color_component_suitable(g.d, g.c, {0}, low)), trace, "D0");
    }
    {
        auto g = overlapping_expansion();
        trace.clear();
        std::vector<std::vector<Vertex>> parts{g.c.cycles[0].vertices};
        auto con = contract(g.d, parts);
        DiCycle q;
        for (Vertex v : {0, 8, 9, 10, 11, 12, 13, 14})
            q.vertices.push_back(con.image[static_cast<std::size_t>(v)]);
        report("cl:nocycle", g.d, b111, as_witness(extend_suitable(g.d, g.c, con, q, opt)), trace, "cl:nocycle");
    }
    {
        // two hexagons through 0 and the arc 3 -> 8 between them
        auto d = make(11, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 10},
                           {10, 0}, {3, 8}});
        std::vector<DiCycle> s{DiCycle{{0, 1, 2, 3, 4, 5}}, DiCycle{{0, 6, 7, 8, 9, 10}}};
        report("headphone", d, BispindlePattern::b(4, 1, 1), headphone_extract(d, s, DiPath{{3, 8}}, 4), {}, "");
    }
    {
        // the quotient cycle expands along 0,1,2 of the member
        auto d = make(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {4, 5}, {5, 6}, {6, 0}});
        auto c = make_nice_collection(3, {DiCycle{{0, 1, 2, 3}}});
        auto con = nice_contraction(d, c);
        DiCycle q;
        for (Vertex v : {0, 4, 5, 6})
            q.vertices.push_back(con.image[static_cast<std::size_t>(v)]);
        report("reduce", d, BispindlePattern::b(3, 1, 1), as_witness(extend_or_extract(d, c, q)), {}, "");
    }
    return o;
}

Outcome theorem3_desk_scale()
{
    Outcome o;
    struct Base {
        std::string name;
        Digraph d;
        int k;
    };
    std::vector<Base> bases{{"single arc, k=1", make(2, {{0, 1}}), 1},
                            {"oriented C5 with 4 blocks, k=2", make(5, {{0, 1}, {1, 2}, {3, 2}, {3, 4}, {0, 4}}), 2}};
    if (auto found = search_dkb(2, 4, 5, 1))
        bases.push_back({"search_dkb(2,4,5,1)", *found, 2});
    else
        o.require(false, "search_dkb(2,4,5,1) found nothing");
    for (const auto &b : bases) {
        auto valid = validate_dkb(b.d, b.k, 4);
        o.require(valid && *valid, b.name + ": not a D_{k,4}");
        auto inst = theorem3_construct(b.d, b.k);
        const auto &d = inst.digraph;
        o.require(is_strong(d), b.name + ": not strong");
        Digraph cut(d.order());
        for (auto a : d.arcs())
            if (!(a.tail == inst.x_last && a.head == inst.z))
                cut.add_arc(a.tail, a.head);
        o.require(!shortest_directed_cycle(cut).has_value(), b.name + ": cycle avoiding (x_l, z)");
        o.require(!detect_3spindle(d).has_value(), b.name + ": 3-spindle");
        o.require(detect_22bispindle(d).status == Detection::absent, b.name + ": (2+2)-bispindle");
        int chi = exact_chromatic(d).chromatic_number;
        o.require(chi > b.k, b.name + ": chi too small");
        o.notes.push_back(b.name + ": n=" + std::to_string(d.order()) + " chi=" + std::to_string(chi));
    }
    return o;
}

Outcome oracle_agreement()
{
    Outcome o;
    SearchOptions full;
    full.node_budget = 0;
    const auto pat = BispindlePattern::b(2, 1, 1);
    int count = 0, found = 0;
    auto compare = [&](const Digraph &d, const std::string &name) {
        auto r = find_subdivision(d, pat, full);
        bool brute = brute_b211(d);
        ++count;
        found += brute;
        o.require(r.status != Detection::unknown && (r.status == Detection::found) == brute, name + ": disagreement");
        if (r.witness)
            o.require(verify_witness(d, pat, *r.witness), name + ": witness rejected");
    };
    for (int n = 1; n <= 5; ++n) {
        int i = 0;
        for (const auto &d : canonical_digraphs(n))
            compare(d, "canonical n=" + std::to_string(n) + " #" + std::to_string(i++));
    }
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 500; ++i)
        compare(random_digraph(6, 0.1 + 0.05 * (i % 10), rng), "random n=6 #" + std::to_string(i));
    o.notes.push_back(std::to_string(count) + " digraphs, " + std::to_string(found) + " contain B(2,1;1)");
    return o;
}

Outcome certificate_round_trips()
{
    Outcome o;
    int round_trips = 0, rejected = 0, tampers = 0;
    for (std::uint64_t seed = 0; round_trips < 100; ++seed) {
        int n = 4 + static_cast<int>(seed % 8);
        auto d = random_strong_digraph(n, 0.3, seed);
        Theorem t = seed % 3 == 0 ? Theorem::p211 : seed % 3 == 1 ? Theorem::bk11 : Theorem::bk1k;
        int k = t == Theorem::p211 ? 2 : t == Theorem::bk11 ? 3 : 1 + static_cast<int>(seed % 2);
        std::variant<Coloring, SubdivisionWitness> result;
        if (t == Theorem::p211) {
            auto chi = exact_chromatic(d);
            if (chi.chromatic_number < 4)
                result = chi.coloring;
            else
                result = extract_b211(d);
        } else if (t == Theorem::bk11) {
            result = certify_b_k11(d, k);
        } else {
            result = certify_b_k1k(d, k);
        }
        auto text = certificate_to_json(make_certificate(t, k, result));
        auto cert = parse_certificate(text);
        auto verdict = verify_certificate(d, cert);
        o.require(verdict.valid, "round trip, seed " + std::to_string(seed));
        ++round_trips;

        auto bad = cert;
        auto what = tamper::apply(d, bad, static_cast<int>(seed % tamper::kinds));
        ++tampers;
        bool caught = !verify_certificate(d, parse_certificate(certificate_to_json(bad))).valid;
        rejected += caught;
        o.require(caught, "tamper of " + what + " accepted, seed " + std::to_string(seed));
    }
    o.notes.push_back(std::to_string(round_trips) + " round trips, " + std::to_string(rejected) + "/" +
                      std::to_string(tampers) + " tampers rejected");
    return o;
}

} // namespace

int main()
{
    criterion(1, "B(2,1;1) from chi >= 4", 60, b211_reproduction);
    criterion(2, "odd dicycles are tight", 10, odd_cycle_tightness);
    criterion(3, "B(k,1;1) in strong tournaments", 120, tournaments);
    criterion(4, "sequence lemmas", 30, sequence_lemmas);
    criterion(5, "B(k,1;1) certifier, k=3", 300, certifier_k11);
    criterion(6, "B(k,1;k) certifier, k=1", 300, certifier_k1k);
    criterion(7, "extraction gadgets", 0, extraction_suite);
    criterion(8, "no 3-spindle, no (2+2)-bispindle", 60, theorem3_desk_scale);
    criterion(9, "B(2,1;1) search vs brute force", 300, oracle_agreement);
    criterion(10, "certificate round trips and tampers", 0, certificate_round_trips);
    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << '\n';
    return failures == 0 ? 0 : 1;
}
