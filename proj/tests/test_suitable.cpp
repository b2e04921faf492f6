#include <doctest.h>
#include <gadgets.hpp>
#include <support.hpp>

#include <spindle/bounds.hpp>
#include <spindle/generators.hpp>
#include <spindle/suitable.hpp>

using namespace spindle;
using namespace gadgets;

namespace {
// two 8-cycles sharing vertex 0
SuitableGadget two_octagons()
{
    DiCycle a = ring(0, 8);
    DiCycle b{{0, 8, 9, 10, 11, 12, 13, 14}};
    return {from_cycles(15, {a, b}), SuitableCollection{1, {a, b}}};
}

bool verified(const Digraph &d, int k, const SubdivisionWitness &w)
{
    return verify_witness(d, BispindlePattern::b(k, 1, k), w);
}

Coloring uncoloured_partial(int n) { return Coloring{std::vector<Color>(static_cast<std::size_t>(n), uncoloured), 0}; }

unsigned __int128 pow128(unsigned __int128 b, int e)
{
    unsigned __int128 r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

BigInt to_big(unsigned __int128 v)
{
    BigInt r = static_cast<std::uint64_t>(v >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(v);
    return r;
}
} // namespace

TEST_CASE("bounds")
{
    auto b1 = compute_bounds(1);
    CHECK(b1.alpha == 446);
    CHECK(b1.beta == 1372788);
    CHECK(b1.gamma == 10982304);
    CHECK(b1.gamma == 8 * b1.beta);
    CHECK(plus_path_threshold(1) == 216);
    CHECK(plus_path_threshold(2) == 191102976);
    CHECK(level_path_threshold(1) == 256);
    for (int k = 1; k <= 3; ++k) {
        using U = unsigned __int128;
        U kk = static_cast<U>(k);
        U plus = pow128(6 * kk * kk, 3 * k), level = pow128(4 * kk, 4 * k);
        U alpha = 2 * plus + 14 * kk;
        U beta = kk * (4 * kk * kk + 2) * (2 * level + 1) * alpha;
        auto b = compute_bounds(k);
        CHECK(b.alpha == to_big(alpha));
        CHECK(b.beta == to_big(beta));
        CHECK(b.gamma == to_big(8 * kk * beta));
    }
    CHECK(saturate(compute_bounds(5).gamma) == std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(compute_bounds(0), PreconditionError);
}

TEST_CASE("common subpath and suitability")
{
    auto g = two_octagons();
    CHECK(validate_suitable(g.d, g.c));
    auto p = common_subpath(g.c.cycles[0], g.c.cycles[1]);
    REQUIRE(p);
    CHECK(p->vertices == std::vector<Vertex>{0});

    // sharing 0 and 4, not a subpath
    DiCycle a = ring(0, 8), b{{0, 8, 9, 10, 4, 11, 12, 13}};
    auto d = from_cycles(14, {a, b});
    CHECK_FALSE(common_subpath(a, b).has_value());
    CHECK_FALSE(validate_suitable(d, SuitableCollection{1, {a, b}}));

    // sharing the arc 0->1: fine for k = 2 lengths aside, too long for k = 1
    DiCycle e{{0, 1, 20, 21, 22, 23, 24, 25}};
    auto pe = common_subpath(a, e);
    REQUIRE(pe);
    CHECK(pe->vertices == std::vector<Vertex>{0, 1});
    CHECK_FALSE(validate_suitable(from_cycles(26, {a, e}), SuitableCollection{1, {a, e}}));

    // opposite directions
    DiCycle f{{1, 0, 30, 31, 32, 33, 34, 35}};
    CHECK_FALSE(common_subpath(a, f).has_value());

    CHECK(common_subpath(a, ring(40, 8))->vertices.empty());
    CHECK_FALSE(validate_suitable(from_cycles(7, {ring(0, 7)}), SuitableCollection{1, {ring(0, 7)}}));
}

TEST_CASE("interface of a member")
{
    auto g = two_octagons();
    auto r = build_interface(g.d, g.c, 0);
    REQUIRE(std::holds_alternative<Interface>(r));
    const auto &in = std::get<Interface>(r);
    REQUIRE(in.parts.size() == 1);
    CHECK(in.parts[0].q.length() == 6);
    CHECK(in.parts[0].q_plus == std::vector<Vertex>{8, 9, 10});
    CHECK(in.parts[0].q_minus == std::vector<Vertex>{12, 13, 14});
    CHECK(in.plus == std::vector<Vertex>{8, 9, 10});
    CHECK_FALSE(check_acyclic_interface(g.d, g.c, in).has_value());
}

TEST_CASE("dis classification")
{
    auto g = interface_chain();
    auto r = dis_classify(g.d, g.c, 0, 1, 2, 9);
    REQUIRE(std::holds_alternative<DisCase>(r));
    CHECK(std::get<DisCase>(r) == DisCase::after_terminal);
    CHECK_THROWS_AS(dis_classify(g.d, g.c, 0, 1, 2, 0), PreconditionError);

    auto f = far_meeting();
    CHECK(validate_suitable(f.d, f.c));
    std::vector<std::string> trace;
    SuitableOptions opt;
    opt.trace = &trace;
    auto w = dis_classify(f.d, f.c, 0, 1, 2, 20, opt);
    REQUIRE(std::holds_alternative<SubdivisionWitness>(w));
    CHECK(verified(f.d, 1, std::get<SubdivisionWitness>(w)));
    CHECK(traced(trace, "dis"));
    MESSAGE(trace.front());
}

TEST_CASE("no-dicycle extraction")
{
    auto g = interface_triangle();
    REQUIRE(validate_suitable(g.d, g.c));
    std::vector<std::string> trace;
    SuitableOptions opt;
    opt.trace = &trace;
    auto r = build_interface(g.d, g.c, 0, opt);
    REQUIRE(std::holds_alternative<Interface>(r));
    auto w = check_acyclic_interface(g.d, g.c, std::get<Interface>(r), opt);
    REQUIRE(w);
    CHECK(verified(g.d, 1, *w));
    CHECK(traced(trace, "no-dicycle"));
    MESSAGE(trace.front());

    trace.clear();
    auto u = color_union(g.d, g.c, opt);
    REQUIRE(std::holds_alternative<SubdivisionWitness>(u));
    CHECK(verified(g.d, 1, std::get<SubdivisionWitness>(u)));
}

TEST_CASE("long I+ dipath extraction")
{
    auto g = interface_chain();
    REQUIRE(validate_suitable(g.d, g.c));
    std::vector<std::string> trace;
    SuitableOptions opt;
    opt.trace = &trace;
    // default thresholds: a colouring
    auto plain = rainbow_extend(g.d, g.c, 0, uncoloured_partial(g.d.order()));
    REQUIRE(std::holds_alternative<Coloring>(plain));

    opt.plus_path_limit = 3;
    auto r = rainbow_extend(g.d, g.c, 0, uncoloured_partial(g.d.order()), opt);
    REQUIRE(std::holds_alternative<SubdivisionWitness>(r));
    CHECK(verified(g.d, 1, std::get<SubdivisionWitness>(r)));
    CHECK(traced(trace, "c+"));
    MESSAGE(trace.front());
}

TEST_CASE("rainbow extension")
{
    auto g = two_octagons();
    auto r = rainbow_extend(g.d, g.c, 0, uncoloured_partial(15));
    REQUIRE(std::holds_alternative<Coloring>(r));
    const auto &col = std::get<Coloring>(r);
    CHECK(windows_rainbow(SuitableCollection{1, {g.c.cycles[0]}}, col));
    CHECK(is_rainbow(col, g.c.cycles[1].vertices));
    CHECK(colors_used(col) <= 446);

    // 7k+1 precoloured vertices along a longer centre
    DiCycle big = ring(0, 12), other{{0, 12, 13, 14, 15, 16, 17, 18}};
    auto d = from_cycles(19, {big, other});
    SuitableCollection c{1, {big, other}};
    auto partial = uncoloured_partial(19);
    for (int v = 2; v <= 9; ++v)
        partial.colors[static_cast<std::size_t>(v)] = 100 + v;
    auto ext = rainbow_extend(d, c, 0, partial);
    REQUIRE(std::holds_alternative<Coloring>(ext));
    for (int v = 2; v <= 9; ++v)
        CHECK(std::get<Coloring>(ext).colors[static_cast<std::size_t>(v)] == 100 + v);
    CHECK(windows_rainbow(SuitableCollection{1, {big}}, std::get<Coloring>(ext)));
    CHECK(is_rainbow(std::get<Coloring>(ext), std::vector<Vertex>{16, 17, 18, 0, 12, 13, 14}));

    partial.colors[9] = 102;
    CHECK_THROWS_AS(rainbow_extend(d, c, 0, partial), PreconditionError);
    partial.colors[9] = 109;
    partial.colors[10] = 110; // nine vertices: too spread
    CHECK_THROWS_AS(rainbow_extend(d, c, 0, partial), PreconditionError);
}

TEST_CASE("colour union")
{
    // chain of three 8-cycles
    DiCycle a = ring(0, 8), b{{4, 8, 9, 10, 11, 12, 13, 14}}, c{{11, 15, 16, 17, 18, 19, 20, 21}};
    auto d = from_cycles(22, {a, b, c});
    SuitableCollection col{1, {a, b, c}};
    REQUIRE(validate_suitable(d, col));
    auto r = color_union(d, col);
    REQUIRE(std::holds_alternative<Coloring>(r));
    CHECK(windows_rainbow(col, std::get<Coloring>(r)));

    auto g = interface_chain();
    auto u = color_union(g.d, g.c);
    REQUIRE(std::holds_alternative<Coloring>(u));
    CHECK(windows_rainbow(g.c, std::get<Coloring>(u)));
}

TEST_CASE("level decomposition")
{
    DiCycle a = ring(0, 8);
    auto d1 = from_cycles(8, {a});
    auto one = level_decompose(d1, SuitableCollection{1, {a}}, {0}, 0);
    REQUIRE(std::holds_alternative<LevelDecomposition>(one));
    const auto &l1 = std::get<LevelDecomposition>(one);
    for (Vertex v = 0; v < 8; ++v)
        CHECK(l1.in_plus(v));

    auto g = two_octagons();
    auto two = level_decompose(g.d, g.c, {0, 1}, 0);
    REQUIRE(std::holds_alternative<LevelDecomposition>(two));
    const auto &l2 = std::get<LevelDecomposition>(two);
    CHECK(l2.father[1] == 0);
    CHECK(l2.cycle_level[1] == 1);
    CHECK(l2.vertex_level[0] == 0);
    CHECK(l2.vertex_level[8] == 1);
    CHECK(l2.in_plus(8));
    CHECK(l2.in_plus(9));
    CHECK(l2.in_prime(10));
    CHECK(l2.in_prime(12));
    CHECK(l2.in_minus(13));
    CHECK(l2.in_minus(14));
    CHECK(arc_class(l2, 1, 0, 8) == 2);
    CHECK(arc_class(l2, 1, 8, 9) == 0);
    auto rl = reversed(l2);
    CHECK(rl.in_minus(8));
    CHECK(rl.in_plus(14));
    CHECK(rl.in_plus(0));

    CHECK_THROWS_AS(level_decompose(g.d, g.c, {0, 1}, 2), PreconditionError);
}

TEST_CASE("Rpos extraction")
{
    auto f = far_meeting();
    std::vector<std::string> trace;
    SuitableOptions opt;
    opt.trace = &trace;
    auto r = level_decompose(f.d, f.c, {0, 1, 2}, 0, opt);
    REQUIRE(std::holds_alternative<SubdivisionWitness>(r));
    CHECK(verified(f.d, 1, std::get<SubdivisionWitness>(r)));
    CHECK(traced(trace, "Rpos"));
    MESSAGE(trace.front());
}

TEST_CASE("component colouring")
{
    auto g = two_octagons();
    auto r = color_component_suitable(g.d, g.c, {0, 1});
    REQUIRE(std::holds_alternative<Coloring>(r));
    const auto &col = std::get<Coloring>(r);
    CHECK(col.colors.size() == 15);
    CHECK(is_proper(g.d, col));
    CHECK(BigInt(col.bound) <= compute_bounds(1).beta);

    // the chain holds a B(1,1;1)
    auto chain = interface_chain();
    auto rc = color_component_suitable(chain.d, chain.c, {0, 1, 2, 3});
    REQUIRE(std::holds_alternative<SubdivisionWitness>(rc));
    CHECK(verified(chain.d, 1, std::get<SubdivisionWitness>(rc)));

    // three 8-cycles in a chain, no chords
    DiCycle a = ring(0, 8), b{{4, 8, 9, 10, 11, 12, 13, 14}}, c{{11, 15, 16, 17, 18, 19, 20, 21}};
    auto d = from_cycles(22, {a, b, c});
    auto r3 = color_component_suitable(d, SuitableCollection{1, {a, b, c}}, {0, 1, 2});
    REQUIRE(std::holds_alternative<Coloring>(r3));
    CHECK(is_proper(d, std::get<Coloring>(r3)));
}

TEST_CASE("D2 overflow extraction")
{
    auto g = far_overflow();
    REQUIRE(validate_suitable(g.d, g.c));
    std::vector<std::string> trace;
    SuitableOptions opt;
    opt.trace = &trace;
    auto r = color_component_suitable(g.d, g.c, {0, 1}, opt);
    REQUIRE(std::holds_alternative<SubdivisionWitness>(r));
    CHECK(verified(g.d, 1, std::get<SubdivisionWitness>(r)));
    CHECK(traced(trace, "D2"));
    MESSAGE(trace.front());
}

TEST_CASE("X' extraction")
{
    auto g = prime_arcs();
    REQUIRE(validate_suitable(g.d, g.c));
    std::vector<std::string> trace;
    SuitableOptions opt;
    opt.trace = &trace;
    auto r = color_component_suitable(g.d, g.c, {0, 1, 2}, opt);
    REQUIRE(std::holds_alternative<SubdivisionWitness>(r));
    CHECK(verified(g.d, 1, std::get<SubdivisionWitness>(r)));
    CHECK(traced(trace, "X'"));
    for (auto &t : trace)
        MESSAGE(t);
}

TEST_CASE("D0 extraction")
{
    auto g = root_chords();
    std::vector<std::string> trace;
    SuitableOptions opt;
    opt.trace = &trace;
    auto plain = color_component_suitable(g.d, g.c, {0}, opt);
    REQUIRE(std::holds_alternative<Coloring>(plain));
    CHECK(is_proper(g.d, std::get<Coloring>(plain)));

    opt.level_path_limit = 1;
    auto r = color_component_suitable(g.d, g.c, {0}, opt);
    REQUIRE(std::holds_alternative<SubdivisionWitness>(r));
    CHECK(verified(g.d, 1, std::get<SubdivisionWitness>(r)));
    CHECK(traced(trace, "D0"));
    for (auto &t : trace)
        MESSAGE(t);
}

TEST_CASE("expansion of a quotient cycle")
{
    auto g = overlapping_expansion();
    std::vector<std::vector<Vertex>> parts{g.c.cycles[0].vertices};
    auto con = contract(g.d, parts);
    DiCycle q;
    for (Vertex v : {0, 8, 9, 10, 11, 12, 13, 14})
        q.vertices.push_back(con.image[static_cast<std::size_t>(v)]);
    std::vector<std::string> trace;
    SuitableOptions opt;
    opt.trace = &trace;
    auto r = extend_suitable(g.d, g.c, con, q, opt);
    REQUIRE(std::holds_alternative<SubdivisionWitness>(r));
    CHECK(verified(g.d, 1, std::get<SubdivisionWitness>(r)));
    CHECK(traced(trace, "cl:nocycle"));
    MESSAGE(trace.front());

    // an expansion touching the member once is accepted
    auto d = from_cycles(15, {ring(0, 8)}, {{0, 8}, {8, 9}, {9, 10}, {10, 11}, {11, 12}, {12, 13}, {13, 14}, {14, 0}});
    auto con2 = contract(d, parts);
    auto ok = extend_suitable(d, g.c, con2, q);
    REQUIRE(std::holds_alternative<DiCycle>(ok));
    CHECK(std::get<DiCycle>(ok).length() == 8);

    DiCycle short_q{{q.vertices[0], q.vertices[1]}};
    CHECK_THROWS_AS(extend_suitable(g.d, g.c, con, short_q), PreconditionError);
}

TEST_CASE("B(k,1;k) certifier")
{
    auto c9 = odd_dicycle(9);
    auto r = certify_b_k1k(c9, 1);
    REQUIRE(std::holds_alternative<Coloring>(r));
    CHECK(is_proper(c9, std::get<Coloring>(r)));

    // no cycle of length 8: the quotient colouring alone
    auto k6 = spindle::bidirected_complete(6);
    auto c6 = certify_b_k1k(k6, 1);
    REQUIRE(std::holds_alternative<Coloring>(c6));
    CHECK(is_proper(k6, std::get<Coloring>(c6)));
    CHECK(std::get<Coloring>(c6).bound <= 7);

    // a Hamiltonian cycle joins the collection; either certificate is sound
    auto k10 = spindle::bidirected_complete(10);
    auto w = certify_b_k1k(k10, 1);
    if (auto *col = std::get_if<Coloring>(&w))
        CHECK(is_proper(k10, *col));
    else
        CHECK(verified(k10, 1, std::get<SubdivisionWitness>(w)));

    CHECK_THROWS_AS(certify_b_k1k(spindle::transitive_tournament(4), 1), PreconditionError);
    CHECK_THROWS_AS(certify_b_k1k(c9, 0), PreconditionError);

    const auto gamma = [](int k) { return compute_bounds(k).gamma; };
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        int k = 1 + static_cast<int>(seed % 2);
        int n = 4 + static_cast<int>(seed % 9);
        auto d = random_strong_digraph(n, seed % 3 == 0 ? 0.1 : 0.3, seed);
        auto cert = certify_b_k1k(d, k);
        if (auto *col = std::get_if<Coloring>(&cert)) {
            CHECK(is_proper(d, *col));
            CHECK(BigInt(col->bound) <= gamma(k));
        } else {
            CHECK(verified(d, k, std::get<SubdivisionWitness>(cert)));
        }
    }
}

TEST_CASE("B(k,1;k) certifier grows long cycles")
{
    // a 20-cycle with a few back arcs: the collection must take the cycle
    Digraph d = from_cycles(20, {ring(0, 20)}, {{10, 0}});
    auto r = certify_b_k1k(d, 1);
    if (auto *w = std::get_if<SubdivisionWitness>(&r))
        CHECK(verified(d, 1, *w));
    else
        CHECK(is_proper(d, std::get<Coloring>(r)));

    auto c17 = odd_dicycle(17);
    auto r2 = certify_b_k1k(c17, 2);
    REQUIRE(std::holds_alternative<Coloring>(r2));
    CHECK(is_proper(c17, std::get<Coloring>(r2)));
}
