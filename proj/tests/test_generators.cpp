#include <doctest.h>
#include <support.hpp>

#include <spindle/coloring.hpp>
#include <spindle/generators.hpp>

using namespace spindle;
using namespace testing_support;

TEST_CASE("families")
{
    CHECK(odd_dicycle(5) == directed_cycle(5));
    CHECK(exact_chromatic(odd_dicycle(5)).chromatic_number == 3);
    CHECK(odd_dicycle(3).size() == 3);
    CHECK_THROWS_AS(odd_dicycle(4), PreconditionError);

    CHECK(rotative_tournament(2) == directed_cycle(3));
    auto r5 = rotative_tournament(3);
    for (int v = 0; v < 5; ++v)
        CHECK(r5.out_degree(v) == 2);
    for (int k = 2; k <= 7; ++k) {
        auto r = rotative_tournament(k);
        CHECK(is_tournament(r));
        CHECK(strong_by_closure(r));
    }
}

TEST_CASE("random strong digraphs")
{
    CHECK(random_strong_digraph(1, 0.5, 1).order() == 1);
    CHECK(random_strong_digraph(6, 1.0, 3) == testing_support::bidirected_complete(6));
    CHECK(random_strong_digraph(9, 0.2, 42) == random_strong_digraph(9, 0.2, 42));
    for (std::uint64_t seed = 0; seed < 100; ++seed)
        CHECK(strong_by_closure(random_strong_digraph(2 + static_cast<int>(seed % 10), 0.1, seed)));
    auto t = random_strong_tournament(7, 5);
    CHECK(is_tournament(t));
    CHECK(strong_by_closure(t));
}

TEST_CASE("D_{k,b} validation")
{
    CHECK(validate_dkb(testing_support::transitive_tournament(3), 2, 4) == std::optional<bool>(false));
    CHECK(validate_dkb(make(2, {{0, 1}}), 0, 4) == std::optional<bool>(true));
    CHECK(validate_dkb(directed_cycle(4), 1, 4) == std::optional<bool>(false));
    // five-cycle oriented with four blocks
    auto c5 = make(5, {{0, 1}, {1, 2}, {3, 2}, {3, 4}, {0, 4}});
    CHECK(validate_dkb(c5, 2, 4) == std::optional<bool>(true));
    CHECK(validate_dkb(c5, 3, 4) == std::optional<bool>(false));
    auto found = search_dkb(2, 4, 5, 1);
    REQUIRE(found.has_value());
    CHECK(validate_dkb(*found, 2, 4) == std::optional<bool>(true));
}

TEST_CASE("construction without 3-spindles and (2+2)-bispindles")
{
    auto c5 = make(5, {{0, 1}, {1, 2}, {3, 2}, {3, 4}, {0, 4}});
    for (const auto &dk4 : {make(2, {{0, 1}}), c5}) {
        int k = dk4.order() == 2 ? 1 : 2;
        auto inst = theorem3_construct(dk4, k);
        const auto &d = inst.digraph;
        CHECK(strong_by_closure(d));
        CHECK(d.has_arc(inst.x_last, inst.z));
        Digraph cut(d.order());
        for (auto a : d.arcs())
            if (!(a.tail == inst.x_last && a.head == inst.z))
                cut.add_arc(a.tail, a.head);
        CHECK(all_cycle_lengths(cut).empty());
        CHECK_FALSE(detect_3spindle(d).has_value());
        CHECK(detect_22bispindle(d).status == Detection::absent);
        CHECK(exact_chromatic(d).chromatic_number > k);
        SearchOptions full;
        full.node_budget = 0;
        full.use_flow = false;
        CHECK(find_subdivision(d, BispindlePattern::bispindle(2, 2), full).status == Detection::absent);
    }
    CHECK_THROWS_AS(theorem3_construct(directed_cycle(4), 1), PreconditionError);
}

TEST_CASE("spindle detectors")
{
    auto k4 = testing_support::bidirected_complete(4);
    auto w = detect_3spindle(k4);
    REQUIRE(w.has_value());
    CHECK(verify_witness(k4, BispindlePattern::spindle(3), *w));
    CHECK_FALSE(detect_3spindle(directed_cycle(5)).has_value());
    auto b = detect_22bispindle(k4);
    REQUIRE(b.status == Detection::found);
    CHECK(verify_witness(k4, BispindlePattern::bispindle(2, 2), *b.witness));
    CHECK(detect_22bispindle(directed_cycle(5)).status == Detection::absent);

    std::mt19937_64 rng(4);
    for (int iter = 0; iter < 150; ++iter) {
        int n = 2 + static_cast<int>(rng() % 9);
        auto d = random_digraph(n, 0.25, rng);
        SearchOptions plain;
        plain.use_flow = false;
        plain.node_budget = 0;
        auto back = find_subdivision(d, BispindlePattern::spindle(3), plain);
        CHECK(detect_3spindle(d).has_value() == (back.status == Detection::found));
        if (n <= 7) {
            auto fast = detect_22bispindle(d);
            auto slow = find_subdivision(d, BispindlePattern::bispindle(2, 2), plain);
            CHECK(fast.status == slow.status);
        }
    }
}
