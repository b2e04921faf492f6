#include <doctest.h>
#include <support.hpp>

#include <spindle/extremal.hpp>

#include <algorithm>
#include <variant>

using namespace spindle;
using namespace testing_support;

namespace {
/// Longest dipath vertex count by exhaustive DFS.
int longest_dipath_vertices(const Digraph &d)
{
    int best = d.order() > 0 ? 1 : 0;
    std::vector<char> on(d.order(), 0);
    auto dfs = [&](auto &&self, int u, int len) -> void {
        best = std::max(best, len);
        for (int w : d.out(u))
            if (!on[w]) {
                on[w] = 1;
                self(self, w, len + 1);
                on[w] = 0;
            }
    };
    for (int s = 0; s < d.order(); ++s) {
        on[s] = 1;
        dfs(dfs, s, 1);
        on[s] = 0;
    }
    return best;
}
} // namespace

TEST_CASE("Gallai-Roy dipath")
{
    auto tt4 = gallai_roy_dipath(transitive_tournament(4));
    CHECK(tt4.path.vertices.size() == 4);
    CHECK(tt4.coloring.bound == 4);
    CHECK(is_proper(transitive_tournament(4), tt4.coloring));

    auto c5 = directed_cycle(5);
    auto r = gallai_roy_dipath(c5);
    CHECK(r.path.vertices.size() >= 3);
    CHECK(r.path.vertices.size() <= 5);
    CHECK(is_proper(c5, r.coloring));

    auto e = gallai_roy_dipath(Digraph(3));
    CHECK(e.path.vertices.size() == 1);
    CHECK(e.coloring.bound == 1);

    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 300; ++iter) {
        int n = 1 + static_cast<int>(rng() % 10);
        auto d = random_digraph(n, 0.3, rng);
        auto g = gallai_roy_dipath(d);
        REQUIRE(is_dipath(d, g.path));
        CHECK(is_proper(d, g.coloring));
        CHECK(g.coloring.bound == static_cast<Color>(g.path.vertices.size()));
        CHECK(g.coloring.bound >= exact_chromatic(d).chromatic_number);
        CHECK(g.coloring.bound <= longest_dipath_vertices(d));
    }
}

TEST_CASE("Bondy certifier")
{
    auto c6 = directed_cycle(6);
    auto r = bondy_certifier(c6, 4);
    REQUIRE(std::holds_alternative<DiCycle>(r));
    CHECK(std::get<DiCycle>(r).length() == 6);
    auto r7 = bondy_certifier(c6, 7);
    REQUIRE(std::holds_alternative<Coloring>(r7));
    CHECK(std::get<Coloring>(r7).bound <= 2);
    CHECK(is_proper(c6, std::get<Coloring>(r7)));
    auto k4 = bondy_certifier(bidirected_complete(4), 4);
    REQUIRE(std::holds_alternative<DiCycle>(k4));
    CHECK(std::get<DiCycle>(k4).length() == 4);
    CHECK_THROWS_AS(bondy_certifier(transitive_tournament(3), 3), PreconditionError);

    std::mt19937_64 rng(41);
    int strong = 0;
    for (int iter = 0; iter < 600; ++iter) {
        int n = 2 + static_cast<int>(rng() % 9);
        auto d = random_digraph(n, 0.35, rng);
        if (!strong_by_closure(d))
            continue;
        ++strong;
        int chi = brute_chromatic(d);
        for (int k = 2; k <= n + 1; ++k) {
            auto cert = bondy_certifier(d, k);
            if (auto c = std::get_if<DiCycle>(&cert)) {
                CHECK(is_dicycle(d, *c));
                CHECK(c->length() >= k);
            } else {
                auto &col = std::get<Coloring>(cert);
                CHECK(is_proper(d, col));
                CHECK(col.bound <= k - 1);
            }
            if (chi >= k)
                CHECK(std::holds_alternative<DiCycle>(cert));
        }
    }
    CHECK(strong > 50);
}

TEST_CASE("sequence lemma examples")
{
    auto a = lemma_min({1, 1, 1}, 3, 1);
    CHECK(a.indices == std::vector<int>{0, 1, 2});
    CHECK(a.common_value == 1);
    auto b = lemma_min({1, 2, 1, 2}, 2, 2);
    CHECK(b.indices == std::vector<int>{0, 2});
    CHECK(b.common_value == 1);
    auto c = lemma_min({2, 1, 2, 1}, 2, 2);
    CHECK(c.indices == std::vector<int>{1, 3});
    CHECK_THROWS_AS(lemma_min({1, 2, 1}, 2, 2), PreconditionError);
    CHECK_THROWS_AS(lemma_min({1, 3, 1, 1}, 2, 2), PreconditionError);

    CHECK(lemma_max({1, 1, 1}, 3, 1).start == 0);
    CHECK(lemma_max({2, 1, 2}, 2, 2).start == 1);
    CHECK(lemma_max({2, 2, 1}, 2, 2).start == 0);
    CHECK_THROWS_AS(lemma_max({2, 1}, 2, 2), PreconditionError);
}

TEST_CASE("sequence lemmas exhaustively for k <= 3, length <= 9")
{
    for (int k = 1; k <= 3; ++k)
        for (int p = 1; p <= 9; ++p) {
            std::vector<int> seq(p, 1);
            while (true) {
                for (int l = 1; l <= 3; ++l) {
                    long long need = 1;
                    for (int i = 0; i < k; ++i)
                        need *= l;
                    if (p >= need)
                        CHECK(min_witness_ok(seq, lemma_min(seq, l, k), l));
                }
                for (int m = 1; m <= 4; ++m)
                    if (p > k * (m - 1))
                        CHECK(max_witness_ok(seq, lemma_max(seq, m, k), m));
                int i = 0;
                while (i < p && ++seq[i] > k)
                    seq[i++] = 1;
                if (i == p)
                    break;
            }
        }
}
