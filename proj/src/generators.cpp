#include <spindle/coloring.hpp>
#include <spindle/generators.hpp>

#include <algorithm>
#include <numeric>
#include <random>

namespace spindle {

Digraph odd_dicycle(int n)
{
    if (n < 3 || n % 2 == 0)
        throw PreconditionError("odd_dicycle: n must be odd and at least 3");
    Digraph d(n);
    for (int i = 0; i < n; ++i)
        d.add_arc(i, (i + 1) % n);
    return d;
}

Digraph rotative_tournament(int k)
{
    if (k < 2)
        throw PreconditionError("rotative_tournament: k must be at least 2");
    const int n = 2 * k - 1;
    Digraph d(n);
    for (int i = 0; i < n; ++i)
        for (int s = 1; s <= k - 1; ++s)
            d.add_arc(i, (i + s) % n);
    return d;
}

Digraph bidirected_complete(int n)
{
    Digraph d(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                d.add_arc(i, j);
    return d;
}

Digraph transitive_tournament(int n)
{
    Digraph d(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            d.add_arc(i, j);
    return d;
}

Digraph random_strong_digraph(int n, double p, std::uint64_t seed)
{
    if (n < 1)
        throw PreconditionError("random_strong_digraph: n must be positive");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(std::clamp(p, 0.0, 1.0));
    Digraph d(n);
    for (int attempt = 0; attempt < 8; ++attempt) {
        d = Digraph(n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && coin(rng))
                    d.add_arc(u, v);
        if (is_strong(d))
            return d;
    }
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 0; i < n && n > 1; ++i) {
        Vertex a = order[static_cast<std::size_t>(i)], b = order[static_cast<std::size_t>((i + 1) % n)];
        if (!d.has_arc(a, b))
            d.add_arc(a, b);
    }
    return d;
}

Digraph random_strong_tournament(int n, std::uint64_t seed)
{
    if (n < 3)
        throw PreconditionError("random_strong_tournament: n must be at least 3");
    std::mt19937_64 rng(seed);
    while (true) {
        Digraph t(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (rng() & 1u)
                    t.add_arc(u, v);
                else
                    t.add_arc(v, u);
            }
        if (is_strong(t))
            return t;
    }
}

std::optional<bool> validate_dkb(const Digraph &d, int k, int b, long long budget)
{
    if (shortest_directed_cycle(d))
        return false;
    const int n = d.order();
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        adj[static_cast<std::size_t>(v)] = d.neighbours(v);

    // cycles rooted at their least vertex s, second vertex below the last one
    long long nodes = 0;
    bool exhausted = false, few_blocks = false;
    std::vector<Vertex> path;
    std::vector<char> on(static_cast<std::size_t>(n), 0);
    for (Vertex s = 0; s < n && !exhausted && !few_blocks; ++s) {
        auto dfs = [&](auto &&self, Vertex u) -> void {
            if (exhausted || few_blocks)
                return;
            if (budget > 0 && ++nodes > budget) {
                exhausted = true;
                return;
            }
            for (Vertex w : adj[static_cast<std::size_t>(u)]) {
                if (w == s && path.size() >= 3 && path[1] < path.back()) {
                    if (blocks_of_cycle(d, path) < b) {
                        few_blocks = true;
                        return;
                    }
                    continue;
                }
                if (w <= s || on[static_cast<std::size_t>(w)])
                    continue;
                on[static_cast<std::size_t>(w)] = 1;
                path.push_back(w);
                self(self, w);
                path.pop_back();
                on[static_cast<std::size_t>(w)] = 0;
            }
        };
        path = {s};
        on[static_cast<std::size_t>(s)] = 1;
        dfs(dfs, s);
        on[static_cast<std::size_t>(s)] = 0;
    }
    if (few_blocks)
        return false;
    if (exhausted || n > default_exact_limit)
        return std::nullopt;
    return exact_chromatic(d).chromatic_number > k;
}

std::optional<Digraph> search_dkb(int k, int b, int n, std::uint64_t seed, int attempts)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> density(0.2, 0.6);
    for (int a = 0; a < attempts; ++a) {
        std::vector<Vertex> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        std::bernoulli_distribution coin(density(rng));
        Digraph d(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng))
                    d.add_arc(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
        if (validate_dkb(d, k, b) == std::optional<bool>(true))
            return d;
    }
    return std::nullopt;
}

Theorem3Instance theorem3_construct(const Digraph &dk4, int k)
{
    if (validate_dkb(dk4, k, 4) != std::optional<bool>(true))
        throw PreconditionError("theorem3_construct: input is not a validated D_{k,4}");
    const int n = dk4.order();
    std::vector<Vertex> sinks, sources;
    for (Vertex v = 0; v < n; ++v) {
        if (dk4.out_degree(v) == 0)
            sinks.push_back(v);
        if (dk4.in_degree(v) == 0)
            sources.push_back(v);
    }
    const int l = static_cast<int>(sinks.size()), m = static_cast<int>(sources.size());
    Digraph d(n + l + 1 + m);
    for (const Arc &a : dk4.arcs())
        d.add_arc(a.tail, a.head);
    // x_i = n + i, z = n + l, y_j = n + l + 1 + j
    const Vertex z = n + l;
    for (int i = 0; i < l; ++i) {
        d.add_arc(sinks[static_cast<std::size_t>(i)], n + i);
        d.add_arc(n + i, i + 1 < l ? n + i + 1 : z);
    }
    for (int j = 0; j < m; ++j) {
        Vertex y = z + 1 + j;
        d.add_arc(j == 0 ? z : y - 1, y);
        d.add_arc(y, sources[static_cast<std::size_t>(j)]);
    }
    return {std::move(d), n + l - 1, z};
}

std::optional<SubdivisionWitness> detect_3spindle(const Digraph &d)
{
    for (Vertex x = 0; x < d.order(); ++x)
        for (Vertex y = 0; y < d.order(); ++y)
            if (x != y)
                if (auto paths = disjoint_dipaths(d, x, y, 3))
                    return SubdivisionWitness{x, y, *paths, {}};
    return std::nullopt;
}

DetectionResult detect_22bispindle(const Digraph &d, const SearchOptions &opt)
{
    auto cycle = shortest_directed_cycle(d);
    if (!cycle)
        return {Detection::absent, std::nullopt};
    // an arc of some cycle whose removal leaves d acyclic lies on every cycle
    for (int i = 0; i < cycle->length(); ++i) {
        Vertex a = cycle->at(i), b = cycle->at(i + 1);
        Digraph without(d.order());
        for (const Arc &arc : d.arcs())
            if (!(arc.tail == a && arc.head == b))
                without.add_arc(arc.tail, arc.head);
        if (!shortest_directed_cycle(without))
            return {Detection::absent, std::nullopt};
    }
    return find_subdivision(d, BispindlePattern::bispindle(2, 2), opt);
}

} // namespace spindle
