#pragma once

#include <spindle/digraph.hpp>
#include <spindle/extremal.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <random>
#include <vector>

namespace testing_support {

using spindle::Arc;
using spindle::Digraph;
using spindle::Vertex;
using spindle::SequenceWitnessMax;
using spindle::SequenceWitnessMin;

inline Digraph make(int n, std::initializer_list<std::pair<int, int>> arcs)
{
    Digraph d(n);
    for (auto [u, v] : arcs)
        d.add_arc(u, v);
    return d;
}

inline Digraph directed_cycle(int n)
{
    Digraph d(n);
    for (int i = 0; i < n; ++i)
        d.add_arc(i, (i + 1) % n);
    return d;
}

inline Digraph bidirected_complete(int n)
{
    Digraph d(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                d.add_arc(i, j);
    return d;
}

inline Digraph transitive_tournament(int n)
{
    Digraph d(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            d.add_arc(i, j);
    return d;
}

/// Independent random digraph (no strongness guarantee).
inline Digraph random_digraph(int n, double p, std::mt19937_64 &rng)
{
    std::bernoulli_distribution coin(p);
    Digraph d(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && coin(rng))
                d.add_arc(i, j);
    return d;
}

/// Reachability by Floyd–Warshall style closure; reach[u][v] includes u == v.
inline std::vector<std::vector<char>> closure(const Digraph &d)
{
    int n = d.order();
    std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
    for (int u = 0; u < n; ++u) {
        r[u][u] = 1;
        for (int v : d.out(u))
            r[u][v] = 1;
    }
    for (int w = 0; w < n; ++w)
        for (int u = 0; u < n; ++u)
            if (r[u][w])
                for (int v = 0; v < n; ++v)
                    if (r[w][v])
                        r[u][v] = 1;
    return r;
}

inline bool strong_by_closure(const Digraph &d)
{
    auto r = closure(d);
    for (auto &row : r)
        for (char c : row)
            if (!c)
                return false;
    return true;
}

/// Lengths of all directed cycles, by enumerating simple cycles rooted at their least vertex.
inline std::vector<int> all_cycle_lengths(const Digraph &d)
{
    std::vector<int> lengths;
    int n = d.order();
    std::vector<char> on(n, 0);
    for (int s = 0; s < n; ++s) {
        auto dfs = [&](auto &&self, int u, int len) -> void {
            for (int v : d.out(u)) {
                if (v == s)
                    lengths.push_back(len + 1);
                else if (v > s && !on[v]) {
                    on[v] = 1;
                    self(self, v, len + 1);
                    on[v] = 0;
                }
            }
        };
        on[s] = 1;
        dfs(dfs, s, 0);
        on[s] = 0;
    }
    return lengths;
}

/// Chromatic number by trying every colouring with c colours, c = 1, 2, ...
inline int brute_chromatic(const Digraph &d)
{
    int n = d.order();
    if (n == 0)
        return 0;
    for (int c = 1;; ++c) {
        std::vector<int> col(n, 0);
        while (true) {
            bool ok = true;
            for (auto a : d.arcs())
                if (col[a.tail] == col[a.head]) {
                    ok = false;
                    break;
                }
            if (ok)
                return c;
            int i = 0;
            while (i < n && ++col[i] == c)
                col[i++] = 0;
            if (i == n)
                break;
        }
    }
}

/// One representative per isomorphism class of digraphs on n <= 5 vertices:
/// a labelled digraph is kept when its arc bitmask is the least over all
/// vertex permutations.
inline std::vector<Digraph> canonical_digraphs(int n)
{
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v)
                slots.emplace_back(u, v);
    const int bits = static_cast<int>(slots.size());
    std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
    for (int i = 0; i < bits; ++i)
        index[slots[i].first][slots[i].second] = i;

    // per permutation, byte-wise lookup tables mapping arc bits to permuted bits
    const int chunks = (bits + 7) / 8;
    std::vector<std::vector<std::array<std::uint32_t, 256>>> tables;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<std::array<std::uint32_t, 256>> t(chunks);
        for (int c = 0; c < chunks; ++c)
            for (int byte = 0; byte < 256; ++byte) {
                std::uint32_t out = 0;
                for (int b = 0; b < 8; ++b) {
                    int i = 8 * c + b;
                    if (i < bits && ((byte >> b) & 1))
                        out |= 1u << index[perm[slots[i].first]][perm[slots[i].second]];
                }
                t[c][byte] = out;
            }
        tables.push_back(std::move(t));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Digraph> out;
    for (std::uint32_t code = 0; code < (1u << bits); ++code) {
        bool least = true;
        for (const auto &t : tables) {
            std::uint32_t image = 0;
            for (int c = 0; c < chunks; ++c)
                image |= t[c][(code >> (8 * c)) & 0xffu];
            if (image < code) {
                least = false;
                break;
            }
        }
        if (!least)
            continue;
        Digraph d(n);
        for (int i = 0; i < bits; ++i)
            if ((code >> i) & 1u)
                d.add_arc(slots[i].first, slots[i].second);
        out.push_back(std::move(d));
    }
    return out;
}

/// B(2,1;1) by brute force: for every hub pair, all simple dipaths in each
/// direction, then every triple tested for internal disjointness.
inline bool brute_b211(const Digraph &d)
{
    int n = d.order();
    auto all_paths = [&](int from, int to) {
        std::vector<std::vector<int>> paths;
        std::vector<int> cur{from};
        std::vector<char> on(n, 0);
        on[from] = 1;
        auto dfs = [&](auto &&self, int u) -> void {
            for (int w : d.out(u)) {
                if (w == to) {
                    cur.push_back(w);
                    paths.push_back(cur);
                    cur.pop_back();
                } else if (!on[w]) {
                    on[w] = 1;
                    cur.push_back(w);
                    self(self, w);
                    cur.pop_back();
                    on[w] = 0;
                }
            }
        };
        dfs(dfs, from);
        return paths;
    };
    auto disjoint = [](const std::vector<int> &a, const std::vector<int> &b) {
        for (std::size_t i = 1; i + 1 < a.size(); ++i)
            for (std::size_t j = 1; j + 1 < b.size(); ++j)
                if (a[i] == b[j])
                    return false;
        return true;
    };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y)
                continue;
            auto fwd = all_paths(x, y), bwd = all_paths(y, x);
            for (std::size_t i = 0; i < fwd.size(); ++i)
                for (std::size_t j = i + 1; j < fwd.size(); ++j) {
                    if (!disjoint(fwd[i], fwd[j]))
                        continue;
                    if (std::max(fwd[i].size(), fwd[j].size()) < 3)
                        continue;
                    for (const auto &q : bwd)
                        if (disjoint(q, fwd[i]) && disjoint(q, fwd[j]))
                            return true;
                }
        }
    return false;
}

/// Invariants of the sequence-lemma witnesses.
inline bool min_witness_ok(const std::vector<int> &seq, const SequenceWitnessMin &w, int l)
{
    if (static_cast<int>(w.indices.size()) != l || !std::is_sorted(w.indices.begin(), w.indices.end()))
        return false;
    for (std::size_t a = 0; a < w.indices.size(); ++a) {
        int i = w.indices[a];
        if (i < 0 || i >= static_cast<int>(seq.size()) || seq[i] != w.common_value)
            return false;
        if (a > 0 && w.indices[a - 1] == i)
            return false;
    }
    for (std::size_t a = 0; a + 1 < w.indices.size(); ++a)
        for (int t = w.indices[a] + 1; t < w.indices[a + 1]; ++t)
            if (seq[t] <= w.common_value)
                return false;
    return true;
}

inline bool max_witness_ok(const std::vector<int> &seq, const SequenceWitnessMax &w, int m)
{
    if (w.length != m || w.start < 0 || w.start + m > static_cast<int>(seq.size()))
        return false;
    int last = seq[w.start + m - 1];
    for (int t = w.start; t < w.start + m; ++t)
        if (seq[t] > last)
            return false;
    return true;
}

} // namespace testing_support
