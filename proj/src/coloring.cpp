#include <spindle/coloring.hpp>

#include <algorithm>
#include <deque>
#include <limits>
#include <functional>
#include <map>
#include <set>
#include <string>

namespace spindle {

namespace {
    using AdjList = std::vector<std::vector<Vertex>>;

    AdjList underlying(const Digraph &d)
    {
        AdjList adj(static_cast<std::size_t>(d.order()));
        for (Vertex v = 0; v < d.order(); ++v)
            adj[static_cast<std::size_t>(v)] = d.neighbours(v);
        return adj;
    }

    /// Smallest colour not used by already-coloured neighbours.
    Color first_free(const AdjList &adj, const std::vector<Color> &colors, Vertex v)
    {
        std::vector<char> used(adj[static_cast<std::size_t>(v)].size() + 1, 0);
        for (Vertex w : adj[static_cast<std::size_t>(v)]) {
            Color c = colors[static_cast<std::size_t>(w)];
            if (c >= 0 && c < static_cast<Color>(used.size()))
                used[static_cast<std::size_t>(c)] = 1;
        }
        Color c = 0;
        while (used[static_cast<std::size_t>(c)])
            ++c;
        return c;
    }

    Coloring greedy_in_order(const AdjList &adj, std::span<const Vertex> order)
    {
        Coloring result{std::vector<Color>(adj.size(), -1), 0};
        for (Vertex v : order) {
            Color c = first_free(adj, result.colors, v);
            result.colors[static_cast<std::size_t>(v)] = c;
            result.bound = std::max(result.bound, c + 1);
        }
        return result;
    }

    /// Vertices sorted by decreasing BFS distance from root inside `allowed`;
    /// root comes last. Every non-root vertex has a neighbour later in the order.
    std::vector<Vertex> distance_order(const AdjList &adj, Vertex root, const std::vector<char> &allowed)
    {
        std::vector<int> dist(adj.size(), -1);
        std::deque<Vertex> q{root};
        std::vector<Vertex> seen{root};
        dist[static_cast<std::size_t>(root)] = 0;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop_front();
            for (Vertex w : adj[static_cast<std::size_t>(u)])
                if (allowed[static_cast<std::size_t>(w)] && dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    q.push_back(w);
                    seen.push_back(w);
                }
        }
        std::stable_sort(seen.begin(), seen.end(), [&](Vertex a, Vertex b) {
            return dist[static_cast<std::size_t>(a)] > dist[static_cast<std::size_t>(b)];
        });
        return seen;
    }

    bool connected_without(const AdjList &adj, Vertex a, Vertex b)
    {
        std::vector<char> allowed(adj.size(), 1);
        allowed[static_cast<std::size_t>(a)] = allowed[static_cast<std::size_t>(b)] = 0;
        Vertex start = -1;
        for (std::size_t v = 0; v < adj.size(); ++v)
            if (allowed[v]) {
                start = static_cast<Vertex>(v);
                break;
            }
        if (start < 0)
            return true;
        auto order = distance_order(adj, start, allowed);
        return order.size() + 2 == adj.size();
    }
}

bool is_proper(const Digraph &d, const Coloring &c)
{
    if (static_cast<int>(c.colors.size()) != d.order())
        return false;
    for (Color col : c.colors)
        if (col < 0 || col >= c.bound)
            return false;
    for (const Arc &a : d.arcs())
        if (c.colors[static_cast<std::size_t>(a.tail)] == c.colors[static_cast<std::size_t>(a.head)])
            return false;
    return true;
}

Color colors_used(const Coloring &c)
{
    std::set<Color> s(c.colors.begin(), c.colors.end());
    return static_cast<Color>(s.size());
}

Coloring compact(const Coloring &c)
{
    std::map<Color, Color> renumber;
    Coloring r{std::vector<Color>(c.colors.size()), 0};
    for (std::size_t i = 0; i < c.colors.size(); ++i) {
        auto [it, inserted] = renumber.try_emplace(c.colors[i], static_cast<Color>(renumber.size()));
        r.colors[i] = it->second;
    }
    r.bound = static_cast<Color>(renumber.size());
    return r;
}

std::pair<int, std::vector<Vertex>> degeneracy_order(const Digraph &d)
{
    const int n = d.order();
    auto adj = underlying(d);
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        deg[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> order;
    int degeneracy = 0;
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!removed[static_cast<std::size_t>(v)] && (best < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(best)]))
                best = v;
        degeneracy = std::max(degeneracy, deg[static_cast<std::size_t>(best)]);
        removed[static_cast<std::size_t>(best)] = 1;
        order.push_back(best);
        for (Vertex w : adj[static_cast<std::size_t>(best)])
            --deg[static_cast<std::size_t>(w)];
    }
    return {degeneracy, order};
}

Coloring degeneracy_coloring(const Digraph &d)
{
    auto [degeneracy, order] = degeneracy_order(d);
    std::reverse(order.begin(), order.end());
    auto result = greedy_in_order(underlying(d), order);
    result.bound = d.order() == 0 ? 0 : degeneracy + 1;
    return result;
}

Coloring dsatur_coloring(const Digraph &d)
{
    const int n = d.order();
    auto adj = underlying(d);
    Coloring result{std::vector<Color>(static_cast<std::size_t>(n), -1), 0};
    std::vector<std::set<Color>> seen(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v) {
            auto sv = static_cast<std::size_t>(v);
            if (result.colors[sv] >= 0)
                continue;
            if (best < 0)
                best = v;
            else {
                auto sb = static_cast<std::size_t>(best);
                if (seen[sv].size() > seen[sb].size() ||
                    (seen[sv].size() == seen[sb].size() && adj[sv].size() > adj[sb].size()))
                    best = v;
            }
        }
        Color c = first_free(adj, result.colors, best);
        result.colors[static_cast<std::size_t>(best)] = c;
        result.bound = std::max(result.bound, c + 1);
        for (Vertex w : adj[static_cast<std::size_t>(best)])
            seen[static_cast<std::size_t>(w)].insert(c);
    }
    return result;
}

Coloring brooks_coloring(const Digraph &d)
{
    const int n = d.order();
    if (!is_connected(d))
        throw PreconditionError("brooks_coloring: underlying graph must be connected");
    if (n == 0)
        return {};
    auto adj = underlying(d);
    int delta = 0;
    std::size_t edges = 0;
    for (const auto &nb : adj) {
        delta = std::max(delta, static_cast<int>(nb.size()));
        edges += nb.size();
    }
    edges /= 2;
    const bool complete = edges == static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    const bool cycle = delta == 2 && edges == static_cast<std::size_t>(n);
    const bool odd_cycle = cycle && n % 2 == 1;
    std::vector<char> all(static_cast<std::size_t>(n), 1);

    if (complete || odd_cycle) {
        auto order = distance_order(adj, 0, all);
        auto r = greedy_in_order(adj, order);
        r.bound = delta + 1;
        return r;
    }

    // bipartite paths and even cycles
    if (delta <= 2) {
        auto order = distance_order(adj, 0, all);
        std::reverse(order.begin(), order.end());
        auto r = greedy_in_order(adj, order);
        r.bound = std::max<Color>(r.bound, delta);
        return r;
    }

    // a vertex of degree < delta, used as the last vertex of a distance order
    for (Vertex v = 0; v < n; ++v)
        if (static_cast<int>(adj[static_cast<std::size_t>(v)].size()) < delta) {
            auto r = greedy_in_order(adj, distance_order(adj, v, all));
            r.bound = delta;
            return r;
        }

    // delta-regular: split at a cut vertex if there is one
    auto blocks = underlying_blocks(d);
    if (blocks.size() > 1) {
        std::vector<int> count(static_cast<std::size_t>(n), 0);
        for (const auto &b : blocks)
            for (Vertex v : b)
                ++count[static_cast<std::size_t>(v)];
        Vertex cut = static_cast<Vertex>(std::find_if(count.begin(), count.end(), [](int c) { return c > 1; }) - count.begin());
        std::vector<char> without_cut = all;
        without_cut[static_cast<std::size_t>(cut)] = 0;
        Vertex first_nb = adj[static_cast<std::size_t>(cut)].front();
        auto side = distance_order(adj, first_nb, without_cut);
        std::vector<char> in_side(static_cast<std::size_t>(n), 0);
        for (Vertex v : side)
            in_side[static_cast<std::size_t>(v)] = 1;
        // side 1 = component of G - cut containing first_nb, plus cut; side 2 = rest plus cut
        std::vector<char> side1 = in_side, side2(static_cast<std::size_t>(n), 0);
        side1[static_cast<std::size_t>(cut)] = 1;
        for (Vertex v = 0; v < n; ++v)
            side2[static_cast<std::size_t>(v)] = !in_side[static_cast<std::size_t>(v)];
        auto c1 = greedy_in_order(adj, distance_order(adj, cut, side1));
        auto c2 = greedy_in_order(adj, distance_order(adj, cut, side2));
        Color a = c1.colors[static_cast<std::size_t>(cut)], b = c2.colors[static_cast<std::size_t>(cut)];
        Coloring r{std::vector<Color>(static_cast<std::size_t>(n), -1), delta};
        for (Vertex v = 0; v < n; ++v) {
            auto sv = static_cast<std::size_t>(v);
            if (side1[sv])
                r.colors[sv] = c1.colors[sv];
            else {
                Color c = c2.colors[sv];
                r.colors[sv] = c == a ? b : (c == b ? a : c);
            }
        }
        return r;
    }

    // 2-connected, delta-regular, not complete: v with non-adjacent neighbours
    // a, b such that G - {a, b} stays connected
    for (Vertex v = 0; v < n; ++v) {
        const auto &nb = adj[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                Vertex a = nb[i], b = nb[j];
                if (d.adjacent(a, b) || !connected_without(adj, a, b))
                    continue;
                std::vector<char> allowed = all;
                allowed[static_cast<std::size_t>(a)] = allowed[static_cast<std::size_t>(b)] = 0;
                std::vector<Vertex> order{a, b};
                auto rest = distance_order(adj, v, allowed);
                order.insert(order.end(), rest.begin(), rest.end());
                auto r = greedy_in_order(adj, order);
                r.bound = delta;
                return r;
            }
    }
    throw std::logic_error("brooks_coloring: no Lovasz triple in a 2-connected regular graph");
}

ChromaticResult exact_chromatic(const Digraph &d, int limit)
{
    const int n = d.order();
    if (n > limit)
        throw TooLargeError("exact_chromatic: " + std::to_string(n) + " vertices exceeds limit " + std::to_string(limit));
    if (n == 0)
        return {0, {}};
    auto adj = underlying(d);

    // clique lower bound: greedy from every start vertex
    int lower = 1;
    for (Vertex s = 0; s < n; ++s) {
        std::vector<Vertex> clique{s};
        for (Vertex w : adj[static_cast<std::size_t>(s)]) {
            bool ok = std::all_of(clique.begin(), clique.end(), [&](Vertex c) { return d.adjacent(c, w); });
            if (ok)
                clique.push_back(w);
        }
        lower = std::max(lower, static_cast<int>(clique.size()));
    }

    Coloring best = dsatur_coloring(d);
    int upper = static_cast<int>(best.bound);
    if (upper > lower) {
        std::vector<Color> colors(static_cast<std::size_t>(n), -1);
        // forbidden[v][c] counts coloured neighbours of v with colour c
        std::vector<std::vector<int>> forbidden(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n + 1), 0));
        std::vector<int> saturation(static_cast<std::size_t>(n), 0);

        auto assign = [&](Vertex v, Color c, int delta) {
            for (Vertex w : adj[static_cast<std::size_t>(v)]) {
                auto &cnt = forbidden[static_cast<std::size_t>(w)][static_cast<std::size_t>(c)];
                if (delta > 0 && cnt++ == 0)
                    ++saturation[static_cast<std::size_t>(w)];
                if (delta < 0 && --cnt == 0)
                    --saturation[static_cast<std::size_t>(w)];
            }
        };

        std::function<void(int, int)> search = [&](int coloured, int used) {
            if (upper == lower)
                return;
            if (coloured == n) {
                upper = used;
                best = Coloring{colors, used};
                return;
            }
            Vertex pick = -1;
            for (Vertex v = 0; v < n; ++v) {
                auto sv = static_cast<std::size_t>(v);
                if (colors[sv] >= 0)
                    continue;
                if (pick < 0 || saturation[sv] > saturation[static_cast<std::size_t>(pick)] ||
                    (saturation[sv] == saturation[static_cast<std::size_t>(pick)] &&
                     adj[sv].size() > adj[static_cast<std::size_t>(pick)].size()))
                    pick = v;
            }
            auto sp = static_cast<std::size_t>(pick);
            for (int c = 0; c <= used && c < upper - 1; ++c) {
                if (forbidden[sp][static_cast<std::size_t>(c)] > 0)
                    continue;
                colors[sp] = c;
                assign(pick, c, +1);
                search(coloured + 1, std::max(used, c + 1));
                assign(pick, c, -1);
                colors[sp] = -1;
                if (upper == lower)
                    return;
            }
        };
        search(0, 0);
    }
    return {upper, best};
}

Coloring product_coloring(const Coloring &c1, const Coloring &c2)
{
    if (c1.colors.size() != c2.colors.size())
        throw PreconditionError("product_coloring: vertex sets differ");
    if (c1.bound > 0 && c2.bound > std::numeric_limits<Color>::max() / c1.bound)
        throw std::overflow_error("product_coloring: bound overflows 64 bits");
    Coloring r{std::vector<Color>(c1.colors.size()), c1.bound * c2.bound};
    for (std::size_t i = 0; i < c1.colors.size(); ++i)
        r.colors[i] = c1.colors[i] * c2.bound + c2.colors[i];
    return r;
}

Contraction contract(const Digraph &d, std::span<const std::vector<Vertex>> parts)
{
    const int n = d.order();
    Contraction result;
    result.image.assign(static_cast<std::size_t>(n), -1);
    for (const auto &part : parts) {
        std::vector<Vertex> sorted = part;
        std::sort(sorted.begin(), sorted.end());
        for (Vertex v : sorted) {
            if (v < 0 || v >= n || result.image[static_cast<std::size_t>(v)] >= 0)
                throw PreconditionError("contract: parts must be disjoint vertex sets of d");
            result.image[static_cast<std::size_t>(v)] = static_cast<Vertex>(result.preimage.size());
        }
        result.preimage.push_back(std::move(sorted));
    }
    for (Vertex v = 0; v < n; ++v)
        if (result.image[static_cast<std::size_t>(v)] < 0) {
            result.image[static_cast<std::size_t>(v)] = static_cast<Vertex>(result.preimage.size());
            result.preimage.push_back({v});
        }
    result.quotient = Digraph(static_cast<int>(result.preimage.size()));
    for (const Arc &a : d.arcs()) {
        Vertex x = result.image[static_cast<std::size_t>(a.tail)], y = result.image[static_cast<std::size_t>(a.head)];
        if (x != y && !result.quotient.has_arc(x, y))
            result.quotient.add_arc(x, y);
    }
    return result;
}

Coloring lift_contraction_coloring(const Digraph &d, std::span<const std::vector<Vertex>> parts,
                                   std::span<const Coloring> part_colorings, const Coloring &quotient_coloring)
{
    if (parts.size() != part_colorings.size())
        throw PreconditionError("lift: one colouring per part required");
    auto con = contract(d, parts);
    if (!is_proper(con.quotient, quotient_coloring))
        throw PreconditionError("lift: quotient colouring is not proper on the contraction");
    Color part_bound = 1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        std::vector<Vertex> sorted = parts[i];
        std::sort(sorted.begin(), sorted.end());
        auto sub = induced_subdigraph(d, sorted);
        if (!is_proper(sub.graph, part_colorings[i]))
            throw PreconditionError("lift: part colouring " + std::to_string(i) + " is not proper");
        part_bound = std::max(part_bound, part_colorings[i].bound);
    }
    Coloring r{std::vector<Color>(static_cast<std::size_t>(d.order()), 0), quotient_coloring.bound * part_bound};
    for (Vertex v = 0; v < d.order(); ++v) {
        Vertex q = con.image[static_cast<std::size_t>(v)];
        Color part_color = 0;
        if (static_cast<std::size_t>(q) < parts.size()) {
            const auto &pre = con.preimage[static_cast<std::size_t>(q)];
            auto pos = std::lower_bound(pre.begin(), pre.end(), v) - pre.begin();
            part_color = part_colorings[static_cast<std::size_t>(q)].colors[static_cast<std::size_t>(pos)];
        }
        r.colors[static_cast<std::size_t>(v)] = quotient_coloring.colors[static_cast<std::size_t>(q)] * part_bound + part_color;
    }
    return r;
}

bool is_rainbow(const Coloring &c, std::span<const Vertex> vertices)
{
    std::set<Color> seen;
    for (Vertex v : vertices)
        if (!seen.insert(c.colors[static_cast<std::size_t>(v)]).second)
            return false;
    return true;
}

bool is_rainbow(const Digraph &, const Coloring &c, const DiPath &p)
{
    return is_rainbow(c, p.vertices);
}

} // namespace spindle
