#include <spindle/extremal.hpp>

#include <algorithm>
#include <string>

namespace spindle {

GallaiRoyResult gallai_roy_dipath(const Digraph &d)
{
    const int n = d.order();
    Digraph acyclic(n);
    for (const Arc &a : d.arcs()) {
        if (reachable(acyclic, a.head)[static_cast<std::size_t>(a.tail)])
            continue;
        acyclic.add_arc(a.tail, a.head);
    }

    // longest dipath (in vertices) ending at each vertex, over a topological order
    std::vector<int> indeg(static_cast<std::size_t>(n)), level(static_cast<std::size_t>(n), 1);
    std::vector<Vertex> pred(static_cast<std::size_t>(n), -1), order;
    for (Vertex v = 0; v < n; ++v)
        indeg[static_cast<std::size_t>(v)] = acyclic.in_degree(v);
    for (Vertex v = 0; v < n; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0)
            order.push_back(v);
    for (std::size_t i = 0; i < order.size(); ++i) {
        Vertex u = order[i];
        for (Vertex w : acyclic.out(u)) {
            auto sw = static_cast<std::size_t>(w);
            if (level[static_cast<std::size_t>(u)] + 1 > level[sw]) {
                level[sw] = level[static_cast<std::size_t>(u)] + 1;
                pred[sw] = u;
            }
            if (--indeg[sw] == 0)
                order.push_back(w);
        }
    }

    GallaiRoyResult result;
    result.coloring.colors.resize(static_cast<std::size_t>(n));
    if (n == 0)
        return result;
    Vertex top = 0;
    for (Vertex v = 0; v < n; ++v) {
        result.coloring.colors[static_cast<std::size_t>(v)] = level[static_cast<std::size_t>(v)] - 1;
        if (level[static_cast<std::size_t>(v)] > level[static_cast<std::size_t>(top)])
            top = v;
    }
    result.coloring.bound = level[static_cast<std::size_t>(top)];
    for (Vertex v = top; v >= 0; v = pred[static_cast<std::size_t>(v)])
        result.path.vertices.push_back(v);
    std::reverse(result.path.vertices.begin(), result.path.vertices.end());
    return result;
}

std::variant<DiCycle, Coloring> bondy_certifier(const Digraph &d, int k)
{
    if (k < 2)
        throw PreconditionError("bondy_certifier: k must be at least 2");
    if (!is_strong(d))
        throw PreconditionError("bondy_certifier: digraph must be strong");
    if (auto c = find_long_cycle(d, k))
        return *c;
    Coloring c = dsatur_coloring(d);
    if (c.bound > k - 1) {
        auto exact = exact_chromatic(d);
        c = exact.coloring;
    }
    if (c.bound > k - 1)
        throw std::logic_error("bondy_certifier: no long cycle yet chromatic number >= k");
    c.bound = std::max<Color>(c.bound, d.order() == 0 ? 0 : 1);
    return c;
}

namespace {
    void check_values(const std::vector<int> &seq, int k, const char *who)
    {
        for (int v : seq)
            if (v < 1 || v > k)
                throw PreconditionError(std::string(who) + ": value outside [1, k]");
    }

    long long power_capped(long long base, int exp, long long cap)
    {
        long long r = 1;
        for (int i = 0; i < exp; ++i) {
            r *= base;
            if (r > cap)
                return cap + 1;
        }
        return r;
    }

    SequenceWitnessMin min_rec(const std::vector<int> &seq, int lo, int hi, int l)
    {
        int v = *std::min_element(seq.begin() + lo, seq.begin() + hi);
        SequenceWitnessMin w{{}, v};
        for (int t = lo; t < hi && static_cast<int>(w.indices.size()) < l; ++t)
            if (seq[static_cast<std::size_t>(t)] == v)
                w.indices.push_back(t);
        if (static_cast<int>(w.indices.size()) == l)
            return w;
        // longest run of entries above v
        int best_lo = lo, best_len = 0;
        for (int t = lo; t < hi;) {
            if (seq[static_cast<std::size_t>(t)] == v) {
                ++t;
                continue;
            }
            int s = t;
            while (t < hi && seq[static_cast<std::size_t>(t)] != v)
                ++t;
            if (t - s > best_len) {
                best_len = t - s;
                best_lo = s;
            }
        }
        return min_rec(seq, best_lo, best_lo + best_len, l);
    }
}

SequenceWitnessMin lemma_min(const std::vector<int> &seq, int l, int k)
{
    if (l < 1 || k < 1)
        throw PreconditionError("lemma_min: l and k must be positive");
    check_values(seq, k, "lemma_min");
    auto p = static_cast<long long>(seq.size());
    if (p < power_capped(l, k, p))
        throw PreconditionError("lemma_min: sequence shorter than l^k");
    return min_rec(seq, 0, static_cast<int>(seq.size()), l);
}

SequenceWitnessMax lemma_max(const std::vector<int> &seq, int m, int k)
{
    if (m < 1 || k < 1)
        throw PreconditionError("lemma_max: m and k must be positive");
    check_values(seq, k, "lemma_max");
    if (static_cast<long long>(seq.size()) <= static_cast<long long>(k) * (m - 1))
        throw PreconditionError("lemma_max: sequence not longer than k(m - 1)");
    int lo = 0;
    for (int top = k; top > 1; --top) {
        int last = -1;
        for (int t = lo; t < static_cast<int>(seq.size()); ++t)
            if (seq[static_cast<std::size_t>(t)] == top)
                last = t;
        if (last - lo + 1 >= m)
            return {last - m + 1, m};
        lo = last + 1 > lo ? last + 1 : lo;
    }
    return {lo, m};
}

} // namespace spindle
