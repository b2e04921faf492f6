#include <spindle/coloring.hpp>
#include <spindle/spindles.hpp>

#include <algorithm>

namespace spindle {

bool is_tournament(const Digraph &t)
{
    for (Vertex u = 0; u < t.order(); ++u)
        for (Vertex v = u + 1; v < t.order(); ++v)
            if (t.has_arc(u, v) == t.has_arc(v, u))
                return false;
    return true;
}

DiCycle camion_hamiltonian_cycle(const Digraph &t)
{
    const int n = t.order();
    if (!is_tournament(t))
        throw PreconditionError("camion: not a tournament");
    if (n < 3 || !is_strong(t))
        throw PreconditionError("camion: tournament must be strong with at least 3 vertices");

    std::vector<Vertex> cyc = shortest_directed_cycle(t)->vertices;
    std::vector<char> on(static_cast<std::size_t>(n), 0);
    for (Vertex v : cyc)
        on[static_cast<std::size_t>(v)] = 1;

    while (static_cast<int>(cyc.size()) < n) {
        bool inserted = false;
        for (Vertex v = 0; v < n && !inserted; ++v) {
            if (on[static_cast<std::size_t>(v)])
                continue;
            const std::size_t m = cyc.size();
            for (std::size_t i = 0; i < m; ++i)
                if (t.has_arc(cyc[i], v) && t.has_arc(v, cyc[(i + 1) % m])) {
                    cyc.insert(cyc.begin() + static_cast<std::ptrdiff_t>(i + 1), v);
                    on[static_cast<std::size_t>(v)] = 1;
                    inserted = true;
                    break;
                }
        }
        if (inserted)
            continue;
        // every outside vertex dominates the cycle (A) or is dominated by it (B)
        std::vector<char> in_a(static_cast<std::size_t>(n), 0);
        for (Vertex v = 0; v < n; ++v)
            if (!on[static_cast<std::size_t>(v)] && t.has_arc(v, cyc.front()))
                in_a[static_cast<std::size_t>(v)] = 1;
        bool extended = false;
        for (Vertex b = 0; b < n && !extended; ++b) {
            if (on[static_cast<std::size_t>(b)] || in_a[static_cast<std::size_t>(b)])
                continue;
            for (Vertex a : t.out(b))
                if (in_a[static_cast<std::size_t>(a)]) {
                    cyc.push_back(b);
                    cyc.push_back(a);
                    on[static_cast<std::size_t>(a)] = on[static_cast<std::size_t>(b)] = 1;
                    extended = true;
                    break;
                }
        }
        if (!extended)
            throw std::logic_error("camion: strong tournament without an extension");
    }
    return DiCycle{cyc};
}

SubdivisionWitness tournament_b_k11(const Digraph &t, int k)
{
    if (k < 3)
        throw PreconditionError("tournament_b_k11: k must be at least 3 (a directed triangle has no B(2,1;1)-subdivision)");
    if (t.order() != 2 * k - 1)
        throw PreconditionError("tournament_b_k11: tournament must have order 2k-1");
    const DiCycle c = camion_hamiltonian_cycle(t);
    const int n = t.order();
    const auto pattern = BispindlePattern::b(k, 1, 1);

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vertex vi = c.at(i), vj = c.at(j);
            if (i != j && t.has_arc(vi, vj) && c.distance(vi, vj) >= k)
                return SubdivisionWitness{vi, vj, {c.segment(vi, vj), DiPath{{vi, vj}}}, {c.segment(vj, vi)}};
        }

    // the tournament is rotative along c; v_i is c.at(i - 1)
    auto v = [&](int i) { return c.at(i - 1); };
    DiPath first = concat(c.segment(v(1), v(k - 1)), DiPath{{v(k - 1), v(k + 1), v(k + 2)}});
    DiPath second{{v(1), v(k), v(k + 2)}};
    SubdivisionWitness w{v(1), v(k + 2), {first, second}, {c.segment(v(k + 2), v(1))}};
    if (!verify_witness(t, pattern, w))
        throw std::logic_error("tournament_b_k11: rotative construction failed to verify");
    return w;
}

SubdivisionWitness extract_b211(const Digraph &d)
{
    if (!is_strong(d) || d.size() == 0)
        throw PreconditionError("extract_b211: digraph must be strong");
    const int chi = exact_chromatic(d).chromatic_number;
    if (chi < 4)
        throw PreconditionError("extract_b211: chromatic number is " + std::to_string(chi) + " < 4");

    auto block = max_chi_strong_block(d);
    const Digraph &b = block.graph;
    DiCycle c = *shortest_directed_cycle(b);
    Digraph f(b.order());
    for (int i = 0; i < c.length(); ++i)
        f.add_arc(c.at(i), c.at(i + 1));
    DiPath ear = find_directed_ear(b, f);
    Vertex a = ear.source(), z = ear.target();
    SubdivisionWitness local{a, z, {ear, c.segment(a, z)}, {c.segment(z, a)}};
    auto w = map_witness(local, block.to_host);
    if (!verify_witness(d, BispindlePattern::b(2, 1, 1), w))
        throw std::logic_error("extract_b211: ear construction failed to verify");
    return w;
}

} // namespace spindle
