#pragma once

// Helpers shared by the witness extractions of the suitable-collection code.

#include <spindle/suitable.hpp>

#include <algorithm>
#include <array>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace spindle::detail {

using MaybePath = std::optional<DiPath>;

/// Concatenation of consecutive paths; nullopt if any piece is missing, ends
/// do not match or the result repeats a vertex.
MaybePath join(std::initializer_list<MaybePath> pieces);

/// p[a,b] when a occurs before (or at) b on p.
MaybePath sub(const DiPath &p, Vertex a, Vertex b);

MaybePath arc_path(const Digraph &d, Vertex u, Vertex v);

/// Shortest u->v dipath inside `allowed` (u and v always allowed).
MaybePath path_within(const Digraph &d, Vertex u, Vertex v, const std::vector<char> &allowed);

/// Two (x,y)-dipaths f1, f2 and a (y,x)-dipath back, verified against pat.
std::optional<SubdivisionWitness> triple(const Digraph &d, const BispindlePattern &pat, const MaybePath &f1,
                                         const MaybePath &f2, const MaybePath &back);

std::vector<char> mask_of(int n, const std::vector<Vertex> &vertices);
std::vector<Vertex> sorted_unique(std::vector<Vertex> v);
std::vector<Vertex> cycles_vertices(const SuitableCollection &c, const std::vector<int> &which);

inline BispindlePattern pattern_of(int k) { return BispindlePattern::b(k, 1, k); }

void note(const SuitableOptions &opt, const std::string &what);

/// Returns `built` when present (traced as a construction); otherwise a
/// bounded search on `local`, then on d (traced as a search). Throws
/// std::logic_error naming `what` when nothing is found.
SubdivisionWitness finish(const Digraph &d, int k, const std::optional<SubdivisionWitness> &built,
                          const std::vector<Vertex> &local, const SuitableOptions &opt, const std::string &what);

/// As finish, but returns nullopt instead of throwing.
std::optional<SubdivisionWitness> try_finish(const Digraph &d, int k, const std::optional<SubdivisionWitness> &built,
                                             const std::vector<Vertex> &local, const SuitableOptions &opt,
                                             const std::string &what);

/// Index triples (a, b, f) of the long-dipath argument over per-vertex
/// minima, maxima and value sets in [1, top]: first the triple the sequence
/// lemmas give (l common minima, windows of 2k), then a bounded sweep.
std::vector<std::array<int, 3>> index_triples(const std::vector<int> &mins, const std::vector<int> &maxs,
                                              const std::vector<std::vector<int>> &sets, int l, int top, int k,
                                              std::size_t cap);

/// Proof objects of the long-dipath extractions: a dipath `path` with
/// indices a < b <= f, P1 ending at path[a], P2 ending at path[b], P3 starting
/// at path[f]. `conn` joins two vertices through the part of the digraph the
/// paths hang from, `region` is that part's vertex mask.
struct ThreePaths {
    DiPath path;
    int a = 0, b = 0, f = 0;
    DiPath p1, p2, p3;
};

template <class Conn>
std::optional<SubdivisionWitness> three_path_cases(const Digraph &d, int k, const ThreePaths &t, Conn conn,
                                                   const std::vector<char> &region);

/// two_cycle_witness over every ordered pair of `cycles`.
std::optional<SubdivisionWitness> ears_between(const Digraph &d, int k, const std::vector<DiCycle> &cycles);

// ---------------------------------------------------------------------------

template <class Conn>
std::optional<SubdivisionWitness> three_path_cases(const Digraph &d, int k, const ThreePaths &t, Conn conn,
                                                   const std::vector<char> &region)
{
    const auto pat = pattern_of(k);
    const auto &pv = t.path.vertices;
    Vertex va = pv[static_cast<std::size_t>(t.a)], vb = pv[static_cast<std::size_t>(t.b)],
           vf = pv[static_cast<std::size_t>(t.f)];
    MaybePath pab = sub(t.path, va, vb), pbf = sub(t.path, vb, vf);
    const DiPath &p1 = t.p1, &p2 = t.p2, &p3 = t.p3;
    Vertex s1 = p1.source(), s2 = p2.source(), t3 = p3.target();

    std::vector<std::optional<SubdivisionWitness>> tries;
    auto attempt = [&](const MaybePath &f1, const MaybePath &f2, const MaybePath &back) {
        if (auto w = triple(d, pat, f1, f2, back))
            return w;
        return std::optional<SubdivisionWitness>{};
    };

    // P3 away from P1 and P2
    if (auto w = attempt(join({p1, pab}), join({conn(s1, s2), p2}), join({pbf, p3, conn(t3, s1)})))
        return w;
    if (auto w = attempt(join({conn(s2, s1), p1, pab}), p2, join({pbf, p3, conn(t3, s2)})))
        return w;
    {
        MaybePath p4 = conn(s1, s2), p5 = conn(t3, s1);
        if (p4 && p5) {
            Vertex v = s1;
            for (Vertex x : p4->vertices)
                if (p5->contains(x))
                    v = x;
            if (auto w = attempt(join({sub(*p5, v, s1), p1, pab}), join({sub(*p4, v, s2), p2}),
                                 join({pbf, p3, sub(*p5, t3, v)})))
                return w;
        }
    }
    // P1 and P2 meet
    {
        std::optional<Vertex> u;
        for (Vertex x : p2.vertices)
            if (p1.contains(x))
                u = x;
        if (u) {
            if (auto w = attempt(join({sub(p1, *u, va), pab}), sub(p2, *u, vb),
                                 join({pbf, p3, conn(t3, s1), sub(p1, s1, *u)})))
                return w;
            // P3 through the common part
            std::optional<Vertex> v;
            for (Vertex x : p3.vertices)
                if (p1.contains(x) && p2.contains(x)) {
                    v = x;
                    break;
                }
            if (v)
                if (auto w = attempt(join({sub(p1, *u, va), pab}), sub(p2, *u, vb),
                                     join({pbf, sub(p3, vf, *v), sub(p1, *v, *u)})))
                    return w;
        }
    }
    // P3 reaches P1 or P2 first
    std::optional<Vertex> first;
    for (Vertex x : p3.vertices)
        if (x != vf && (p1.contains(x) || p2.contains(x))) {
            first = x;
            break;
        }
    if (first) {
        bool on2 = p2.contains(*first);
        const DiPath &hit = on2 ? p2 : p1;
        Vertex u = *first;
        for (Vertex x : p3.vertices)
            if (hit.contains(x))
                u = x;
        std::vector<char> allowed = region;
        if (auto tail = sub(p3, u, t3))
            for (Vertex x : tail->vertices)
                allowed[static_cast<std::size_t>(x)] = 1;
        for (Vertex x : (on2 ? p1 : p2).vertices)
            allowed[static_cast<std::size_t>(x)] = 1;
        if (on2) {
            MaybePath q = path_within(d, u, va, allowed);
            if (auto w = attempt(join({q, pab}), sub(p2, u, vb), join({pbf, sub(p3, vf, u)})))
                return w;
            if (auto w = attempt(join({sub(p3, u, t3), conn(t3, s1), p1, pab}), sub(p2, u, vb),
                                 join({pbf, sub(p3, vf, u)})))
                return w;
        } else {
            MaybePath q = path_within(d, u, vb, allowed);
            if (auto w = attempt(join({sub(p1, u, va), pab}), q, join({pbf, sub(p3, vf, u)})))
                return w;
            if (auto w = attempt(join({sub(p1, u, va), pab}), join({sub(p3, u, t3), conn(t3, s2), p2}),
                                 join({pbf, sub(p3, vf, u)})))
                return w;
        }
    }
    return std::nullopt;
}

} // namespace spindle::detail
