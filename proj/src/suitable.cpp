#include "extract_util.hpp"

#include <spindle/extremal.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace spindle {

// ---------------------------------------------------------------------------
// shared helpers

namespace detail {

MaybePath join(std::initializer_list<MaybePath> pieces)
{
    DiPath out;
    for (const auto &p : pieces) {
        if (!p || p->vertices.empty())
            return std::nullopt;
        if (out.vertices.empty()) {
            out = *p;
            continue;
        }
        if (out.target() != p->source())
            return std::nullopt;
        out.vertices.insert(out.vertices.end(), p->vertices.begin() + 1, p->vertices.end());
    }
    auto sorted = out.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return std::nullopt;
    return out;
}

MaybePath sub(const DiPath &p, Vertex a, Vertex b)
{
    auto ia = std::find(p.vertices.begin(), p.vertices.end(), a);
    auto ib = std::find(p.vertices.begin(), p.vertices.end(), b);
    if (ia == p.vertices.end() || ib == p.vertices.end() || ib < ia)
        return std::nullopt;
    return DiPath{{ia, ib + 1}};
}

MaybePath arc_path(const Digraph &d, Vertex u, Vertex v)
{
    if (!d.has_arc(u, v))
        return std::nullopt;
    return DiPath{{u, v}};
}

MaybePath path_within(const Digraph &d, Vertex u, Vertex v, const std::vector<char> &allowed)
{
    if (u == v)
        return DiPath{{u}};
    std::vector<char> target(static_cast<std::size_t>(d.order()), 0);
    target[static_cast<std::size_t>(v)] = 1;
    std::vector<char> mask = allowed;
    mask[static_cast<std::size_t>(u)] = 1;
    mask[static_cast<std::size_t>(v)] = 1;
    std::vector<Vertex> src{u};
    return shortest_path(d, src, target, mask);
}

std::optional<SubdivisionWitness> triple(const Digraph &d, const BispindlePattern &pat, const MaybePath &f1,
                                         const MaybePath &f2, const MaybePath &back)
{
    if (!f1 || !f2 || !back || f1->vertices.size() < 2)
        return std::nullopt;
    SubdivisionWitness w{f1->source(), f1->target(), {*f1, *f2}, {*back}};
    if (verify_witness(d, pat, w))
        return w;
    return std::nullopt;
}

std::vector<char> mask_of(int n, const std::vector<Vertex> &vertices)
{
    std::vector<char> m(static_cast<std::size_t>(n), 0);
    for (Vertex v : vertices)
        m[static_cast<std::size_t>(v)] = 1;
    return m;
}

std::vector<Vertex> sorted_unique(std::vector<Vertex> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<Vertex> cycles_vertices(const SuitableCollection &c, const std::vector<int> &which)
{
    std::vector<Vertex> out;
    for (int i : which) {
        const auto &vs = c.cycles[static_cast<std::size_t>(i)].vertices;
        out.insert(out.end(), vs.begin(), vs.end());
    }
    return sorted_unique(std::move(out));
}

void note(const SuitableOptions &opt, const std::string &what)
{
    if (opt.trace)
        opt.trace->push_back(what);
}

std::optional<SubdivisionWitness> try_finish(const Digraph &d, int k, const std::optional<SubdivisionWitness> &built,
                                             const std::vector<Vertex> &local, const SuitableOptions &opt,
                                             const std::string &what)
{
    if (built) {
        note(opt, what + ":construction");
        return built;
    }
    const auto pat = pattern_of(k);
    if (auto w = find_subdivision_within(d, local, pat, opt.search)) {
        note(opt, what + ":search");
        return w;
    }
    if (static_cast<int>(local.size()) < d.order())
        if (auto r = find_subdivision(d, pat, opt.search); r.witness) {
            note(opt, what + ":search");
            return r.witness;
        }
    return std::nullopt;
}

SubdivisionWitness finish(const Digraph &d, int k, const std::optional<SubdivisionWitness> &built,
                          const std::vector<Vertex> &local, const SuitableOptions &opt, const std::string &what)
{
    if (auto w = try_finish(d, k, built, local, opt, what))
        return *w;
    throw std::logic_error(what + ": no B(k,1;k)-subdivision found");
}

std::optional<SubdivisionWitness> ears_between(const Digraph &d, int k, const std::vector<DiCycle> &cycles)
{
    const auto pat = pattern_of(k);
    for (const auto &a : cycles)
        for (const auto &b : cycles) {
            if (&a == &b)
                continue;
            if (auto w = two_cycle_witness(d, pat, a, b))
                return w;
        }
    return std::nullopt;
}

/// Index triples (a, b, f) of the long-dipath argument: first the one the
/// sequence lemmas give, then a bounded sweep.
std::vector<std::array<int, 3>> index_triples(const std::vector<int> &mins, const std::vector<int> &maxs,
                                              const std::vector<std::vector<int>> &sets, int l, int top, int k,
                                              std::size_t cap)
{
    std::vector<std::array<int, 3>> out;
    const int p = static_cast<int>(mins.size());
    try {
        auto low = lemma_min(mins, l, top);
        std::vector<int> ms;
        for (std::size_t j = 0; j + 1 < low.indices.size(); ++j) {
            int best = 0;
            for (int i = low.indices[j]; i < low.indices[j + 1]; ++i)
                best = std::max(best, maxs[static_cast<std::size_t>(i)]);
            ms.push_back(best);
        }
        auto win = lemma_max(ms, 2 * k, top);
        auto ell = [&](int i) { return low.indices[static_cast<std::size_t>(win.start + i - 1)]; };
        int target = ms[static_cast<std::size_t>(win.start + 2 * k - 1)];
        int f = -1;
        for (int i = ell(2 * k); i < p && f < 0; ++i)
            if (std::count(sets[static_cast<std::size_t>(i)].begin(), sets[static_cast<std::size_t>(i)].end(),
                           target))
                f = i;
        if (f >= 0)
            out.push_back({ell(1), ell(k), f});
    } catch (const PreconditionError &) {
    }
    for (int a = 0; a < p && out.size() < cap; ++a)
        for (int b = a + 1; b < p && out.size() < cap; ++b) {
            if (mins[static_cast<std::size_t>(a)] != mins[static_cast<std::size_t>(b)])
                continue;
            for (int f = p - 1; f >= b && out.size() < cap; --f)
                out.push_back({a, b, f});
        }
    return out;
}

} // namespace detail

using namespace detail;

// ---------------------------------------------------------------------------
// collections

std::optional<DiPath> common_subpath(const DiCycle &a, const DiCycle &b)
{
    std::set<Vertex> in_b(b.vertices.begin(), b.vertices.end());
    int la = a.length();
    std::vector<int> shared;
    for (int i = 0; i < la; ++i)
        if (in_b.count(a.at(i)))
            shared.push_back(i);
    if (shared.empty())
        return DiPath{};
    if (static_cast<int>(shared.size()) == la)
        return std::nullopt;
    int start = -1;
    for (int i : shared)
        if (!in_b.count(a.at((i - 1 + la) % la))) {
            if (start != -1)
                return std::nullopt;
            start = i;
        }
    DiPath p;
    for (int i = start; in_b.count(a.at(i % la)); ++i)
        p.vertices.push_back(a.at(i % la));
    if (p.vertices.size() != shared.size() || static_cast<int>(p.vertices.size()) == b.length())
        return std::nullopt;
    for (std::size_t j = 0; j + 1 < p.vertices.size(); ++j)
        if (b.step(p.vertices[j], 1) != p.vertices[j + 1])
            return std::nullopt;
    return p;
}

bool validate_suitable(const Digraph &d, const SuitableCollection &c)
{
    if (c.k < 1)
        return false;
    for (const auto &cyc : c.cycles)
        if (!is_dicycle(d, cyc) || cyc.length() < 8 * c.k)
            return false;
    for (std::size_t i = 0; i < c.cycles.size(); ++i)
        for (std::size_t j = i + 1; j < c.cycles.size(); ++j) {
            auto p = common_subpath(c.cycles[i], c.cycles[j]);
            if (!p || static_cast<int>(p->vertices.size()) > c.k)
                return false;
        }
    return true;
}

SuitableCollection reversed(const SuitableCollection &c)
{
    SuitableCollection r{c.k, {}};
    for (const auto &cyc : c.cycles)
        r.cycles.push_back(cyc.reversed());
    return r;
}

namespace {
    const DiCycle &member(const SuitableCollection &c, int i) { return c.cycles.at(static_cast<std::size_t>(i)); }

    DiPath shared_path(const SuitableCollection &c, int i, int j)
    {
        auto p = common_subpath(member(c, i), member(c, j));
        if (!p)
            throw PreconditionError("members do not meet in a common subpath");
        return *p;
    }

    Interface reverse_interface(const Interface &in)
    {
        Interface r;
        r.center = in.center;
        for (const auto &p : in.parts) {
            InterfacePart q;
            q.cycle = p.cycle;
            q.shared = p.shared.reversed();
            q.q = p.q.reversed();
            q.q_minus.assign(p.q_plus.rbegin(), p.q_plus.rend());
            q.q_plus.assign(p.q_minus.rbegin(), p.q_minus.rend());
            r.parts.push_back(std::move(q));
        }
        r.plus = in.minus;
        r.minus = in.plus;
        r.all = in.all;
        return r;
    }

    std::optional<SubdivisionWitness> dis_candidates(const Digraph &d, const SuitableCollection &c, int i1, int i2,
                                                     int i3)
    {
        const auto pat = pattern_of(c.k);
        const DiCycle &c1 = member(c, i1);
        for (auto [x, y] : {std::pair{i2, i3}, std::pair{i3, i2}}) {
            DiPath px = shared_path(c, i1, x), py = shared_path(c, i1, y), pxy = shared_path(c, x, y);
            if (px.vertices.empty() || py.vertices.empty() || pxy.vertices.empty())
                continue;
            Vertex sx = px.source(), sy = py.source(), txy = pxy.target();
            const DiCycle &cx = member(c, x), &cy = member(c, y);
            if (sx == txy)
                continue;
            if (auto w = triple(d, pat, cx.segment(txy, sx), join({cy.segment(txy, sy), c1.segment(sy, sx)}),
                                cx.segment(sx, txy)))
                return w;
        }
        return std::nullopt;
    }
}

// ---------------------------------------------------------------------------
// classifying members against the disjoint cycle

std::variant<DisCase, SubdivisionWitness> dis_classify(const Digraph &d, const SuitableCollection &c, int i1, int i2,
                                                       int i3, Vertex v, const SuitableOptions &opt)
{
    int m = static_cast<int>(c.cycles.size());
    for (int i : {i1, i2, i3})
        if (i < 0 || i >= m)
            throw PreconditionError("dis_classify: member index out of range");
    if (i1 == i2 || i2 == i3 || i1 == i3)
        throw PreconditionError("dis_classify: members must be distinct");
    const DiCycle &c1 = member(c, i1), &c2 = member(c, i2), &c3 = member(c, i3);
    if (!c2.contains(v) || !c3.contains(v) || c1.contains(v))
        throw PreconditionError("dis_classify: v must lie on C2 and C3 but not on C1");
    DiPath p12 = shared_path(c, i1, i2), p13 = shared_path(c, i1, i3), p23 = shared_path(c, i2, i3);
    if (p12.vertices.empty() || p13.vertices.empty())
        throw PreconditionError("dis_classify: members must pairwise intersect");

    int k3 = 3 * c.k;
    if (c2.distance(p12.target(), v) < k3 && c3.distance(p13.target(), v) < k3)
        return DisCase::after_terminal;
    if (c2.distance(v, p12.source()) < k3 && c3.distance(v, p13.source()) < k3)
        return DisCase::before_initial;

    auto built = dis_candidates(d, c, i1, i2, i3);
    if (!built)
        if (auto w = dis_candidates(d.reversed(), reversed(c), i1, i2, i3))
            built = reverse_witness(*w);
    return finish(d, c.k, built, cycles_vertices(c, {i1, i2, i3}), opt, "dis");
}

// ---------------------------------------------------------------------------
// interface

std::variant<Interface, SubdivisionWitness> build_interface(const Digraph &d, const SuitableCollection &c, int center,
                                                            const SuitableOptions &opt)
{
    if (center < 0 || center >= static_cast<int>(c.cycles.size()))
        throw PreconditionError("build_interface: centre out of range");
    const int k3 = 3 * c.k;
    const DiCycle &c1 = member(c, center);
    Interface in;
    in.center = center;
    for (int j = 0; j < static_cast<int>(c.cycles.size()); ++j) {
        if (j == center)
            continue;
        DiPath p = shared_path(c, center, j);
        if (p.vertices.empty())
            continue;
        const DiCycle &cj = member(c, j);
        InterfacePart part;
        part.cycle = j;
        part.shared = p;
        part.q = cj.segment(cj.step(p.source(), -k3), cj.step(p.target(), k3));
        for (int s = k3; s >= 1; --s)
            part.q_minus.push_back(cj.step(p.source(), -s));
        for (int s = 1; s <= k3; ++s)
            part.q_plus.push_back(cj.step(p.target(), s));
        in.parts.push_back(std::move(part));
    }

    // every vertex of a Q-side lying on two members around the centre
    std::map<Vertex, std::vector<int>> on_parts;
    for (const auto &part : in.parts)
        for (const auto *side : {&part.q_minus, &part.q_plus})
            for (Vertex v : *side)
                on_parts[v];
    for (auto &[v, list] : on_parts)
        for (const auto &part : in.parts)
            if (member(c, part.cycle).contains(v))
                list.push_back(part.cycle);
    for (const auto &[v, list] : on_parts)
        for (std::size_t a = 0; a < list.size(); ++a)
            for (std::size_t b = a + 1; b < list.size(); ++b) {
                auto r = dis_classify(d, c, center, list[a], list[b], v, opt);
                if (auto *w = std::get_if<SubdivisionWitness>(&r))
                    return *w;
            }

    std::vector<Vertex> all = c1.vertices;
    for (const auto &part : in.parts) {
        in.plus.insert(in.plus.end(), part.q_plus.begin(), part.q_plus.end());
        in.minus.insert(in.minus.end(), part.q_minus.begin(), part.q_minus.end());
        all.insert(all.end(), part.q.vertices.begin(), part.q.vertices.end());
    }
    in.plus = sorted_unique(std::move(in.plus));
    in.minus = sorted_unique(std::move(in.minus));
    in.all = sorted_unique(std::move(all));
    std::vector<Vertex> both;
    std::set_intersection(in.plus.begin(), in.plus.end(), in.minus.begin(), in.minus.end(), std::back_inserter(both));
    if (!both.empty())
        throw std::logic_error("build_interface: I+ and I- meet although every shared vertex classified");
    return in;
}

Digraph interface_digraph(int n, const Interface &in, const SuitableCollection &, bool plus)
{
    Digraph h(n);
    for (const auto &part : in.parts) {
        const auto &side = plus ? part.q_plus : part.q_minus;
        for (std::size_t i = 0; i + 1 < side.size(); ++i)
            if (!h.has_arc(side[i], side[i + 1]))
                h.add_arc(side[i], side[i + 1]);
    }
    return h;
}

Digraph fake_arc_digraph(int n, const Interface &in, const SuitableCollection &, bool plus)
{
    Digraph h(n);
    for (const auto &part : in.parts) {
        const auto &side = plus ? part.q_plus : part.q_minus;
        for (std::size_t i = 0; i < side.size(); ++i)
            for (std::size_t j = i + 1; j < side.size(); ++j)
                if (!h.has_arc(side[i], side[j]))
                    h.add_arc(side[i], side[j]);
    }
    return h;
}

// ---------------------------------------------------------------------------
// acyclic interface digraphs

SubdivisionWitness no_dicycle_extract(const Digraph &d, const SuitableCollection &c, const Interface &in,
                                      const DiCycle &cyc, const SuitableOptions &opt)
{
    const auto pat = pattern_of(c.k);
    const int len = cyc.length();
    // label each arc of the cycle by the parts whose Q+ contains it
    auto parts_of_arc = [&](Vertex u, Vertex v) {
        std::vector<int> out;
        for (int p = 0; p < static_cast<int>(in.parts.size()); ++p) {
            const auto &side = in.parts[static_cast<std::size_t>(p)].q_plus;
            for (std::size_t i = 0; i + 1 < side.size(); ++i)
                if (side[i] == u && side[i + 1] == v)
                    out.push_back(p);
        }
        return out;
    };
    struct Run {
        int part;
        Vertex a, b;
    };
    std::vector<Run> runs;
    // start at an arc where the label changes, so runs do not wrap
    int start = 0;
    for (int i = 0; i < len; ++i) {
        auto here = parts_of_arc(cyc.at(i), cyc.at((i + 1) % len));
        auto prev = parts_of_arc(cyc.at((i - 1 + len) % len), cyc.at(i));
        std::vector<int> common;
        std::set_intersection(here.begin(), here.end(), prev.begin(), prev.end(), std::back_inserter(common));
        if (common.empty()) {
            start = i;
            break;
        }
    }
    std::vector<int> current;
    for (int s = 0; s < len; ++s) {
        int i = (start + s) % len;
        Vertex u = cyc.at(i), v = cyc.at((i + 1) % len);
        auto labels = parts_of_arc(u, v);
        std::vector<int> common;
        std::set_intersection(current.begin(), current.end(), labels.begin(), labels.end(),
                              std::back_inserter(common));
        if (!runs.empty() && !common.empty()) {
            runs.back().b = v;
            current = common;
            runs.back().part = current.front();
        } else {
            current = labels;
            runs.push_back({labels.empty() ? -1 : labels.front(), u, v});
        }
    }

    std::optional<SubdivisionWitness> built;
    std::vector<DiCycle> involved{cyc};
    bool usable = runs.size() >= 2;
    for (const auto &r : runs)
        usable = usable && r.part >= 0;
    if (usable) {
        // closed walk through the long complements B_r = C_r[b_r, a_r], last run first
        std::vector<Vertex> walk;
        for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
            const DiCycle &cr = member(c, in.parts[static_cast<std::size_t>(it->part)].cycle);
            auto seg = cr.segment(it->b, it->a);
            walk.insert(walk.end(), seg.vertices.begin(), seg.vertices.end() - 1);
            involved.push_back(cr);
        }
        // cycles of the walk, peeled off at repeated vertices
        std::vector<Vertex> stack;
        std::map<Vertex, std::size_t> pos;
        std::vector<DiCycle> pieces;
        for (std::size_t i = 0; i <= walk.size(); ++i) {
            Vertex v = walk[i % walk.size()];
            auto it = pos.find(v);
            if (it != pos.end()) {
                DiCycle piece{{stack.begin() + static_cast<long>(it->second), stack.end()}};
                for (std::size_t j = it->second; j < stack.size(); ++j)
                    pos.erase(stack[j]);
                stack.resize(it->second);
                if (piece.length() >= 2 && is_dicycle(d, piece))
                    pieces.push_back(std::move(piece));
            }
            if (i == walk.size())
                break;
            pos[v] = stack.size();
            stack.push_back(v);
        }
        for (const auto &cw : pieces) {
            std::vector<char> on = mask_of(d.order(), cw.vertices);
            for (const auto &ear : ears_along(cyc.vertices, true, on))
                if (auto w = ear_witness(d, pat, cw, ear)) {
                    built = w;
                    break;
                }
            if (built)
                break;
            for (const auto &other : involved)
                if (auto w = two_cycle_witness(d, pat, other, cw)) {
                    built = w;
                    break;
                }
            if (built)
                break;
        }
    }
    if (!built)
        built = ears_between(d, c.k, involved);
    std::vector<Vertex> local = cyc.vertices;
    for (const auto &x : involved)
        local.insert(local.end(), x.vertices.begin(), x.vertices.end());
    local.insert(local.end(), member(c, in.center).vertices.begin(), member(c, in.center).vertices.end());
    return finish(d, c.k, built, sorted_unique(std::move(local)), opt, "no-dicycle");
}

std::optional<SubdivisionWitness> check_acyclic_interface(const Digraph &d, const SuitableCollection &c,
                                                          const Interface &in, const SuitableOptions &opt)
{
    auto hp = interface_digraph(d.order(), in, c, true);
    if (auto cyc = shortest_directed_cycle(hp))
        return no_dicycle_extract(d, c, in, *cyc, opt);
    auto hm = interface_digraph(d.order(), in, c, false);
    if (auto cyc = shortest_directed_cycle(hm))
        return reverse_witness(
            no_dicycle_extract(d.reversed(), reversed(c), reverse_interface(in), cyc->reversed(), opt));
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// long plus-paths

namespace {
    struct Dist {
        int value;
        int part;
    };

    std::vector<Dist> dis_of(const SuitableCollection &c, const Interface &in, Vertex v)
    {
        std::vector<Dist> out;
        for (int p = 0; p < static_cast<int>(in.parts.size()); ++p) {
            const auto &part = in.parts[static_cast<std::size_t>(p)];
            const DiCycle &cj = member(c, part.cycle);
            if (!cj.contains(v))
                continue;
            int dist = cj.distance(part.shared.target(), v);
            if (dist >= 1 && dist <= 3 * c.k)
                out.push_back({dist, p});
        }
        return out;
    }

}

SubdivisionWitness plus_path_extract(const Digraph &d, const SuitableCollection &c, const Interface &in,
                                     const DiPath &path, const SuitableOptions &opt)
{
    const int k = c.k;
    const DiCycle &c1 = member(c, in.center);
    std::vector<std::vector<Dist>> dis;
    std::vector<int> mins, maxs;
    std::vector<std::vector<int>> sets;
    for (Vertex v : path.vertices) {
        auto dv = dis_of(c, in, v);
        if (dv.empty())
            throw PreconditionError("plus_path_extract: path leaves I+(C1)");
        std::vector<int> vals;
        for (auto x : dv)
            vals.push_back(x.value);
        mins.push_back(*std::min_element(vals.begin(), vals.end()));
        maxs.push_back(*std::max_element(vals.begin(), vals.end()));
        sets.push_back(vals);
        dis.push_back(std::move(dv));
    }

    std::vector<char> region = mask_of(d.order(), c1.vertices);
    auto conn = [&](Vertex u, Vertex v) -> MaybePath {
        if (c1.contains(u) && c1.contains(v))
            return c1.segment(u, v);
        return path_within(d, u, v, region);
    };
    auto pick = [&](int i, int value) {
        std::vector<int> out;
        for (auto x : dis[static_cast<std::size_t>(i)])
            if (x.value == value)
                out.push_back(x.part);
        return out;
    };

    std::optional<SubdivisionWitness> built;
    for (auto [a, b, f] : index_triples(mins, maxs, sets, 6 * k * k, 3 * k, k, 4000)) {
        Vertex va = path.vertices[static_cast<std::size_t>(a)], vb = path.vertices[static_cast<std::size_t>(b)],
               vf = path.vertices[static_cast<std::size_t>(f)];
        for (int j1 : pick(a, mins[static_cast<std::size_t>(a)]))
            for (int j2 : pick(b, mins[static_cast<std::size_t>(b)]))
                for (int j3 : pick(f, maxs[static_cast<std::size_t>(f)])) {
                    const auto &q1 = in.parts[static_cast<std::size_t>(j1)];
                    const auto &q2 = in.parts[static_cast<std::size_t>(j2)];
                    const auto &q3 = in.parts[static_cast<std::size_t>(j3)];
                    ThreePaths t{path, a, b, f, member(c, q1.cycle).segment(q1.shared.target(), va),
                                 member(c, q2.cycle).segment(q2.shared.target(), vb),
                                 member(c, q3.cycle).segment(vf, q3.shared.source())};
                    if ((built = three_path_cases(d, k, t, conn, region)))
                        goto done;
                }
    }
done:
    std::vector<Vertex> local = path.vertices;
    local.insert(local.end(), c1.vertices.begin(), c1.vertices.end());
    for (const auto &part : in.parts) {
        const auto &vs = member(c, part.cycle).vertices;
        local.insert(local.end(), vs.begin(), vs.end());
    }
    return finish(d, k, built, sorted_unique(std::move(local)), opt, "c+");
}

// ---------------------------------------------------------------------------
// rainbow colourings

namespace {
    /// Colours the fake-arc digraph of one side with fresh colours; a long
    /// Gallai-Roy dipath is turned into a witness.
    std::variant<std::vector<std::pair<Vertex, int>>, SubdivisionWitness>
    color_side(const Digraph &d, const SuitableCollection &c, const Interface &in, bool plus,
               const SuitableOptions &opt, int &used)
    {
        const auto &verts = plus ? in.plus : in.minus;
        used = 0;
        if (verts.empty())
            return std::vector<std::pair<Vertex, int>>{};
        auto fake = fake_arc_digraph(d.order(), in, c, plus);
        auto local = induced_subdigraph(fake, verts);
        auto gr = gallai_roy_dipath(local.graph);
        std::int64_t limit = opt.plus_path_limit > 0 ? opt.plus_path_limit : saturate(plus_path_threshold(c.k));
        if (gr.coloring.bound > limit) {
            // host walk with every fake arc replaced by its Q segment
            std::vector<Vertex> walk;
            for (std::size_t i = 0; i < gr.path.vertices.size(); ++i) {
                Vertex v = local.to_host[static_cast<std::size_t>(gr.path.vertices[i])];
                if (walk.empty()) {
                    walk.push_back(v);
                    continue;
                }
                Vertex u = walk.back();
                for (const auto &part : in.parts) {
                    const auto &side = plus ? part.q_plus : part.q_minus;
                    auto iu = std::find(side.begin(), side.end(), u), iv = std::find(side.begin(), side.end(), v);
                    if (iu != side.end() && iv != side.end() && iu < iv) {
                        walk.insert(walk.end(), iu + 1, iv + 1);
                        break;
                    }
                }
            }
            std::set<Vertex> seen(walk.begin(), walk.end());
            bool simple = seen.size() == walk.size();
            if (plus) {
                if (!simple) {
                    auto cyc = shortest_directed_cycle(interface_digraph(d.order(), in, c, true));
                    return no_dicycle_extract(d, c, in, *cyc, opt);
                }
                return plus_path_extract(d, c, in, DiPath{walk}, opt);
            }
            auto rin = reverse_interface(in);
            auto rd = d.reversed();
            auto rc = reversed(c);
            if (!simple) {
                auto cyc = shortest_directed_cycle(interface_digraph(d.order(), rin, rc, true));
                return reverse_witness(no_dicycle_extract(rd, rc, rin, *cyc, opt));
            }
            return reverse_witness(plus_path_extract(rd, rc, rin, DiPath{walk}.reversed(), opt));
        }
        std::vector<std::pair<Vertex, int>> out;
        for (std::size_t i = 0; i < verts.size(); ++i)
            out.push_back({local.to_host[i], static_cast<int>(gr.coloring.colors[i])});
        used = static_cast<int>(gr.coloring.bound);
        return out;
    }

    /// The `count` least colours not in `taken`.
    std::vector<Color> fresh_colors(const std::set<Color> &taken, int count)
    {
        std::vector<Color> out;
        for (Color x = 0; static_cast<int>(out.size()) < count; ++x)
            if (!taken.count(x))
                out.push_back(x);
        return out;
    }
}

bool windows_rainbow(const SuitableCollection &c, const Coloring &col)
{
    const int w = 7 * c.k + 1;
    for (const auto &cyc : c.cycles) {
        int len = cyc.length();
        int span = std::min(w, len);
        for (int i = 0; i < len; ++i) {
            std::set<Color> seen;
            for (int j = 0; j < span; ++j) {
                Color x = col.colors[static_cast<std::size_t>(cyc.at((i + j) % len))];
                if (x < 0 || !seen.insert(x).second)
                    return false;
            }
        }
    }
    return true;
}

std::variant<Coloring, SubdivisionWitness> rainbow_extend(const Digraph &d, const SuitableCollection &c, int center,
                                                          const Coloring &partial, const SuitableOptions &opt)
{
    if (center < 0 || center >= static_cast<int>(c.cycles.size()))
        throw PreconditionError("rainbow_extend: centre out of range");
    if (static_cast<int>(partial.colors.size()) != d.order())
        throw PreconditionError("rainbow_extend: partial colouring has the wrong size");
    const DiCycle &c1 = member(c, center);
    const int k = c.k, len = c1.length(), w = 7 * k + 1;
    if (len < w)
        throw PreconditionError("rainbow_extend: centre shorter than 7k+1");

    // coloured vertices of the union must sit on C1 inside one window
    std::vector<int> positions;
    std::set<Color> given;
    for (Vertex v : cycles_vertices(c, [&] {
             std::vector<int> all(c.cycles.size());
             for (std::size_t i = 0; i < all.size(); ++i)
                 all[i] = static_cast<int>(i);
             return all;
         }())) {
        Color x = partial.colors[static_cast<std::size_t>(v)];
        if (x < 0)
            continue;
        int pos = c1.index_of(v);
        if (pos < 0)
            throw PreconditionError("rainbow_extend: coloured vertex off the centre");
        if (!given.insert(x).second)
            throw PreconditionError("rainbow_extend: partial colouring is not rainbow");
        positions.push_back(pos);
    }
    std::sort(positions.begin(), positions.end());
    int start = 0;
    if (!positions.empty()) {
        int best_gap = -1;
        for (std::size_t i = 0; i < positions.size(); ++i) {
            int next = positions[(i + 1) % positions.size()];
            int gap = (next - positions[i] + len) % len;
            if (positions.size() == 1)
                gap = len;
            if (gap > best_gap) {
                best_gap = gap;
                start = next;
            }
        }
        if (len - best_gap > 7 * k)
            throw PreconditionError("rainbow_extend: coloured vertices do not fit in a subpath of length 7k");
    }

    auto built = build_interface(d, c, center, opt);
    if (auto *wit = std::get_if<SubdivisionWitness>(&built))
        return *wit;
    const Interface &in = std::get<Interface>(built);
    if (auto wit = check_acyclic_interface(d, c, in, opt))
        return *wit;

    Coloring out = partial;
    // C1: consecutive blocks of sizes >= 7k+1 coloured 0, 1, 2, ...
    int blocks = len / w, base = len / blocks, extra = len % blocks;
    int palette = base + (extra > 0 ? 1 : 0);
    std::vector<int> pattern(static_cast<std::size_t>(len));
    for (int b = 0, pos = 0; b < blocks; ++b) {
        int size = base + (b < extra ? 1 : 0);
        for (int i = 0; i < size; ++i)
            pattern[static_cast<std::size_t>(pos++)] = i;
    }
    std::map<int, Color> map;
    for (int i = 0; i < len; ++i) {
        Color x = partial.colors[static_cast<std::size_t>(c1.at((start + i) % len))];
        if (x >= 0)
            map[pattern[static_cast<std::size_t>(i)]] = x;
    }
    auto fresh = fresh_colors(given, palette);
    std::set<Color> c1_palette = given;
    for (int pc = 0, f = 0; pc < palette; ++pc)
        if (!map.count(pc)) {
            map[pc] = fresh[static_cast<std::size_t>(f++)];
            c1_palette.insert(map[pc]);
        }
    for (int i = 0; i < len; ++i)
        out.colors[static_cast<std::size_t>(c1.at((start + i) % len))] = map[pattern[static_cast<std::size_t>(i)]];

    std::set<Color> taken = c1_palette;
    for (bool plus : {true, false}) {
        int used = 0;
        auto side = color_side(d, c, in, plus, opt, used);
        if (auto *wit = std::get_if<SubdivisionWitness>(&side))
            return *wit;
        auto colors = fresh_colors(taken, used);
        for (auto [v, x] : std::get<std::vector<std::pair<Vertex, int>>>(side))
            out.colors[static_cast<std::size_t>(v)] = colors[static_cast<std::size_t>(x)];
        taken.insert(colors.begin(), colors.end());
    }
    Color top = 0;
    for (Color x : out.colors)
        top = std::max(top, x + 1);
    out.bound = std::max(out.bound, top);

    // postconditions
    SuitableCollection only{k, {c1}};
    if (!windows_rainbow(only, out))
        throw std::logic_error("rainbow_extend: a window of the centre is not rainbow");
    for (const auto &part : in.parts)
        if (!is_rainbow(out, part.q.vertices))
            throw std::logic_error("rainbow_extend: some Q_j is not rainbow");
    if (BigInt(static_cast<long long>(taken.size())) > compute_bounds(k).alpha)
        throw std::logic_error("rainbow_extend: more than alpha_k colours");
    return out;
}

std::variant<Coloring, SubdivisionWitness> color_union(const Digraph &d, const SuitableCollection &c,
                                                       const SuitableOptions &opt)
{
    const int n = d.order();
    Coloring col{std::vector<Color>(static_cast<std::size_t>(n), uncoloured), 0};
    auto comp = cycle_components(c.cycles);
    struct Task {
        std::vector<int> members;
        int center;
    };
    std::vector<Task> tasks;
    {
        std::map<int, std::vector<int>> groups;
        for (int i = 0; i < static_cast<int>(c.cycles.size()); ++i)
            groups[comp[static_cast<std::size_t>(i)]].push_back(i);
        for (auto it = groups.rbegin(); it != groups.rend(); ++it)
            tasks.push_back({it->second, it->second.front()});
    }
    while (!tasks.empty()) {
        Task task = std::move(tasks.back());
        tasks.pop_back();
        SuitableCollection sub_c{c.k, {}};
        int center_local = 0;
        for (int i : task.members) {
            if (i == task.center)
                center_local = static_cast<int>(sub_c.cycles.size());
            sub_c.cycles.push_back(member(c, i));
        }
        auto r = rainbow_extend(d, sub_c, center_local, col, opt);
        if (auto *w = std::get_if<SubdivisionWitness>(&r))
            return *w;
        col = std::get<Coloring>(r);

        // components of the uncoloured part of the union, along member arcs
        auto verts = cycles_vertices(c, task.members);
        std::map<Vertex, Vertex> parent;
        std::function<Vertex(Vertex)> find = [&](Vertex v) {
            while (parent[v] != v)
                v = parent[v] = parent[parent[v]];
            return v;
        };
        for (Vertex v : verts)
            if (col.colors[static_cast<std::size_t>(v)] < 0)
                parent[v] = v;
        for (int i : task.members) {
            const DiCycle &cyc = member(c, i);
            for (int j = 0; j < cyc.length(); ++j) {
                Vertex u = cyc.at(j), v = cyc.at((j + 1) % cyc.length());
                if (parent.count(u) && parent.count(v))
                    parent[find(u)] = find(v);
            }
        }
        std::map<Vertex, std::vector<Vertex>> comps;
        for (auto &[v, p] : parent)
            comps[find(v)].push_back(v);
        for (auto &[root, area] : comps) {
            std::set<Vertex> in_area(area.begin(), area.end());
            std::vector<int> touching;
            for (int i : task.members) {
                const auto &vs = member(c, i).vertices;
                if (std::any_of(vs.begin(), vs.end(), [&](Vertex v) { return in_area.count(v) > 0; }))
                    touching.push_back(i);
            }
            std::vector<Vertex> seeded;
            for (Vertex v : cycles_vertices(c, touching))
                if (col.colors[static_cast<std::size_t>(v)] >= 0)
                    seeded.push_back(v);
            int holder = -1;
            for (int i : touching)
                if (std::all_of(seeded.begin(), seeded.end(), [&](Vertex v) { return member(c, i).contains(v); })) {
                    holder = i;
                    break;
                }
            if (holder < 0) {
                auto local = cycles_vertices(c, touching);
                auto extra = member(c, task.center).vertices;
                local.insert(local.end(), extra.begin(), extra.end());
                auto built = ears_between(d, c.k, [&] {
                    std::vector<DiCycle> cs;
                    for (int i : touching)
                        cs.push_back(member(c, i));
                    return cs;
                }());
                return finish(d, c.k, built, sorted_unique(std::move(local)), opt, "A");
            }
            tasks.push_back({touching, holder});
        }
    }
    if (!windows_rainbow(c, col)) {
        std::vector<int> all(c.cycles.size());
        for (std::size_t i = 0; i < all.size(); ++i)
            all[i] = static_cast<int>(i);
        return finish(d, c.k, std::nullopt, cycles_vertices(c, all), opt, "col-union");
    }
    return col;
}

} // namespace spindle
