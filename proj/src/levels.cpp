#include "extract_util.hpp"

#include <spindle/extremal.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace spindle {

using namespace detail;

namespace {
    const DiCycle &member(const SuitableCollection &c, int i) { return c.cycles.at(static_cast<std::size_t>(i)); }
    std::size_t at(int i) { return static_cast<std::size_t>(i); }

    bool meet(const DiCycle &a, const DiCycle &b)
    {
        std::set<Vertex> s(a.vertices.begin(), a.vertices.end());
        return std::any_of(b.vertices.begin(), b.vertices.end(), [&](Vertex v) { return s.count(v) > 0; });
    }

    int dist_after(const SuitableCollection &c, const LevelDecomposition &ld, int l, Vertex v)
    {
        const DiCycle &cl = member(c, l);
        if (l == ld.root || !cl.contains(v))
            return -1;
        return cl.distance(ld.t_father[at(l)], v);
    }

    int dist_before(const SuitableCollection &c, const LevelDecomposition &ld, int l, Vertex v)
    {
        const DiCycle &cl = member(c, l);
        if (l == ld.root || !cl.contains(v))
            return -1;
        return cl.distance(v, ld.s_father[at(l)]);
    }

    /// members of level `lev` through v
    std::vector<int> level_cycles_at(const SuitableCollection &c, const LevelDecomposition &ld, int lev, Vertex v)
    {
        std::vector<int> out;
        if (lev < 0 || lev >= static_cast<int>(ld.levels.size()))
            return out;
        for (int l : ld.levels[at(lev)])
            if (member(c, l).contains(v))
                out.push_back(l);
        return out;
    }

    std::vector<char> lower_region(const LevelDecomposition &ld, int n, int level)
    {
        std::vector<char> m(static_cast<std::size_t>(n), 0);
        for (Vertex v : ld.vertices)
            if (ld.vertex_level[at(v)] < level)
                m[at(v)] = 1;
        return m;
    }

    std::vector<char> without(std::vector<char> m, const DiCycle &a)
    {
        for (Vertex v : a.vertices)
            m[at(v)] = 0;
        return m;
    }
}

bool in_p_plus(const SuitableCollection &c, const LevelDecomposition &ld, int l, Vertex v)
{
    int x = dist_after(c, ld, l, v);
    return x >= 1 && x <= c.k;
}
bool in_r_plus(const SuitableCollection &c, const LevelDecomposition &ld, int l, Vertex v)
{
    int x = dist_after(c, ld, l, v);
    return x >= 1 && x <= 2 * c.k;
}
bool in_p_minus(const SuitableCollection &c, const LevelDecomposition &ld, int l, Vertex v)
{
    int x = dist_before(c, ld, l, v);
    return x >= 1 && x <= c.k;
}
bool in_r_minus(const SuitableCollection &c, const LevelDecomposition &ld, int l, Vertex v)
{
    int x = dist_before(c, ld, l, v);
    return x >= 1 && x <= 2 * c.k;
}

int arc_class(const LevelDecomposition &ld, int k, Vertex u, Vertex v)
{
    int a = ld.vertex_level[at(u)], b = ld.vertex_level[at(v)];
    if (a < 0 || b < 0)
        throw PreconditionError("arc_class: vertex outside the component");
    int gap = std::abs(a - b);
    return gap == 0 ? 0 : gap < k ? 1 : 2;
}

LevelDecomposition reversed(const LevelDecomposition &ld)
{
    LevelDecomposition r = ld;
    std::swap(r.s_father, r.t_father);
    std::swap(r.p_plus, r.p_minus);
    std::swap(r.r_plus, r.r_minus);
    for (Vertex v : r.vertices)
        if (r.vertex_level[at(v)] >= 1 && (r.side[at(v)] == 1 || r.side[at(v)] == 2))
            r.side[at(v)] = static_cast<char>(3 - r.side[at(v)]);
    return r;
}

// ---------------------------------------------------------------------------
// a level vertex on the wrong side of both members

namespace {
    std::optional<SubdivisionWitness> rpos_candidates(const Digraph &d, const SuitableCollection &c,
                                                      const LevelDecomposition &ld, int l, int m)
    {
        const auto pat = pattern_of(c.k);
        const int level = ld.cycle_level[at(l)];
        auto low = lower_region(ld, d.order(), level);
        for (auto [x, y] : {std::pair{l, m}, std::pair{m, l}}) {
            const DiCycle &cx = member(c, x), &cy = member(c, y);
            auto pxy = common_subpath(cx, cy);
            if (!pxy || pxy->vertices.empty())
                continue;
            Vertex txy = pxy->target(), sx = ld.s_father[at(x)], sy = ld.s_father[at(y)];
            for (const auto &mask : {without(without(low, cx), cy), low}) {
                MaybePath p = path_within(d, sx, sy, mask);
                if (auto w = triple(d, pat, join({cx.segment(txy, sx), p}), cy.segment(txy, sy), cy.segment(sy, txy)))
                    return w;
            }
        }
        return std::nullopt;
    }

    SubdivisionWitness rpos_extract(const Digraph &d, const SuitableCollection &c, const LevelDecomposition &ld,
                                    int l, int m, const SuitableOptions &opt)
    {
        auto built = rpos_candidates(d, c, ld, l, m);
        if (!built)
            if (auto w = rpos_candidates(d.reversed(), reversed(c), reversed(ld), l, m))
                built = reverse_witness(*w);
        return finish(d, c.k, built, ld.vertices, opt, "Rpos");
    }
}

std::variant<LevelDecomposition, SubdivisionWitness> level_decompose(const Digraph &d, const SuitableCollection &c,
                                                                     const std::vector<int> &members, int root,
                                                                     const SuitableOptions &opt)
{
    const int m = static_cast<int>(c.cycles.size()), n = d.order(), k = c.k;
    LevelDecomposition ld;
    ld.cycles = members;
    std::sort(ld.cycles.begin(), ld.cycles.end());
    for (int i : ld.cycles)
        if (i < 0 || i >= m)
            throw PreconditionError("level_decompose: member index out of range");
    if (!std::binary_search(ld.cycles.begin(), ld.cycles.end(), root))
        throw PreconditionError("level_decompose: root is not a member of the component");
    ld.root = root;
    ld.father.assign(at(m), -1);
    ld.cycle_level.assign(at(m), -1);
    ld.cycle_level[at(root)] = 0;
    ld.levels = {{root}};
    std::size_t placed = 1;
    while (placed < ld.cycles.size()) {
        std::vector<int> next;
        for (int x : ld.cycles) {
            if (ld.cycle_level[at(x)] >= 0)
                continue;
            for (int f : ld.levels.back())
                if (meet(member(c, x), member(c, f))) {
                    ld.father[at(x)] = f;
                    next.push_back(x);
                    break;
                }
        }
        if (next.empty())
            throw PreconditionError("level_decompose: members do not form a component");
        for (int x : next)
            ld.cycle_level[at(x)] = static_cast<int>(ld.levels.size());
        placed += next.size();
        ld.levels.push_back(std::move(next));
    }

    ld.vertex_level.assign(at(n), -1);
    for (int x : ld.cycles)
        for (Vertex v : member(c, x).vertices) {
            int &lv = ld.vertex_level[at(v)];
            lv = lv < 0 ? ld.cycle_level[at(x)] : std::min(lv, ld.cycle_level[at(x)]);
        }
    ld.vertices = cycles_vertices(c, ld.cycles);

    for (auto *vec : {&ld.s_father, &ld.t_father, &ld.p_plus, &ld.r_plus, &ld.p_minus, &ld.r_minus})
        vec->assign(at(m), -1);
    for (int x : ld.cycles) {
        if (x == root)
            continue;
        const DiCycle &cx = member(c, x);
        auto p = common_subpath(cx, member(c, ld.father[at(x)]));
        if (!p || p->vertices.empty())
            throw PreconditionError("level_decompose: member and father do not share a subpath");
        Vertex s = p->source(), t = p->target();
        ld.s_father[at(x)] = s;
        ld.t_father[at(x)] = t;
        ld.p_plus[at(x)] = cx.step(t, k);
        ld.r_plus[at(x)] = cx.step(t, 2 * k);
        ld.p_minus[at(x)] = cx.step(s, -k);
        ld.r_minus[at(x)] = cx.step(s, -2 * k);
    }

    ld.side.assign(at(n), 0);
    for (Vertex v : ld.vertices) {
        int lev = ld.vertex_level[at(v)];
        if (lev == 0) {
            ld.side[at(v)] = 1;
            continue;
        }
        auto here = level_cycles_at(c, ld, lev, v);
        for (std::size_t a = 0; a < here.size(); ++a)
            for (std::size_t b = a + 1; b < here.size(); ++b) {
                int l = here[a], mm = here[b];
                bool ok = (in_p_plus(c, ld, l, v) && in_p_plus(c, ld, mm, v)) ||
                          (in_p_minus(c, ld, l, v) && in_p_minus(c, ld, mm, v));
                if (!ok)
                    return rpos_extract(d, c, ld, l, mm, opt);
            }
        bool plus = std::all_of(here.begin(), here.end(), [&](int l) { return in_r_plus(c, ld, l, v); });
        bool minus = std::all_of(here.begin(), here.end(), [&](int l) { return in_r_minus(c, ld, l, v); });
        ld.side[at(v)] = plus ? 1 : minus ? 2 : 3;
    }
    return ld;
}

// ---------------------------------------------------------------------------
// far-level arcs

namespace {
    struct SideColoring {
        /// per host vertex, -1 outside the coloured set
        std::vector<Color> colors;
        Color used = 0;
    };

    /// Attachment vertices of member l: those also on another member.
    std::vector<Vertex> attachments(const SuitableCollection &c, const LevelDecomposition &ld, int l)
    {
        std::vector<Vertex> out;
        for (Vertex v : member(c, l).vertices)
            for (int o : ld.cycles)
                if (o != l && member(c, o).contains(v)) {
                    out.push_back(v);
                    break;
                }
        return out;
    }

    /// An arc a->b closing an ear of a member through the rest of the
    /// component.
    std::optional<SubdivisionWitness> arc_ear_candidates(const Digraph &d, const SuitableCollection &c,
                                                         const LevelDecomposition &ld, Vertex a, Vertex b)
    {
        const auto pat = pattern_of(c.k);
        auto all = mask_of(d.order(), ld.vertices);
        for (int l : ld.cycles) {
            const DiCycle &cl = member(c, l);
            bool has_a = cl.contains(a), has_b = cl.contains(b);
            if (has_a && has_b) {
                if (auto w = ear_witness(d, pat, cl, DiPath{{a, b}}))
                    return w;
                continue;
            }
            if (!has_a && !has_b)
                continue;
            for (Vertex t : attachments(c, ld, l)) {
                MaybePath ear;
                if (has_b && t != b)
                    ear = join({path_within(d, t, a, without(all, cl)), arc_path(d, a, b)});
                else if (has_a && t != a)
                    ear = join({arc_path(d, a, b), path_within(d, b, t, without(all, cl))});
                if (ear)
                    if (auto w = ear_witness(d, pat, cl, *ear))
                        return w;
            }
        }
        return std::nullopt;
    }

    std::optional<SubdivisionWitness> overflow_candidates(const Digraph &d, const SuitableCollection &c,
                                                          const LevelDecomposition &ld, Vertex y,
                                                          const std::vector<Vertex> &outs)
    {
        const auto pat = pattern_of(c.k);
        auto all = mask_of(d.order(), ld.vertices);
        int tries = 0;
        for (Vertex xa : outs)
            for (Vertex xb : outs) {
                if (xa == xb || ++tries > 400)
                    continue;
                MaybePath p = path_within(d, xa, y, all);
                if (!p)
                    continue;
                for (int l : ld.cycles) {
                    const DiCycle &cl = member(c, l);
                    if (!cl.contains(xb))
                        continue;
                    for (Vertex z : p->vertices)
                        if (z != y && z != xb && cl.contains(z))
                            if (auto w = triple(d, pat, join({arc_path(d, y, xa), sub(*p, xa, z)}),
                                                join({arc_path(d, y, xb), cl.segment(xb, z)}), sub(*p, z, y)))
                                return w;
                }
            }
        return std::nullopt;
    }

    /// Colours X+ and X' against the far-level arcs.
    std::variant<SideColoring, SubdivisionWitness> color_far_side(const Digraph &d, const SuitableCollection &c,
                                                                  const LevelDecomposition &ld,
                                                                  const SuitableOptions &opt)
    {
        const int n = d.order(), k = c.k;
        std::vector<Vertex> set;
        for (Vertex v : ld.vertices)
            if (ld.side[at(v)] == 1 || ld.side[at(v)] == 3)
                set.push_back(v);
        Digraph h(n);
        for (Vertex u : set)
            for (Vertex v : d.out(u))
                if ((ld.side[at(v)] == 1 || ld.side[at(v)] == 3) && arc_class(ld, k, u, v) == 2)
                    h.add_arc(u, v);
        auto local = induced_subdigraph(h, set);
        const Digraph &g = local.graph;

        auto fallback = [&](const std::optional<SubdivisionWitness> &built,
                            const std::string &what) -> std::variant<SideColoring, SubdivisionWitness> {
            if (auto w = try_finish(d, k, built, ld.vertices, opt, what))
                return *w;
            note(opt, what + ":colouring");
            auto col = dsatur_coloring(g);
            SideColoring out{std::vector<Color>(at(n), -1), col.bound};
            for (std::size_t i = 0; i < set.size(); ++i)
                out.colors[at(local.to_host[i])] = col.colors[i];
            return out;
        };

        if (auto cyc = shortest_directed_cycle(g)) {
            std::optional<SubdivisionWitness> built;
            for (int i = 0; i < cyc->length() && !built; ++i)
                built = arc_ear_candidates(d, c, ld, local.to_host[at(cyc->at(i))],
                                           local.to_host[at(cyc->at((i + 1) % cyc->length()))]);
            return fallback(built, "D2-cycle");
        }
        for (int v = 0; v < g.order(); ++v)
            if (g.out_degree(v) > 2 * k * k) {
                std::vector<Vertex> outs;
                for (Vertex x : g.out(v))
                    outs.push_back(local.to_host[at(x)]);
                auto built = overflow_candidates(d, c, ld, local.to_host[at(v)], outs);
                return fallback(built, "D2");
            }

        // sinks first: every out-neighbour is coloured before its tail
        std::vector<int> order;
        std::vector<int> outdeg(at(g.order()));
        for (int v = 0; v < g.order(); ++v)
            if ((outdeg[at(v)] = g.out_degree(v)) == 0)
                order.push_back(v);
        for (std::size_t i = 0; i < order.size(); ++i)
            for (Vertex u : g.in(order[i]))
                if (--outdeg[at(u)] == 0)
                    order.push_back(u);
        std::vector<Color> col(at(g.order()), -1);
        Color used = 0;
        for (int v : order) {
            std::set<Color> blocked;
            for (Vertex x : g.out(v))
                blocked.insert(col[at(x)]);
            Color x = 0;
            while (blocked.count(x))
                ++x;
            col[at(v)] = x;
            used = std::max(used, x + 1);
        }
        SideColoring out{std::vector<Color>(at(n), -1), used};
        for (std::size_t i = 0; i < set.size(); ++i)
            out.colors[at(local.to_host[i])] = col[i];
        return out;
    }
}

// ---------------------------------------------------------------------------
// same-level classes

namespace {
    std::optional<SubdivisionWitness> xprime_candidates(const Digraph &d, const SuitableCollection &c,
                                                        const LevelDecomposition &ld, Vertex x, Vertex y)
    {
        const auto pat = pattern_of(c.k);
        int lev = ld.vertex_level[at(x)];
        auto low = lower_region(ld, d.order(), lev);
        auto xs = level_cycles_at(c, ld, lev, x), ys = level_cycles_at(c, ld, lev, y);
        for (int l : xs)
            if (member(c, l).contains(y))
                if (auto w = ear_witness(d, pat, member(c, l), DiPath{{x, y}}))
                    return w;
        for (int l : xs)
            for (int m : ys) {
                if (l == m)
                    continue;
                const DiCycle &cl = member(c, l), &cm = member(c, m);
                auto p = common_subpath(cl, cm);
                if (p && !p->vertices.empty()) {
                    for (Vertex s : {p->source(), p->target()})
                        if (auto w = triple(d, pat, cl.segment(x, s), join({arc_path(d, x, y), cm.segment(y, s)}),
                                            cl.segment(s, x)))
                            return w;
                    continue;
                }
                if (l == ld.root || m == ld.root)
                    continue;
                Vertex sl = ld.s_father[at(l)], sm = ld.s_father[at(m)];
                MaybePath link = path_within(d, sm, sl, without(without(low, cl), cm));
                if (auto w = triple(d, pat, cl.segment(x, sl), join({arc_path(d, x, y), cm.segment(y, sm), link}),
                                    cl.segment(sl, x)))
                    return w;
            }
        return std::nullopt;
    }

    std::optional<SubdivisionWitness> level_path_candidates(const Digraph &d, const SuitableCollection &c,
                                                            const LevelDecomposition &ld, const DiPath &path)
    {
        const int k = c.k;
        const int lev = ld.vertex_level[at(path.source())];
        if (lev <= 0)
            return std::nullopt;
        std::vector<int> mins, maxs;
        std::vector<std::vector<int>> sets;
        std::vector<std::vector<std::pair<int, int>>> lens;
        for (Vertex v : path.vertices) {
            std::vector<std::pair<int, int>> lv;
            for (int l : level_cycles_at(c, ld, lev, v)) {
                int x = dist_after(c, ld, l, v);
                if (x >= 1 && x <= 2 * k)
                    lv.push_back({x, l});
            }
            if (lv.empty())
                return std::nullopt;
            std::vector<int> vals;
            for (auto [x, l] : lv)
                vals.push_back(x);
            mins.push_back(*std::min_element(vals.begin(), vals.end()));
            maxs.push_back(*std::max_element(vals.begin(), vals.end()));
            sets.push_back(vals);
            lens.push_back(std::move(lv));
        }
        auto region = lower_region(ld, d.order(), lev);
        auto conn = [&](Vertex u, Vertex v) { return path_within(d, u, v, region); };
        auto pick = [&](int i, int value) {
            std::vector<int> out;
            for (auto [x, l] : lens[at(i)])
                if (x == value)
                    out.push_back(l);
            return out;
        };
        for (auto [a, b, f] : index_triples(mins, maxs, sets, 4 * k * k, 2 * k, k, 4000)) {
            Vertex va = path.vertices[at(a)], vb = path.vertices[at(b)], vf = path.vertices[at(f)];
            for (int j1 : pick(a, mins[at(a)]))
                for (int j2 : pick(b, mins[at(b)]))
                    for (int j3 : pick(f, maxs[at(f)])) {
                        ThreePaths t{path,
                                     a,
                                     b,
                                     f,
                                     member(c, j1).segment(ld.t_father[at(j1)], va),
                                     member(c, j2).segment(ld.t_father[at(j2)], vb),
                                     member(c, j3).segment(vf, ld.s_father[at(j3)])};
                        if (auto w = three_path_cases(d, k, t, conn, region))
                            return w;
                    }
        }
        return std::nullopt;
    }

    /// Gallai-Roy colouring of every class of X+ under the same-level arcs.
    std::variant<SideColoring, SubdivisionWitness> color_level_side(const Digraph &d, const SuitableCollection &c,
                                                                    const LevelDecomposition &ld, const Coloring &phi,
                                                                    const SuitableOptions &opt)
    {
        const int n = d.order(), k = c.k;
        std::int64_t limit = opt.level_path_limit > 0 ? opt.level_path_limit : saturate(level_path_threshold(k));
        std::map<Color, std::vector<Vertex>> classes;
        for (Vertex v : ld.vertices)
            if (ld.side[at(v)] == 1)
                classes[phi.colors[at(v)]].push_back(v);
        SideColoring out{std::vector<Color>(at(n), -1), 0};
        for (const auto &[cls, set] : classes) {
            Digraph h(n);
            for (Vertex u : set)
                for (Vertex v : d.out(u))
                    if (ld.side[at(v)] == 1 && phi.colors[at(v)] == cls && arc_class(ld, k, u, v) == 0)
                        h.add_arc(u, v);
            auto local = induced_subdigraph(h, set);
            auto gr = gallai_roy_dipath(local.graph);
            if (gr.coloring.bound > limit) {
                DiPath host;
                for (Vertex v : gr.path.vertices)
                    host.vertices.push_back(local.to_host[at(v)]);
                auto built = level_path_candidates(d, c, ld, host);
                if (auto w = try_finish(d, k, built, ld.vertices, opt, "D0"))
                    return *w;
                note(opt, "D0:colouring");
            }
            for (std::size_t i = 0; i < set.size(); ++i)
                out.colors[at(local.to_host[i])] = gr.coloring.colors[i];
            out.used = std::max(out.used, gr.coloring.bound);
        }
        return out;
    }
}

std::variant<Coloring, SubdivisionWitness> color_component_suitable(const Digraph &d, const SuitableCollection &c,
                                                                    const std::vector<int> &members,
                                                                    const SuitableOptions &opt)
{
    if (members.empty())
        throw PreconditionError("color_component_suitable: empty component");
    const int n = d.order(), k = c.k;
    std::vector<int> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    auto lr = level_decompose(d, c, sorted, sorted.front(), opt);
    if (auto *w = std::get_if<SubdivisionWitness>(&lr))
        return *w;
    const LevelDecomposition &ld = std::get<LevelDecomposition>(lr);

    SuitableCollection part{k, {}};
    for (int i : sorted)
        part.cycles.push_back(member(c, i));
    auto ur = color_union(d, part, opt);
    if (auto *w = std::get_if<SubdivisionWitness>(&ur))
        return *w;
    const Coloring &phi = std::get<Coloring>(ur);

    const Digraph dr = d.reversed();
    const SuitableCollection cr = reversed(c);
    const LevelDecomposition ldr = reversed(ld);

    // far levels: X+ and X' against the forward structure, X- against the reversed one
    auto fa = color_far_side(d, c, ld, opt);
    if (auto *w = std::get_if<SubdivisionWitness>(&fa))
        return *w;
    auto fb = color_far_side(dr, cr, ldr, opt);
    if (auto *w = std::get_if<SubdivisionWitness>(&fb))
        return reverse_witness(*w);
    const auto &far_a = std::get<SideColoring>(fa), &far_b = std::get<SideColoring>(fb);

    // same level
    auto la = color_level_side(d, c, ld, phi, opt);
    if (auto *w = std::get_if<SubdivisionWitness>(&la))
        return *w;
    auto lb = color_level_side(dr, cr, ldr, phi, opt);
    if (auto *w = std::get_if<SubdivisionWitness>(&lb))
        return reverse_witness(*w);
    const auto &lev_a = std::get<SideColoring>(la), &lev_b = std::get<SideColoring>(lb);

    // X'(c) must be independent under same-level arcs
    std::vector<Color> prime(at(n), 0);
    Color prime_used = 1;
    {
        std::map<Color, std::vector<Vertex>> classes;
        for (Vertex v : ld.vertices)
            if (ld.side[at(v)] == 3)
                classes[phi.colors[at(v)]].push_back(v);
        for (const auto &[cls, set] : classes) {
            Digraph h(n);
            for (Vertex u : set)
                for (Vertex v : d.out(u))
                    if (ld.side[at(v)] == 3 && phi.colors[at(v)] == cls && arc_class(ld, k, u, v) == 0)
                        h.add_arc(u, v);
            if (h.size() == 0)
                continue;
            auto arcs = h.arcs();
            std::optional<SubdivisionWitness> built;
            for (const auto &a : arcs) {
                if ((built = xprime_candidates(d, c, ld, a.tail, a.head)))
                    break;
                if (auto w = xprime_candidates(dr, cr, ldr, a.head, a.tail)) {
                    built = reverse_witness(*w);
                    break;
                }
            }
            if (auto w = try_finish(d, k, built, ld.vertices, opt, "X'"))
                return *w;
            note(opt, "X':colouring");
            auto local = induced_subdigraph(h, set);
            auto col = dsatur_coloring(local.graph);
            for (std::size_t i = 0; i < set.size(); ++i)
                prime[at(local.to_host[i])] = col.colors[i];
            prime_used = std::max(prime_used, col.bound);
        }
    }

    const std::size_t size = ld.vertices.size();
    const Color span0 = lev_a.used + lev_b.used + prime_used;
    Coloring c0{std::vector<Color>(size), std::max<Color>(phi.bound, 1) * span0};
    Coloring c1{std::vector<Color>(size), k};
    Coloring c2{std::vector<Color>(size), std::max<Color>(far_a.used + far_b.used, 1)};
    for (std::size_t i = 0; i < size; ++i) {
        Vertex v = ld.vertices[i];
        char side = ld.side[at(v)];
        Color inner = side == 1   ? lev_a.colors[at(v)]
                      : side == 2 ? lev_a.used + lev_b.colors[at(v)]
                                  : lev_a.used + lev_b.used + prime[at(v)];
        c0.colors[i] = phi.colors[at(v)] * span0 + inner;
        c1.colors[i] = ld.vertex_level[at(v)] % k;
        c2.colors[i] = side == 2 ? far_a.used + far_b.colors[at(v)] : far_a.colors[at(v)];
    }
    Coloring result = product_coloring(product_coloring(c0, c1), c2);

    auto induced = induced_subdigraph(d, ld.vertices);
    if (!is_proper(induced.graph, result)) {
        if (auto w = try_finish(d, k, std::nullopt, ld.vertices, opt, "component"))
            return *w;
        note(opt, "component:colouring");
        result = dsatur_coloring(induced.graph);
    }
    if (BigInt(result.bound) > compute_bounds(k).beta)
        throw std::logic_error("color_component_suitable: more than beta_k colours");
    return result;
}

} // namespace spindle
