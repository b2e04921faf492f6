#include <spindle/extremal.hpp>
#include <spindle/nice.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace spindle {

std::vector<int> cycle_components(const std::vector<DiCycle> &cycles)
{
    const std::size_t m = cycles.size();
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
        while (parent[a] != a)
            a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::size_t i = 0; i < m; ++i) {
        std::set<Vertex> vi(cycles[i].vertices.begin(), cycles[i].vertices.end());
        for (std::size_t j = i + 1; j < m; ++j)
            for (Vertex v : cycles[j].vertices)
                if (vi.count(v)) {
                    auto a = find(i), b = find(j);
                    parent[std::max(a, b)] = std::min(a, b);
                    break;
                }
    }
    std::vector<int> label(m, -1), of_root(m, -1);
    int next = 0;
    for (std::size_t i = 0; i < m; ++i) {
        auto r = find(i);
        if (of_root[r] < 0)
            of_root[r] = next++;
        label[i] = of_root[r];
    }
    return label;
}

NiceCollection make_nice_collection(int k, std::vector<DiCycle> cycles)
{
    NiceCollection c{k, std::move(cycles), {}};
    c.component_of = cycle_components(c.cycles);
    return c;
}

std::vector<std::vector<int>> component_members(const NiceCollection &c)
{
    std::vector<std::vector<int>> members;
    for (std::size_t i = 0; i < c.cycles.size(); ++i) {
        auto comp = static_cast<std::size_t>(c.component_of[i]);
        if (members.size() <= comp)
            members.resize(comp + 1);
        members[comp].push_back(static_cast<int>(i));
    }
    return members;
}

std::vector<Vertex> union_vertices(const std::vector<DiCycle> &cycles)
{
    std::set<Vertex> s;
    for (const auto &c : cycles)
        s.insert(c.vertices.begin(), c.vertices.end());
    return {s.begin(), s.end()};
}

Digraph union_digraph(int n, const std::vector<DiCycle> &cycles)
{
    Digraph u(n);
    for (const auto &c : cycles)
        for (int i = 0; i < c.length(); ++i)
            if (!u.has_arc(c.at(i), c.at(i + 1)))
                u.add_arc(c.at(i), c.at(i + 1));
    return u;
}

bool validate_nice(const Digraph &d, const NiceCollection &c)
{
    if (c.component_of.size() != c.cycles.size())
        return false;
    for (const auto &cyc : c.cycles)
        if (!is_dicycle(d, cyc) || cyc.length() < 2 * c.k - 2)
            return false;
    for (std::size_t i = 0; i < c.cycles.size(); ++i)
        for (std::size_t j = i + 1; j < c.cycles.size(); ++j) {
            int shared = 0;
            for (Vertex v : c.cycles[j].vertices)
                shared += c.cycles[i].contains(v);
            if (shared > 1)
                return false;
        }
    // same partition as the intersection graph
    auto fresh = cycle_components(c.cycles);
    for (std::size_t i = 0; i < c.cycles.size(); ++i)
        for (std::size_t j = 0; j < c.cycles.size(); ++j)
            if ((fresh[i] == fresh[j]) != (c.component_of[i] == c.component_of[j]))
                return false;
    return true;
}

namespace {
    std::optional<SubdivisionWitness> checked(const Digraph &d, const BispindlePattern &pat, SubdivisionWitness w)
    {
        if (verify_witness(d, pat, w))
            return w;
        return std::nullopt;
    }

    /// Bounded search on a vertex set, then on the whole digraph.
    std::optional<SubdivisionWitness> search_fallback(const Digraph &d, const std::vector<Vertex> &local,
                                                      const BispindlePattern &pat, const SearchOptions &opt)
    {
        if (auto w = find_subdivision_within(d, local, pat, opt))
            return w;
        if (static_cast<int>(local.size()) < d.order())
            if (auto r = find_subdivision(d, pat, opt); r.witness)
                return r.witness;
        return std::nullopt;
    }

    std::vector<Vertex> merged(std::vector<Vertex> a, const std::vector<Vertex> &b)
    {
        a.insert(a.end(), b.begin(), b.end());
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        return a;
    }
}

SubdivisionWitness headphone_extract(const Digraph &d, const std::vector<DiCycle> &s, const DiPath &p, int k,
                                     const SearchOptions &opt)
{
    if (k < 3)
        throw PreconditionError("headphone_extract: k must be at least 3");
    if (p.vertices.size() < 2 || !is_dipath(d, p))
        throw PreconditionError("headphone_extract: p must be a dipath of length >= 1");
    const int n = d.order();
    Digraph u = union_digraph(n, s);
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
        if (u.has_arc(p.vertices[i], p.vertices[i + 1]))
            throw PreconditionError("headphone_extract: p uses an arc of the component");
    std::vector<int> from, to;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i].contains(p.source()))
            from.push_back(static_cast<int>(i));
        if (s[i].contains(p.target()))
            to.push_back(static_cast<int>(i));
    }
    bool distinct = false;
    for (int a : from)
        for (int b : to)
            distinct |= a != b;
    if (!distinct)
        throw PreconditionError("headphone_extract: p must join two different cycles of the component");

    const auto pat = BispindlePattern::b(k, 1, 1);
    std::vector<char> p_inner(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i)
        p_inner[static_cast<std::size_t>(p.vertices[i])] = 1;

    for (int a : from)
        for (int b : to) {
            if (a == b)
                continue;
            const DiCycle &c = s[static_cast<std::size_t>(a)], &c2 = s[static_cast<std::size_t>(b)];
            // Q runs from C' to C inside the union; first plain, then avoiding P's ends and interior
            std::vector<std::optional<DiPath>> qs;
            {
                std::vector<char> target(static_cast<std::size_t>(n), 0);
                for (Vertex v : c.vertices)
                    target[static_cast<std::size_t>(v)] = 1;
                qs.push_back(shortest_path(u, c2.vertices, target));
                std::vector<Vertex> src;
                for (Vertex v : c2.vertices)
                    if (v != p.target())
                        src.push_back(v);
                target[static_cast<std::size_t>(p.source())] = 0;
                std::vector<char> allowed(static_cast<std::size_t>(n), 1);
                for (Vertex v = 0; v < n; ++v)
                    allowed[static_cast<std::size_t>(v)] = !p_inner[static_cast<std::size_t>(v)];
                qs.push_back(shortest_path(u, src, target, allowed));
            }
            for (const auto &q : qs) {
                if (!q)
                    continue;
                Vertex sq = q->source(), tq = q->target(), sp = p.source(), tp = p.target();
                if (sq == tp || tq == sp)
                    continue;
                try {
                    if (c.distance(tq, sp) >= k - 1) {
                        DiPath fwd = concat(concat(*q, c.segment(tq, sp)), p);
                        if (auto w = checked(d, pat, {sq, tp, {fwd, c2.segment(sq, tp)}, {c2.segment(tp, sq)}}))
                            return *w;
                    }
                    if (c.distance(sp, tq) >= k) {
                        DiPath fwd = concat(concat(p, c2.segment(tp, sq)), *q);
                        if (auto w = checked(d, pat, {sp, tq, {c.segment(sp, tq), fwd}, {c.segment(tq, sp)}}))
                            return *w;
                    }
                } catch (const PreconditionError &) {
                    // overlapping pieces: try the next choice
                }
            }
        }
    if (auto w = search_fallback(d, merged(union_vertices(s), p.vertices), pat, opt))
        return *w;
    throw std::logic_error("headphone_extract: no B(k,1;1)-subdivision found");
}

namespace {
    class ComponentColorer {
    public:
        ComponentColorer(const Digraph &d, int k, const SearchOptions &opt)
            : d_(d), k_(k), opt_(opt), pat_(BispindlePattern::b(k, 1, 1)),
              colors_(static_cast<std::size_t>(d.order()), -1)
        {
        }

        std::optional<SubdivisionWitness> run(const std::vector<DiCycle> &s) { return color(s); }
        const std::vector<Color> &colors() const { return colors_; }

    private:
        std::optional<SubdivisionWitness> color(const std::vector<DiCycle> &s)
        {
            const DiCycle &c = s.front();
            // a chord x -> y with C[x,y] of length >= k closes a B(k,1;1)
            for (Vertex x : c.vertices)
                for (Vertex y : d_.out(x))
                    if (c.contains(y) && y != c.step(x, 1) && c.distance(x, y) >= k_)
                        if (auto w = checked(d_, pat_, {x, y, {c.segment(x, y), DiPath{{x, y}}}, {c.segment(y, x)}}))
                            return w;

            std::vector<Vertex> cv = c.vertices;
            std::sort(cv.begin(), cv.end());
            auto sub = induced_subdigraph(d_, cv);
            const auto m = sub.graph.order();
            if (m == 2 * k_ - 1 && 2 * sub.graph.size() == static_cast<std::size_t>(m) * static_cast<std::size_t>(m - 1) &&
                is_tournament(sub.graph))
                return map_witness(tournament_b_k11(sub.graph, k_), sub.to_host);
            Coloring local = brooks_coloring(sub.graph);
            for (std::size_t i = 0; i < cv.size(); ++i)
                colors_[static_cast<std::size_t>(cv[i])] = local.colors[i];

            std::vector<DiCycle> rest(s.begin() + 1, s.end());
            auto comp = cycle_components(rest);
            int comps = rest.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
            for (int l = 0; l < comps; ++l) {
                std::vector<DiCycle> sl;
                for (std::size_t i = 0; i < rest.size(); ++i)
                    if (comp[i] == l)
                        sl.push_back(rest[i]);
                auto vl = union_vertices(sl);
                std::vector<char> in_l(static_cast<std::size_t>(d_.order()), 0);
                for (Vertex v : vl)
                    in_l[static_cast<std::size_t>(v)] = 1;
                std::vector<Vertex> attach;
                for (Vertex v : c.vertices)
                    if (in_l[static_cast<std::size_t>(v)])
                        attach.push_back(v);
                if (attach.size() >= 2) {
                    // consecutive attachments along C give a dipath between two cycles of S_l
                    for (const auto &e : ears_along(c.vertices, true, in_l))
                        return headphone_extract(d_, sl, e, k_, opt_);
                }
                if (attach.empty())
                    throw PreconditionError("color_component: cycles do not form one component");

                // colour S_l on its own, then swap two colours to agree at the attachment vertex
                Vertex a = attach.front();
                Color keep = colors_[static_cast<std::size_t>(a)];
                if (auto w = color(sl))
                    return w;
                Color got = colors_[static_cast<std::size_t>(a)];
                for (Vertex v : vl) {
                    Color &col = colors_[static_cast<std::size_t>(v)];
                    if (col == got)
                        col = keep;
                    else if (col == keep)
                        col = got;
                }
            }
            return std::nullopt;
        }

        const Digraph &d_;
        int k_;
        const SearchOptions &opt_;
        BispindlePattern pat_;
        std::vector<Color> colors_;
    };
}

ColoringOrWitness color_component(const Digraph &d, const std::vector<DiCycle> &s, int k, const SearchOptions &opt)
{
    if (k < 3)
        throw PreconditionError("color_component: k must be at least 3");
    if (s.empty())
        throw PreconditionError("color_component: empty component");
    auto nc = make_nice_collection(k, s);
    if (!validate_nice(d, nc) || std::any_of(nc.component_of.begin(), nc.component_of.end(), [](int c) { return c != 0; }))
        throw PreconditionError("color_component: not one component of a nice collection");

    const auto pat = BispindlePattern::b(k, 1, 1);
    ComponentColorer colorer(d, k, opt);
    if (auto w = colorer.run(s))
        return *w;
    auto verts = union_vertices(s);
    auto sub = induced_subdigraph(d, verts);
    Coloring result{std::vector<Color>(verts.size()), 2 * k - 2};
    for (std::size_t i = 0; i < verts.size(); ++i)
        result.colors[i] = colorer.colors()[static_cast<std::size_t>(verts[i])];
    if (is_proper(sub.graph, result))
        return result;

    // arcs between sub-components or into C that the recursion did not expect
    if (auto w = search_fallback(d, verts, pat, opt))
        return *w;
    auto exact = exact_chromatic(sub.graph);
    if (exact.chromatic_number <= 2 * k - 2) {
        exact.coloring.bound = 2 * k - 2;
        return exact.coloring;
    }
    throw std::logic_error("color_component: chromatic number above 2k-2 without a B(k,1;1)-subdivision");
}

Contraction nice_contraction(const Digraph &d, const NiceCollection &c)
{
    std::vector<std::vector<Vertex>> parts;
    for (const auto &members : component_members(c)) {
        std::vector<DiCycle> cyc;
        for (int i : members)
            cyc.push_back(c.cycles[static_cast<std::size_t>(i)]);
        parts.push_back(union_vertices(cyc));
    }
    return contract(d, parts);
}

std::variant<DiCycle, SubdivisionWitness> extend_or_extract(const Digraph &d, const NiceCollection &c,
                                                            const DiCycle &quotient_cycle)
{
    auto con = nice_contraction(d, c);
    if (!is_dicycle(con.quotient, quotient_cycle))
        throw PreconditionError("extend_or_extract: not a directed cycle of the contraction");
    if (quotient_cycle.length() < 2 * c.k - 2)
        throw PreconditionError("extend_or_extract: quotient cycle shorter than 2k-2");
    const auto components = component_members(c).size();
    const int l = quotient_cycle.length();

    // least arc of d realising each quotient arc x_i -> x_{i+1}
    std::vector<Arc> realised(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) {
        Vertex a = quotient_cycle.at(i), b = quotient_cycle.at(i + 1);
        bool found = false;
        for (Vertex t : con.preimage[static_cast<std::size_t>(a)]) {
            for (Vertex h : d.out(t))
                if (con.image[static_cast<std::size_t>(h)] == b) {
                    realised[static_cast<std::size_t>(i)] = {t, h};
                    found = true;
                    break;
                }
            if (found)
                break;
        }
    }

    std::vector<Vertex> expanded;
    std::vector<int> segment_of;
    for (int i = 0; i < l; ++i) {
        Vertex x = quotient_cycle.at(i);
        Vertex entry = realised[static_cast<std::size_t>((i + l - 1) % l)].head;
        Vertex exit = realised[static_cast<std::size_t>(i)].tail;
        DiPath pi{{entry}};
        if (static_cast<std::size_t>(x) < components) {
            std::vector<char> allowed(static_cast<std::size_t>(d.order()), 0);
            for (Vertex v : con.preimage[static_cast<std::size_t>(x)])
                allowed[static_cast<std::size_t>(v)] = 1;
            pi = *shortest_path(d, entry, exit, allowed);
        }
        for (Vertex v : pi.vertices) {
            expanded.push_back(v);
            segment_of.push_back(i);
        }
    }
    DiCycle grown{expanded};

    const auto pat = BispindlePattern::b(c.k, 1, 1);
    for (const auto &member : c.cycles) {
        std::vector<int> at;
        for (int i = 0; i < grown.length(); ++i)
            if (member.contains(grown.at(i)))
                at.push_back(i);
        if (at.size() < 2)
            continue;
        // the rest of C' runs from the last meeting vertex back to the first one
        Vertex first = grown.at(at.front()), last = grown.at(at.back());
        if (auto w = ear_witness(d, pat, member, grown.segment(last, first)))
            return *w;
        if (auto w = search_fallback(d, merged(union_vertices({member}), grown.vertices), pat, {}))
            return *w;
        throw std::logic_error("extend_or_extract: expansion overlaps a member but no subdivision was found");
    }
    return grown;
}

ColoringOrWitness certify_b_k11(const Digraph &d, int k, const SearchOptions &opt)
{
    if (k < 3)
        throw PreconditionError("certify_b_k11: k must be at least 3");
    if (!is_strong(d))
        throw PreconditionError("certify_b_k11: digraph must be strong");
    const auto pat = BispindlePattern::b(k, 1, 1);
    auto finish_witness = [&](const SubdivisionWitness &w) -> ColoringOrWitness {
        if (!verify_witness(d, pat, w))
            throw std::logic_error("certify_b_k11: produced witness does not verify");
        return w;
    };

    NiceCollection c = make_nice_collection(k, {});
    while (true) {
        auto con = nice_contraction(d, c);
        auto cert = bondy_certifier(con.quotient, 2 * k - 2);
        if (auto *qc = std::get_if<DiCycle>(&cert)) {
            auto grown = extend_or_extract(d, c, *qc);
            if (auto *w = std::get_if<SubdivisionWitness>(&grown))
                return finish_witness(*w);
            auto cycles = c.cycles;
            cycles.push_back(std::get<DiCycle>(grown));
            c = make_nice_collection(k, std::move(cycles));
            if (!validate_nice(d, c))
                throw std::logic_error("certify_b_k11: collection lost niceness");
            continue;
        }
        const Coloring &quotient_coloring = std::get<Coloring>(cert);

        std::vector<std::vector<Vertex>> parts;
        std::vector<Coloring> part_colorings;
        for (const auto &members : component_members(c)) {
            std::vector<DiCycle> s;
            for (int i : members)
                s.push_back(c.cycles[static_cast<std::size_t>(i)]);
            auto r = color_component(d, s, k, opt);
            if (auto *w = std::get_if<SubdivisionWitness>(&r))
                return finish_witness(*w);
            parts.push_back(union_vertices(s));
            part_colorings.push_back(std::get<Coloring>(r));
        }
        Coloring result = lift_contraction_coloring(d, parts, part_colorings, quotient_coloring);
        if (!is_proper(d, result) || result.bound > static_cast<Color>((2 * k - 2) * (2 * k - 3)))
            throw std::logic_error("certify_b_k11: lifted colouring fails its bound");
        return result;
    }
}

} // namespace spindle
