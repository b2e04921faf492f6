#include <spindle/digraph.hpp>

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <numeric>

namespace spindle {

Digraph::Digraph(int n) : n_(n)
{
    if (n < 0)
        throw PreconditionError("negative vertex count");
    out_.resize(static_cast<std::size_t>(n));
    in_.resize(static_cast<std::size_t>(n));
    matrix_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

Digraph::Digraph(int n, std::span<const Arc> arcs) : Digraph(n)
{
    for (const Arc &a : arcs)
        add_arc(a.tail, a.head);
}

void Digraph::add_arc(Vertex u, Vertex v)
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw PreconditionError("arc endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v)
        throw PreconditionError("self-loop at " + std::to_string(u));
    if (has_arc(u, v))
        throw PreconditionError("duplicate arc " + std::to_string(u) + " " + std::to_string(v));
    matrix_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)] = 1;
    auto &o = out_[static_cast<std::size_t>(u)];
    o.insert(std::lower_bound(o.begin(), o.end(), v), v);
    auto &i = in_[static_cast<std::size_t>(v)];
    i.insert(std::lower_bound(i.begin(), i.end(), u), u);
    ++arc_count_;
}

std::vector<Vertex> Digraph::neighbours(Vertex u) const
{
    std::vector<Vertex> result;
    std::set_union(out(u).begin(), out(u).end(), in(u).begin(), in(u).end(), std::back_inserter(result));
    return result;
}

std::vector<Arc> Digraph::arcs() const
{
    std::vector<Arc> result;
    result.reserve(arc_count_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : out(u))
            result.push_back({u, v});
    return result;
}

Digraph Digraph::reversed() const
{
    Digraph r(n_);
    for (const Arc &a : arcs())
        r.add_arc(a.head, a.tail);
    return r;
}

bool Digraph::operator==(const Digraph &other) const
{
    return n_ == other.n_ && matrix_ == other.matrix_;
}

InducedSubdigraph induced_subdigraph(const Digraph &d, std::span<const Vertex> vertices)
{
    InducedSubdigraph result{Digraph(static_cast<int>(vertices.size())), {vertices.begin(), vertices.end()}};
    std::vector<int> local(static_cast<std::size_t>(d.order()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        local[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (Vertex w : d.out(vertices[i]))
            if (local[static_cast<std::size_t>(w)] >= 0)
                result.graph.add_arc(static_cast<int>(i), local[static_cast<std::size_t>(w)]);
    return result;
}

// ---------------------------------------------------------------------------

bool DiPath::contains(Vertex v) const
{
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

DiPath DiPath::reversed() const
{
    return DiPath{{vertices.rbegin(), vertices.rend()}};
}

bool DiCycle::contains(Vertex v) const
{
    return index_of(v) >= 0;
}

int DiCycle::index_of(Vertex v) const
{
    auto it = std::find(vertices.begin(), vertices.end(), v);
    return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

Vertex DiCycle::at(int i) const
{
    int len = length();
    return vertices[static_cast<std::size_t>(((i % len) + len) % len)];
}

int DiCycle::distance(Vertex a, Vertex b) const
{
    int ia = index_of(a), ib = index_of(b);
    if (ia < 0 || ib < 0)
        throw PreconditionError("vertex not on cycle");
    return ((ib - ia) % length() + length()) % length();
}

DiPath DiCycle::segment(Vertex a, Vertex b) const
{
    int ia = index_of(a);
    int dist = distance(a, b);
    DiPath p;
    p.vertices.reserve(static_cast<std::size_t>(dist + 1));
    for (int i = 0; i <= dist; ++i)
        p.vertices.push_back(at(ia + i));
    return p;
}

std::vector<Vertex> DiCycle::interior(Vertex a, Vertex b) const
{
    auto seg = segment(a, b).vertices;
    if (seg.size() <= 2)
        return {};
    return {seg.begin() + 1, seg.end() - 1};
}

Vertex DiCycle::step(Vertex a, int steps) const
{
    int ia = index_of(a);
    if (ia < 0)
        throw PreconditionError("vertex not on cycle");
    return at(ia + steps);
}

DiCycle DiCycle::reversed() const
{
    return DiCycle{{vertices.rbegin(), vertices.rend()}};
}

bool is_dipath(const Digraph &d, const DiPath &p)
{
    if (p.vertices.empty())
        return false;
    std::vector<char> seen(static_cast<std::size_t>(d.order()), 0);
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        Vertex v = p.vertices[i];
        if (v < 0 || v >= d.order() || seen[static_cast<std::size_t>(v)])
            return false;
        seen[static_cast<std::size_t>(v)] = 1;
        if (i > 0 && !d.has_arc(p.vertices[i - 1], v))
            return false;
    }
    return true;
}

bool is_dicycle(const Digraph &d, const DiCycle &c)
{
    if (c.vertices.size() < 2)
        return false;
    if (!is_dipath(d, DiPath{c.vertices}))
        return false;
    return d.has_arc(c.vertices.back(), c.vertices.front());
}

DiPath concat(const DiPath &p, const DiPath &q)
{
    if (p.vertices.empty() || q.vertices.empty())
        throw PreconditionError("concat of empty path");
    if (p.target() != q.source())
        throw PreconditionError("concat: t(P) != s(Q)");
    for (std::size_t i = 1; i < q.vertices.size(); ++i)
        if (p.contains(q.vertices[i]))
            throw PreconditionError("concat: paths share a vertex besides the junction");
    DiPath r = p;
    r.vertices.insert(r.vertices.end(), q.vertices.begin() + 1, q.vertices.end());
    return r;
}

// ---------------------------------------------------------------------------

std::vector<std::vector<Vertex>> strong_components(const Digraph &d)
{
    // Iterative Tarjan; emits components in reverse topological order.
    const int n = d.order();
    std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> stack;
    std::vector<std::vector<Vertex>> comps;
    int counter = 0;
    std::vector<std::pair<Vertex, std::size_t>> call;
    for (Vertex root = 0; root < n; ++root) {
        if (index[static_cast<std::size_t>(root)] >= 0)
            continue;
        call.push_back({root, 0});
        while (!call.empty()) {
            auto &[v, next] = call.back();
            auto sv = static_cast<std::size_t>(v);
            if (next == 0 && index[sv] < 0) {
                index[sv] = low[sv] = counter++;
                stack.push_back(v);
                on_stack[sv] = 1;
            }
            auto outs = d.out(v);
            if (next < outs.size()) {
                Vertex w = outs[next++];
                auto sw = static_cast<std::size_t>(w);
                if (index[sw] < 0)
                    call.push_back({w, 0});
                else if (on_stack[sw])
                    low[sv] = std::min(low[sv], index[sw]);
                continue;
            }
            if (low[sv] == index[sv]) {
                std::vector<Vertex> comp;
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = 0;
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                comps.push_back(std::move(comp));
            }
            Vertex finished = v;
            call.pop_back();
            if (!call.empty()) {
                auto sp = static_cast<std::size_t>(call.back().first);
                low[sp] = std::min(low[sp], low[static_cast<std::size_t>(finished)]);
            }
        }
    }
    std::reverse(comps.begin(), comps.end());
    return comps;
}

bool is_strong(const Digraph &d)
{
    return d.order() <= 1 || strong_components(d).size() == 1;
}

std::vector<char> reachable(const Digraph &d, Vertex from, const std::vector<char> &allowed)
{
    std::vector<char> seen(static_cast<std::size_t>(d.order()), 0);
    std::vector<Vertex> todo{from};
    seen[static_cast<std::size_t>(from)] = 1;
    while (!todo.empty()) {
        Vertex u = todo.back();
        todo.pop_back();
        for (Vertex w : d.out(u)) {
            auto sw = static_cast<std::size_t>(w);
            if (seen[sw] || (!allowed.empty() && !allowed[sw]))
                continue;
            seen[sw] = 1;
            todo.push_back(w);
        }
    }
    return seen;
}

std::optional<DiPath> shortest_path(const Digraph &d, std::span<const Vertex> sources,
                                    const std::vector<char> &is_target, const std::vector<char> &allowed)
{
    const auto n = static_cast<std::size_t>(d.order());
    std::vector<Vertex> parent(n, -2);
    std::deque<Vertex> queue;
    std::vector<Vertex> sorted(sources.begin(), sources.end());
    std::sort(sorted.begin(), sorted.end());
    for (Vertex s : sorted) {
        if (is_target[static_cast<std::size_t>(s)])
            return DiPath{{s}};
        if (parent[static_cast<std::size_t>(s)] == -2) {
            parent[static_cast<std::size_t>(s)] = -1;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : d.out(u)) {
            auto sw = static_cast<std::size_t>(w);
            if (parent[sw] != -2)
                continue;
            bool target = is_target[sw] != 0;
            if (!target && !allowed.empty() && !allowed[sw])
                continue;
            parent[sw] = u;
            if (target) {
                DiPath p;
                for (Vertex x = w; x != -1; x = parent[static_cast<std::size_t>(x)])
                    p.vertices.push_back(x);
                std::reverse(p.vertices.begin(), p.vertices.end());
                return p;
            }
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

std::optional<DiPath> shortest_path(const Digraph &d, Vertex from, Vertex to, const std::vector<char> &allowed)
{
    std::vector<char> target(static_cast<std::size_t>(d.order()), 0);
    target[static_cast<std::size_t>(to)] = 1;
    std::array<Vertex, 1> src{from};
    return shortest_path(d, src, target, allowed);
}

std::vector<std::vector<Vertex>> connected_components(const Digraph &d)
{
    const int n = d.order();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<Vertex>> result;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0)
            continue;
        int id = static_cast<int>(result.size());
        result.emplace_back();
        std::vector<Vertex> todo{s};
        comp[static_cast<std::size_t>(s)] = id;
        while (!todo.empty()) {
            Vertex u = todo.back();
            todo.pop_back();
            result.back().push_back(u);
            for (Vertex w : d.neighbours(u))
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = id;
                    todo.push_back(w);
                }
        }
        std::sort(result.back().begin(), result.back().end());
    }
    return result;
}

bool is_connected(const Digraph &d)
{
    return d.order() <= 1 || connected_components(d).size() == 1;
}

std::vector<std::vector<Vertex>> underlying_blocks(const Digraph &d)
{
    const int n = d.order();
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        adj[static_cast<std::size_t>(v)] = d.neighbours(v);

    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<Vertex, Vertex>> edge_stack;
    std::vector<std::vector<Vertex>> blocks;
    int timer = 0;

    std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
        auto su = static_cast<std::size_t>(u);
        disc[su] = low[su] = timer++;
        for (Vertex w : adj[su]) {
            auto sw = static_cast<std::size_t>(w);
            if (disc[sw] < 0) {
                edge_stack.push_back({u, w});
                dfs(w, u);
                low[su] = std::min(low[su], low[sw]);
                if (low[sw] >= disc[su]) {
                    std::vector<Vertex> block;
                    std::pair<Vertex, Vertex> e;
                    do {
                        e = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(e.first);
                        block.push_back(e.second);
                    } while (e != std::pair<Vertex, Vertex>{u, w});
                    std::sort(block.begin(), block.end());
                    block.erase(std::unique(block.begin(), block.end()), block.end());
                    blocks.push_back(std::move(block));
                }
            } else if (w != parent && disc[sw] < disc[su]) {
                edge_stack.push_back({u, w});
                low[su] = std::min(low[su], disc[sw]);
            }
        }
    };
    for (Vertex v = 0; v < n; ++v) {
        if (disc[static_cast<std::size_t>(v)] >= 0)
            continue;
        if (adj[static_cast<std::size_t>(v)].empty()) {
            disc[static_cast<std::size_t>(v)] = timer++;
            blocks.push_back({v});
            continue;
        }
        dfs(v, -1);
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

bool is_two_connected(const Digraph &d)
{
    if (d.order() < 2)
        return false;
    auto blocks = underlying_blocks(d);
    return blocks.size() == 1 && static_cast<int>(blocks.front().size()) == d.order();
}

namespace {
    std::vector<char> vertex_mask_of(const Digraph &f)
    {
        std::vector<char> mask(static_cast<std::size_t>(f.order()), 0);
        for (Vertex v = 0; v < f.order(); ++v)
            mask[static_cast<std::size_t>(v)] = (f.out_degree(v) + f.in_degree(v)) > 0;
        return mask;
    }

    bool strong_on(const Digraph &f, const std::vector<char> &mask)
    {
        Vertex first = -1;
        for (Vertex v = 0; v < f.order(); ++v)
            if (mask[static_cast<std::size_t>(v)]) {
                first = v;
                break;
            }
        if (first < 0)
            return false;
        auto fwd = reachable(f, first);
        auto bwd = reachable(f.reversed(), first);
        for (Vertex v = 0; v < f.order(); ++v)
            if (mask[static_cast<std::size_t>(v)] && (!fwd[static_cast<std::size_t>(v)] || !bwd[static_cast<std::size_t>(v)]))
                return false;
        return true;
    }
}

DiPath find_directed_ear(const Digraph &d, const Digraph &f)
{
    if (f.order() != d.order())
        throw PreconditionError("ear: f must live on the vertex set of d");
    for (const Arc &a : f.arcs())
        if (!d.has_arc(a.tail, a.head))
            throw PreconditionError("ear: f is not a subdigraph of d");
    auto in_f = vertex_mask_of(f);
    std::vector<Vertex> fv;
    for (Vertex v = 0; v < f.order(); ++v)
        if (in_f[static_cast<std::size_t>(v)])
            fv.push_back(v);
    if (fv.size() < 2 || !strong_on(f, in_f))
        throw PreconditionError("ear: f must be a nontrivial strong subdigraph");
    if (!is_strong(d) || !is_two_connected(d))
        throw PreconditionError("ear: d must be strong and 2-connected");
    auto fsub = induced_subdigraph(f, fv);
    if (fv.size() >= 3 && !is_two_connected(fsub.graph))
        throw PreconditionError("ear: f must be 2-connected");
    if (f.size() == d.size() && static_cast<int>(fv.size()) == d.order())
        throw PreconditionError("ear: f must be a proper subdigraph");

    std::vector<char> outside(in_f.size());
    for (std::size_t i = 0; i < in_f.size(); ++i)
        outside[i] = !in_f[i];
    std::optional<DiPath> best;
    for (Vertex u : fv) {
        for (Vertex w : d.out(u)) {
            if (in_f[static_cast<std::size_t>(w)]) {
                if (!f.has_arc(u, w)) {
                    DiPath p{{u, w}};
                    if (!best || p.length() < best->length())
                        best = p;
                }
                continue;
            }
            std::vector<char> target = in_f;
            target[static_cast<std::size_t>(u)] = 0;
            std::array<Vertex, 1> src{w};
            auto rest = shortest_path(d, src, target, outside);
            if (!rest)
                continue;
            DiPath p{{u}};
            p.vertices.insert(p.vertices.end(), rest->vertices.begin(), rest->vertices.end());
            if (!best || p.length() < best->length())
                best = p;
        }
        if (best)
            return *best;
    }
    throw PreconditionError("ear: no directed ear exists (f is not proper in d)");
}

std::optional<DiCycle> shortest_directed_cycle(const Digraph &d)
{
    const int n = d.order();
    std::optional<DiCycle> best;
    for (Vertex s = 0; s < n; ++s) {
        // distance from every vertex (>= s) back to s, restricted to vertices >= s
        std::vector<int> to_s(static_cast<std::size_t>(n), -1);
        std::deque<Vertex> q{s};
        to_s[static_cast<std::size_t>(s)] = 0;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop_front();
            for (Vertex w : d.in(u))
                if (w > s && to_s[static_cast<std::size_t>(w)] < 0) {
                    to_s[static_cast<std::size_t>(w)] = to_s[static_cast<std::size_t>(u)] + 1;
                    q.push_back(w);
                }
        }
        int len = -1;
        for (Vertex w : d.out(s))
            if (w > s && to_s[static_cast<std::size_t>(w)] >= 0) {
                int l = to_s[static_cast<std::size_t>(w)] + 1;
                if (len < 0 || l < len)
                    len = l;
            }
        if (len < 0 || (best && len >= best->length()))
            continue;
        DiCycle c{{s}};
        Vertex cur = s;
        for (int remaining = len - 1; remaining > 0; --remaining) {
            for (Vertex w : d.out(cur))
                if (w > s && to_s[static_cast<std::size_t>(w)] == remaining) {
                    cur = w;
                    break;
                }
            c.vertices.push_back(cur);
        }
        best = c;
    }
    return best;
}

int blocks_of_cycle(const Digraph &d, std::span<const Vertex> cycle)
{
    const auto len = cycle.size();
    if (len < 3)
        throw PreconditionError("blocks_of_cycle: need at least three vertices");
    std::vector<Vertex> sorted(cycle.begin(), cycle.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw PreconditionError("blocks_of_cycle: repeated vertex");
    std::vector<int> orient(len);
    for (std::size_t i = 0; i < len; ++i) {
        Vertex a = cycle[i], b = cycle[(i + 1) % len];
        if (a < 0 || b < 0 || a >= d.order() || b >= d.order())
            throw PreconditionError("blocks_of_cycle: vertex out of range");
        if (d.has_arc(a, b))
            orient[i] = 1;
        else if (d.has_arc(b, a))
            orient[i] = -1;
        else
            throw PreconditionError("blocks_of_cycle: consecutive vertices not adjacent");
    }
    int changes = 0;
    for (std::size_t i = 0; i < len; ++i)
        if (orient[i] != orient[(i + 1) % len])
            ++changes;
    return changes == 0 ? 1 : changes;
}

std::optional<DiCycle> find_long_cycle(const Digraph &d, int min_length)
{
    const int n = d.order();
    if (min_length < 2)
        min_length = 2;
    std::vector<Vertex> path;
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    std::optional<DiCycle> found;

    for (Vertex s = 0; s < n && !found; ++s) {
        // only vertices > s that lie in the strong component of s matter
        std::vector<char> allowed(static_cast<std::size_t>(n), 0);
        for (Vertex v = s; v < n; ++v)
            allowed[static_cast<std::size_t>(v)] = 1;
        auto fwd = reachable(d, s, allowed);
        auto bwd = reachable(d.reversed(), s, allowed);
        int comp_size = 0;
        for (Vertex v = s; v < n; ++v) {
            auto sv = static_cast<std::size_t>(v);
            allowed[sv] = fwd[sv] && bwd[sv];
            comp_size += allowed[sv];
        }
        if (comp_size < min_length)
            continue;

        std::function<bool(Vertex)> dfs = [&](Vertex u) -> bool {
            if (static_cast<int>(path.size()) >= min_length && d.has_arc(u, s)) {
                found = DiCycle{path};
                return true;
            }
            // prune: vertices still reachable from u avoiding the path
            std::vector<char> free_mask = allowed;
            for (Vertex p : path)
                free_mask[static_cast<std::size_t>(p)] = 0;
            free_mask[static_cast<std::size_t>(u)] = 1;
            auto reach = reachable(d, u, free_mask);
            int extra = 0;
            for (Vertex v = s; v < n; ++v)
                if (reach[static_cast<std::size_t>(v)] && v != u)
                    ++extra;
            if (static_cast<int>(path.size()) + extra < min_length)
                return false;
            for (Vertex w : d.out(u)) {
                auto sw = static_cast<std::size_t>(w);
                if (!allowed[sw] || on_path[sw] || w == s)
                    continue;
                path.push_back(w);
                on_path[sw] = 1;
                if (dfs(w))
                    return true;
                on_path[sw] = 0;
                path.pop_back();
            }
            return false;
        };
        path = {s};
        on_path.assign(static_cast<std::size_t>(n), 0);
        on_path[static_cast<std::size_t>(s)] = 1;
        dfs(s);
    }
    return found;
}

} // namespace spindle
