#include <spindle/spindles.hpp>

#include <algorithm>
#include <atomic>
#include <deque>
#include <thread>

namespace spindle {

std::optional<std::vector<DiPath>> disjoint_dipaths(const Digraph &d, Vertex x, Vertex y, int count)
{
    const int n = d.order();
    if (x == y || x < 0 || y < 0 || x >= n || y >= n)
        throw PreconditionError("disjoint_dipaths: hubs must be distinct vertices");
    // split graph: v_in = 2v, v_out = 2v + 1
    const int nodes = 2 * n;
    struct Edge {
        int to, rev, cap;
        bool original;
    };
    std::vector<std::vector<Edge>> g(static_cast<std::size_t>(nodes));
    auto add = [&](int a, int b, int cap) {
        g[static_cast<std::size_t>(a)].push_back({b, static_cast<int>(g[static_cast<std::size_t>(b)].size()), cap, true});
        g[static_cast<std::size_t>(b)].push_back({a, static_cast<int>(g[static_cast<std::size_t>(a)].size()) - 1, 0, false});
    };
    for (Vertex v = 0; v < n; ++v)
        if (v != x && v != y)
            add(2 * v, 2 * v + 1, 1);
    for (const Arc &a : d.arcs())
        if (a.head != x && a.tail != y)
            add(2 * a.tail + 1, 2 * a.head, 1);
    const int source = 2 * x + 1, sink = 2 * y;

    int flow = 0;
    while (flow < count) {
        std::vector<std::pair<int, int>> parent(static_cast<std::size_t>(nodes), {-1, -1});
        std::deque<int> q{source};
        parent[static_cast<std::size_t>(source)] = {source, -1};
        while (!q.empty() && parent[static_cast<std::size_t>(sink)].first < 0) {
            int u = q.front();
            q.pop_front();
            for (int i = 0; i < static_cast<int>(g[static_cast<std::size_t>(u)].size()); ++i) {
                const Edge &e = g[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)];
                if (e.cap > 0 && parent[static_cast<std::size_t>(e.to)].first < 0) {
                    parent[static_cast<std::size_t>(e.to)] = {u, i};
                    q.push_back(e.to);
                }
            }
        }
        if (parent[static_cast<std::size_t>(sink)].first < 0)
            return std::nullopt;
        for (int v = sink; v != source;) {
            auto [u, i] = parent[static_cast<std::size_t>(v)];
            Edge &e = g[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)];
            e.cap -= 1;
            g[static_cast<std::size_t>(v)][static_cast<std::size_t>(e.rev)].cap += 1;
            v = u;
        }
        ++flow;
    }

    // decompose: follow saturated arc edges from x
    std::vector<DiPath> paths;
    for (int p = 0; p < count; ++p) {
        DiPath path{{x}};
        int u = source;
        while (u != sink) {
            bool moved = false;
            for (auto &e : g[static_cast<std::size_t>(u)]) {
                // arc edge carrying flow
                auto &back = g[static_cast<std::size_t>(e.to)][static_cast<std::size_t>(e.rev)];
                if (e.original && e.cap == 0 && back.cap > 0 && e.to % 2 == 0) {
                    e.cap = 1; // consume
                    back.cap -= 1;
                    int v = e.to / 2;
                    path.vertices.push_back(v);
                    u = v == y ? sink : 2 * v + 1;
                    moved = true;
                    break;
                }
            }
            if (!moved)
                throw std::logic_error("disjoint_dipaths: flow decomposition failed");
        }
        paths.push_back(std::move(path));
    }
    return paths;
}

namespace {
    struct Slot {
        int min_length;
        bool forward;
        int original;
    };

    class PairSearch {
    public:
        PairSearch(const Digraph &d, Vertex x, Vertex y, const std::vector<Slot> &slots, long long budget)
            : d_(d), x_(x), y_(y), slots_(slots), budget_(budget), used_(static_cast<std::size_t>(d.order()), 0)
        {
            used_[static_cast<std::size_t>(x)] = used_[static_cast<std::size_t>(y)] = 1;
        }

        Detection run()
        {
            bool ok = place(0);
            if (ok)
                return Detection::found;
            return exhausted_ ? Detection::unknown : Detection::absent;
        }

        SubdivisionWitness witness() const
        {
            SubdivisionWitness w{x_, y_, std::vector<DiPath>(), std::vector<DiPath>()};
            std::vector<std::pair<int, DiPath>> fwd, bwd;
            for (std::size_t i = 0; i < slots_.size(); ++i)
                (slots_[i].forward ? fwd : bwd).emplace_back(slots_[i].original, paths_[i]);
            std::sort(fwd.begin(), fwd.end(), [](auto &a, auto &b) { return a.first < b.first; });
            std::sort(bwd.begin(), bwd.end(), [](auto &a, auto &b) { return a.first < b.first; });
            for (auto &p : fwd)
                w.forward.push_back(p.second);
            for (auto &p : bwd)
                w.backward.push_back(p.second);
            return w;
        }

    private:
        bool tick()
        {
            if (budget_ > 0 && ++nodes_ > budget_) {
                exhausted_ = true;
                return false;
            }
            return true;
        }

        // target reachable from u through unused vertices?
        bool can_reach(Vertex u, Vertex target) const
        {
            std::vector<char> seen(used_.size(), 0);
            std::vector<Vertex> stack{u};
            seen[static_cast<std::size_t>(u)] = 1;
            while (!stack.empty()) {
                Vertex a = stack.back();
                stack.pop_back();
                for (Vertex b : d_.out(a)) {
                    if (b == target)
                        return true;
                    if (!seen[static_cast<std::size_t>(b)] && !used_[static_cast<std::size_t>(b)]) {
                        seen[static_cast<std::size_t>(b)] = 1;
                        stack.push_back(b);
                    }
                }
            }
            return false;
        }

        bool place(std::size_t slot)
        {
            if (slot == slots_.size())
                return true;
            const Slot &s = slots_[slot];
            Vertex from = s.forward ? x_ : y_, to = s.forward ? y_ : x_;
            // equal consecutive slots: enforce increasing second vertex
            Vertex min_second = -1;
            if (slot > 0 && slots_[slot - 1].forward == s.forward && slots_[slot - 1].min_length == s.min_length)
                min_second = paths_[slot - 1].vertices[1];
            current_ = DiPath{{from}};
            return extend(slot, from, to, min_second);
        }

        bool extend(std::size_t slot, Vertex u, Vertex to, Vertex min_second)
        {
            if (!tick())
                return false;
            const int len = current_.length();
            for (Vertex w : d_.out(u)) {
                if (len == 0 && w <= min_second)
                    continue;
                if (w == to) {
                    if (len + 1 < slots_[slot].min_length)
                        continue;
                    if (len == 0 && direct_used(slots_[slot].forward))
                        continue;
                    current_.vertices.push_back(w);
                    paths_.push_back(current_);
                    DiPath saved = current_;
                    if (place(slot + 1))
                        return true;
                    paths_.pop_back();
                    current_ = saved;
                    current_.vertices.pop_back();
                    if (exhausted_)
                        return false;
                    continue;
                }
                if (used_[static_cast<std::size_t>(w)])
                    continue;
                used_[static_cast<std::size_t>(w)] = 1;
                current_.vertices.push_back(w);
                bool ok = can_reach(w, to) && extend(slot, w, to, min_second);
                if (ok)
                    return true;
                current_.vertices.pop_back();
                used_[static_cast<std::size_t>(w)] = 0;
                if (exhausted_)
                    return false;
            }
            return false;
        }

        bool direct_used(bool forward) const
        {
            for (std::size_t i = 0; i < paths_.size(); ++i)
                if (slots_[i].forward == forward && paths_[i].length() == 1)
                    return true;
            return false;
        }

        const Digraph &d_;
        Vertex x_, y_;
        const std::vector<Slot> &slots_;
        long long budget_;
        long long nodes_ = 0;
        bool exhausted_ = false;
        std::vector<char> used_;
        std::vector<DiPath> paths_;
        DiPath current_;
    };

    DetectionResult search_pair(const Digraph &d, const BispindlePattern &pat, const std::vector<Slot> &slots,
                                Vertex x, Vertex y, const SearchOptions &opt)
    {
        bool pure = opt.use_flow && pat.backward.empty() &&
                    std::all_of(pat.forward.begin(), pat.forward.end(), [](int m) { return m == 1; });
        if (pure) {
            auto paths = disjoint_dipaths(d, x, y, static_cast<int>(pat.forward.size()));
            if (!paths)
                return {Detection::absent, std::nullopt};
            return {Detection::found, SubdivisionWitness{x, y, *paths, {}}};
        }
        PairSearch s(d, x, y, slots, opt.node_budget);
        auto status = s.run();
        if (status == Detection::found)
            return {status, s.witness()};
        return {status, std::nullopt};
    }
}

DetectionResult find_subdivision(const Digraph &d, const BispindlePattern &pat, const SearchOptions &opt)
{
    if (pat.forward.empty())
        throw PreconditionError("find_subdivision: pattern needs a forward path");
    for (int m : pat.forward)
        if (m < 1)
            throw PreconditionError("find_subdivision: minimum lengths must be positive");
    for (int m : pat.backward)
        if (m < 1)
            throw PreconditionError("find_subdivision: minimum lengths must be positive");

    // longest slots first, forward before backward
    std::vector<Slot> slots;
    for (std::size_t i = 0; i < pat.forward.size(); ++i)
        slots.push_back({pat.forward[i], true, static_cast<int>(i)});
    for (std::size_t i = 0; i < pat.backward.size(); ++i)
        slots.push_back({pat.backward[i], false, static_cast<int>(i)});
    std::stable_sort(slots.begin(), slots.end(), [](const Slot &a, const Slot &b) {
        if (a.forward != b.forward)
            return a.forward;
        return a.min_length > b.min_length;
    });
    const int n = d.order();
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y)
            if (x != y)
                pairs.emplace_back(x, y);

    std::vector<DetectionResult> results(pairs.size());
    const int threads = std::max(1, std::min<int>(opt.threads, static_cast<int>(pairs.size())));
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best_found{pairs.size()};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= pairs.size() || i > best_found.load())
                return;
            results[i] = search_pair(d, pat, slots, pairs[i].first, pairs[i].second, opt);
            if (results[i].status == Detection::found) {
                std::size_t cur = best_found.load();
                while (i < cur && !best_found.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    if (threads == 1)
        worker();
    else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto &t : pool)
            t.join();
    }

    bool unknown = false;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (results[i].status == Detection::found)
            return results[i];
        if (results[i].status == Detection::unknown && i < best_found.load())
            unknown = true;
    }
    return {unknown ? Detection::unknown : Detection::absent, std::nullopt};
}

std::optional<SubdivisionWitness> find_subdivision_within(const Digraph &d, std::span<const Vertex> vertices,
                                                          const BispindlePattern &pat, const SearchOptions &opt)
{
    std::vector<Vertex> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    auto sub = induced_subdigraph(d, sorted);
    auto r = find_subdivision(sub.graph, pat, opt);
    if (!r.witness)
        return std::nullopt;
    return map_witness(*r.witness, sub.to_host);
}

} // namespace spindle
