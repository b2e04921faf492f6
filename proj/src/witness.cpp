#include <spindle/spindles.hpp>

#include <algorithm>
#include <functional>
#include <sstream>

namespace spindle {

namespace {
    std::vector<int> parse_list(const std::string &text)
    {
        std::vector<int> out;
        if (text.empty())
            return out;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(item, &used);
            } catch (const std::exception &) {
                throw PreconditionError("pattern: bad number '" + item + "'");
            }
            if (used != item.size() || v < 1)
                throw PreconditionError("pattern: minimum lengths must be positive integers");
            out.push_back(v);
        }
        return out;
    }

    std::string join(const std::vector<int> &v)
    {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? "," : "") + std::to_string(v[i]);
        return s;
    }
}

BispindlePattern BispindlePattern::parse(const std::string &raw)
{
    std::string text;
    for (char c : raw)
        if (c != ' ')
            text += c;
    if (text.size() > 3 && text.front() == 'B' && text[1] == '(' && text.back() == ')') {
        auto inner = text.substr(2, text.size() - 3);
        auto semi = inner.find(';');
        if (semi == std::string::npos)
            throw PreconditionError("pattern: expected B(k1,k2;k3)");
        BispindlePattern p{parse_list(inner.substr(0, semi)), parse_list(inner.substr(semi + 1))};
        if (p.forward.empty())
            throw PreconditionError("pattern: no forward paths");
        return p;
    }
    auto colon = text.find(':');
    BispindlePattern p{parse_list(text.substr(0, colon)),
                       colon == std::string::npos ? std::vector<int>{} : parse_list(text.substr(colon + 1))};
    if (p.forward.empty())
        throw PreconditionError("pattern: no forward paths");
    return p;
}

std::string BispindlePattern::to_string() const
{
    if (forward.size() == 2 && backward.size() == 1)
        return "B(" + join(forward) + ";" + join(backward) + ")";
    return join(forward) + ":" + join(backward);
}

WitnessCheck check_witness(const Digraph &d, const BispindlePattern &pat, const SubdivisionWitness &w)
{
    WitnessCheck r;
    auto fail = [&](std::string why) { r.reasons.push_back(std::move(why)); };
    const int n = d.order();
    if (w.x < 0 || w.x >= n || w.y < 0 || w.y >= n) {
        fail("hub out of range");
        return r;
    }
    if (w.x == w.y)
        fail("hubs coincide");
    if (w.forward.size() != pat.forward.size())
        fail("expected " + std::to_string(pat.forward.size()) + " forward paths, got " + std::to_string(w.forward.size()));
    if (w.backward.size() != pat.backward.size())
        fail("expected " + std::to_string(pat.backward.size()) + " backward paths, got " + std::to_string(w.backward.size()));

    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    int direct_forward = 0, direct_backward = 0;
    auto check_path = [&](const DiPath &p, Vertex from, Vertex to, int id, const std::string &name) {
        if (p.vertices.size() < 2) {
            fail(name + ": fewer than two vertices");
            return;
        }
        for (Vertex v : p.vertices)
            if (v < 0 || v >= n) {
                fail(name + ": vertex out of range");
                return;
            }
        if (p.source() != from || p.target() != to)
            fail(name + ": wrong end vertices");
        if (!is_dipath(d, p))
            fail(name + ": not a dipath of the digraph");
        for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
            Vertex v = p.vertices[i];
            if (v == w.x || v == w.y)
                fail(name + ": passes through a hub");
            else if (owner[static_cast<std::size_t>(v)] >= 0 && owner[static_cast<std::size_t>(v)] != id)
                fail(name + ": shares internal vertex " + std::to_string(v));
            owner[static_cast<std::size_t>(v)] = id;
        }
    };
    int id = 0;
    for (const auto &p : w.forward) {
        check_path(p, w.x, w.y, id, "forward path " + std::to_string(id));
        direct_forward += p.length() == 1;
        ++id;
    }
    for (const auto &p : w.backward) {
        check_path(p, w.y, w.x, id, "backward path " + std::to_string(id));
        direct_backward += p.length() == 1;
        ++id;
    }
    if (direct_forward > 1 || direct_backward > 1)
        fail("the same arc is used by two paths");

    auto slots_ok = [](std::vector<int> need, const std::vector<DiPath> &paths) {
        if (need.size() != paths.size())
            return false;
        std::vector<int> have;
        for (const auto &p : paths)
            have.push_back(p.length());
        std::sort(need.rbegin(), need.rend());
        std::sort(have.rbegin(), have.rend());
        for (std::size_t i = 0; i < need.size(); ++i)
            if (have[i] < need[i])
                return false;
        return true;
    };
    if (w.forward.size() == pat.forward.size() && !slots_ok(pat.forward, w.forward))
        fail("forward path lengths below the pattern minimums");
    if (w.backward.size() == pat.backward.size() && !slots_ok(pat.backward, w.backward))
        fail("backward path lengths below the pattern minimums");
    r.valid = r.reasons.empty();
    return r;
}

bool verify_witness(const Digraph &d, const BispindlePattern &pat, const SubdivisionWitness &w)
{
    return check_witness(d, pat, w).valid;
}

SubdivisionWitness reverse_witness(const SubdivisionWitness &w)
{
    SubdivisionWitness r{w.y, w.x, {}, {}};
    for (const auto &p : w.forward)
        r.forward.push_back(p.reversed());
    for (const auto &p : w.backward)
        r.backward.push_back(p.reversed());
    return r;
}

SubdivisionWitness map_witness(const SubdivisionWitness &w, const std::vector<Vertex> &to_host)
{
    auto map_path = [&](const DiPath &p) {
        DiPath q;
        for (Vertex v : p.vertices)
            q.vertices.push_back(to_host[static_cast<std::size_t>(v)]);
        return q;
    };
    SubdivisionWitness r{to_host[static_cast<std::size_t>(w.x)], to_host[static_cast<std::size_t>(w.y)], {}, {}};
    for (const auto &p : w.forward)
        r.forward.push_back(map_path(p));
    for (const auto &p : w.backward)
        r.backward.push_back(map_path(p));
    return r;
}

std::string to_string(Detection d)
{
    switch (d) {
    case Detection::found:
        return "found";
    case Detection::absent:
        return "absent";
    case Detection::unknown:
        return "unknown";
    }
    return "unknown";
}

std::optional<SubdivisionWitness> ear_witness(const Digraph &d, const BispindlePattern &pat, const DiCycle &b,
                                              const DiPath &e)
{
    if (e.vertices.size() < 2)
        return std::nullopt;
    Vertex u = e.source(), v = e.target();
    if (u == v || !b.contains(u) || !b.contains(v))
        return std::nullopt;
    SubdivisionWitness w{u, v, {e, b.segment(u, v)}, {b.segment(v, u)}};
    if (verify_witness(d, pat, w))
        return w;
    return std::nullopt;
}

std::vector<DiPath> ears_along(const std::vector<Vertex> &walk, bool cyclic, const std::vector<char> &on)
{
    std::vector<DiPath> ears;
    const int len = static_cast<int>(walk.size());
    std::vector<int> marks;
    for (int i = 0; i < len; ++i)
        if (on[static_cast<std::size_t>(walk[static_cast<std::size_t>(i)])])
            marks.push_back(i);
    if (marks.size() < 2 && !(cyclic && marks.size() == 1))
        return ears;
    const int count = static_cast<int>(marks.size());
    const int pairs = cyclic ? count : count - 1;
    for (int m = 0; m < pairs; ++m) {
        int from = marks[static_cast<std::size_t>(m)];
        int to = marks[static_cast<std::size_t>((m + 1) % count)];
        if (cyclic && to <= from)
            to += len;
        DiPath p;
        for (int i = from; i <= to; ++i)
            p.vertices.push_back(walk[static_cast<std::size_t>(i % len)]);
        if (p.source() != p.target())
            ears.push_back(std::move(p));
    }
    return ears;
}

std::optional<SubdivisionWitness> two_cycle_witness(const Digraph &d, const BispindlePattern &pat, const DiCycle &a,
                                                    const DiCycle &b)
{
    std::vector<char> on(static_cast<std::size_t>(d.order()), 0);
    for (Vertex v : b.vertices)
        on[static_cast<std::size_t>(v)] = 1;
    for (const auto &e : ears_along(a.vertices, true, on))
        if (auto w = ear_witness(d, pat, b, e))
            return w;
    return std::nullopt;
}

} // namespace spindle
