#include <spindle/io.hpp>

#include <json.hpp>

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace spindle {

using nlohmann::json;

namespace {
    [[noreturn]] void bad(const std::string &what) { throw PreconditionError(what); }

    bool next_data_line(std::istream &in, std::string &line, int &lineno)
    {
        while (std::getline(in, line)) {
            ++lineno;
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#')
                continue;
            return true;
        }
        return false;
    }

    /// Exactly `count` non-negative integers on the line.
    std::vector<long long> numbers(const std::string &line, int count, int lineno)
    {
        std::istringstream s(line);
        std::vector<long long> out;
        long long x;
        while (s >> x)
            out.push_back(x);
        if (!s.eof() || static_cast<int>(out.size()) != count)
            bad("edge list line " + std::to_string(lineno) + ": expected " + std::to_string(count) + " integers");
        for (long long v : out)
            if (v < 0)
                bad("edge list line " + std::to_string(lineno) + ": negative value");
        return out;
    }
}

Digraph read_edge_list(std::istream &in)
{
    std::string line;
    int lineno = 0;
    if (!next_data_line(in, line, lineno))
        bad("edge list: missing \"n m\" header");
    auto head = numbers(line, 2, lineno);
    if (head[0] > 100000)
        bad("edge list: too many vertices");
    const int n = static_cast<int>(head[0]);
    Digraph d(n);
    for (long long i = 0; i < head[1]; ++i) {
        if (!next_data_line(in, line, lineno))
            bad("edge list: fewer arcs than announced");
        auto uv = numbers(line, 2, lineno);
        if (uv[0] >= n || uv[1] >= n)
            bad("edge list line " + std::to_string(lineno) + ": vertex out of range");
        Vertex u = static_cast<Vertex>(uv[0]), v = static_cast<Vertex>(uv[1]);
        if (u == v)
            bad("edge list line " + std::to_string(lineno) + ": loop");
        if (d.has_arc(u, v))
            bad("edge list line " + std::to_string(lineno) + ": duplicate arc");
        d.add_arc(u, v);
    }
    if (next_data_line(in, line, lineno))
        bad("edge list line " + std::to_string(lineno) + ": more arcs than announced");
    return d;
}

Digraph read_edge_list_file(const std::string &path)
{
    std::ifstream f(path);
    if (!f)
        bad("cannot open " + path);
    return read_edge_list(f);
}

void write_edge_list(std::ostream &out, const Digraph &d, const std::vector<std::string> &header)
{
    for (const auto &h : header)
        out << "# " << h << '\n';
    out << d.order() << ' ' << d.size() << '\n';
    for (const auto &a : d.arcs())
        out << a.tail << ' ' << a.head << '\n';
}

void write_dot(std::ostream &out, const Digraph &d, const std::string &name)
{
    out << "digraph " << name << " {\n";
    for (Vertex v = 0; v < d.order(); ++v)
        out << "  " << v << ";\n";
    for (const auto &a : d.arcs())
        out << "  " << a.tail << " -> " << a.head << ";\n";
    out << "}\n";
}

// ---------------------------------------------------------------------------

std::string to_string(Theorem t)
{
    switch (t) {
    case Theorem::p211:
        return "p211";
    case Theorem::bk11:
        return "bk11";
    case Theorem::bk1k:
        return "bk1k";
    }
    return "?";
}

Theorem parse_theorem(const std::string &name)
{
    for (Theorem t : {Theorem::p211, Theorem::bk11, Theorem::bk1k})
        if (to_string(t) == name)
            return t;
    bad("unknown theorem \"" + name + "\" (expected p211, bk11 or bk1k)");
}

int theorem_min_k(Theorem t) { return t == Theorem::p211 ? 2 : t == Theorem::bk11 ? 3 : 1; }

BispindlePattern theorem_pattern(Theorem t, int k)
{
    switch (t) {
    case Theorem::p211:
        return BispindlePattern::b(2, 1, 1);
    case Theorem::bk11:
        return BispindlePattern::b(k, 1, 1);
    case Theorem::bk1k:
        return BispindlePattern::b(k, 1, k);
    }
    return {};
}

BigInt theorem_bound(Theorem t, int k)
{
    switch (t) {
    case Theorem::p211:
        return 3;
    case Theorem::bk11:
        return BigInt(2 * k - 2) * (2 * k - 3);
    case Theorem::bk1k:
        return compute_bounds(k).gamma;
    }
    return 0;
}

Certificate make_certificate(Theorem t, int k, const std::variant<Coloring, SubdivisionWitness> &result)
{
    if (t == Theorem::p211)
        k = 2;
    return Certificate{t, k, theorem_bound(t, k), theorem_pattern(t, k).to_string(), result};
}

namespace {
    json bound_to_json(const BigInt &b)
    {
        if (b <= BigInt(std::numeric_limits<std::int64_t>::max()))
            return b.convert_to<std::int64_t>();
        return b.str();
    }

    BigInt bound_from_json(const json &j)
    {
        if (j.is_number_unsigned() || j.is_number_integer())
            return BigInt(j.get<std::int64_t>());
        if (j.is_string()) {
            const auto &s = j.get_ref<const std::string &>();
            if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
                bad("certificate: bound is not a decimal integer");
            return BigInt(s);
        }
        bad("certificate: bound is not an integer");
    }

    json path_to_json(const DiPath &p) { return p.vertices; }

    DiPath path_from_json(const json &j)
    {
        if (!j.is_array())
            bad("certificate: path is not an array");
        DiPath p;
        for (const auto &v : j) {
            if (!v.is_number_integer())
                bad("certificate: path vertex is not an integer");
            p.vertices.push_back(v.get<Vertex>());
        }
        return p;
    }

    const json &field(const json &j, const char *name)
    {
        if (!j.is_object() || !j.contains(name))
            bad(std::string("certificate: missing field \"") + name + "\"");
        return j.at(name);
    }
}

std::string certificate_to_json(const Certificate &c)
{
    json j;
    j["theorem"] = to_string(c.theorem);
    j["parameter"] = c.parameter;
    j["pattern"] = c.pattern;
    j["bound"] = bound_to_json(c.bound);
    if (const auto *col = std::get_if<Coloring>(&c.payload)) {
        j["kind"] = "coloring";
        j["coloring"] = {{"colors", col->colors}, {"bound", col->bound}};
    } else {
        const auto &w = std::get<SubdivisionWitness>(c.payload);
        json fwd = json::array(), bwd = json::array();
        for (const auto &p : w.forward)
            fwd.push_back(path_to_json(p));
        for (const auto &p : w.backward)
            bwd.push_back(path_to_json(p));
        j["kind"] = "witness";
        j["witness"] = {{"x", w.x}, {"y", w.y}, {"forward", fwd}, {"backward", bwd}};
    }
    return j.dump(2) + "\n";
}

Certificate parse_certificate(const std::string &text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        bad(std::string("certificate: ") + e.what());
    }
    try {
        Certificate c;
        c.theorem = parse_theorem(field(j, "theorem").get<std::string>());
        c.parameter = field(j, "parameter").get<int>();
        c.pattern = field(j, "pattern").get<std::string>();
        c.bound = bound_from_json(field(j, "bound"));
        const auto kind = field(j, "kind").get<std::string>();
        if (kind == "coloring") {
            const auto &p = field(j, "coloring");
            c.payload = Coloring{field(p, "colors").get<std::vector<Color>>(), field(p, "bound").get<Color>()};
        } else if (kind == "witness") {
            const auto &p = field(j, "witness");
            SubdivisionWitness w;
            w.x = field(p, "x").get<Vertex>();
            w.y = field(p, "y").get<Vertex>();
            for (const auto &q : field(p, "forward"))
                w.forward.push_back(path_from_json(q));
            for (const auto &q : field(p, "backward"))
                w.backward.push_back(path_from_json(q));
            c.payload = w;
        } else {
            bad("certificate: kind must be \"coloring\" or \"witness\"");
        }
        return c;
    } catch (const json::exception &e) {
        bad(std::string("certificate: ") + e.what());
    }
}

Verdict verify_certificate(const Digraph &d, const Certificate &c)
{
    Verdict v;
    auto fail = [&](std::string why) { v.reasons.push_back(std::move(why)); };
    if (c.parameter < theorem_min_k(c.theorem) || (c.theorem == Theorem::p211 && c.parameter != 2)) {
        fail("parameter out of range for " + to_string(c.theorem));
        return v;
    }
    const auto pat = theorem_pattern(c.theorem, c.parameter);
    if (c.pattern != pat.to_string())
        fail("pattern \"" + c.pattern + "\" is not " + pat.to_string());
    if (c.bound != theorem_bound(c.theorem, c.parameter))
        fail("bound differs from the theorem's bound");

    if (const auto *col = std::get_if<Coloring>(&c.payload)) {
        if (static_cast<int>(col->colors.size()) != d.order())
            fail("colouring has " + std::to_string(col->colors.size()) + " entries for " +
                 std::to_string(d.order()) + " vertices");
        else if (!is_proper(d, *col))
            fail("colouring is not proper or leaves its declared range");
        if (col->bound < 0 || BigInt(col->bound) > c.bound)
            fail("colouring declares more colours than the bound");
    } else {
        auto check = check_witness(d, pat, std::get<SubdivisionWitness>(c.payload));
        for (auto &r : check.reasons)
            fail("witness: " + r);
        if (!check.valid && check.reasons.empty())
            fail("witness rejected");
    }
    v.valid = v.reasons.empty();
    return v;
}

} // namespace spindle
