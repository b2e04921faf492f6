#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace spindle {

using Vertex = int;

/// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Arc {
    Vertex tail = 0;
    Vertex head = 0;
    auto operator<=>(const Arc &) const = default;
};

/// Simple digraph on vertices 0..n-1: no loops, at most one arc per ordered
/// pair. Digons are allowed.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n);
    Digraph(int n, std::span<const Arc> arcs);

    /// Throws PreconditionError on loops, duplicates and out-of-range ends.
    void add_arc(Vertex u, Vertex v);

    int order() const { return n_; }
    std::size_t size() const { return arc_count_; }

    bool has_arc(Vertex u, Vertex v) const
    {
        return matrix_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)] != 0;
    }
    bool adjacent(Vertex u, Vertex v) const { return has_arc(u, v) || has_arc(v, u); }

    std::span<const Vertex> out(Vertex u) const { return out_[static_cast<std::size_t>(u)]; }
    std::span<const Vertex> in(Vertex u) const { return in_[static_cast<std::size_t>(u)]; }
    int out_degree(Vertex u) const { return static_cast<int>(out(u).size()); }
    int in_degree(Vertex u) const { return static_cast<int>(in(u).size()); }

    /// Neighbours in the underlying graph, sorted, without repetition.
    std::vector<Vertex> neighbours(Vertex u) const;
    int underlying_degree(Vertex u) const { return static_cast<int>(neighbours(u).size()); }

    /// All arcs in lexicographic order.
    std::vector<Arc> arcs() const;

    Digraph reversed() const;

    bool operator==(const Digraph &other) const;

private:
    int n_ = 0;
    std::size_t arc_count_ = 0;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
    std::vector<unsigned char> matrix_;
};

/// An induced subdigraph together with the host vertex of every local vertex.
struct InducedSubdigraph {
    Digraph graph;
    std::vector<Vertex> to_host;
};

InducedSubdigraph induced_subdigraph(const Digraph &d, std::span<const Vertex> vertices);

/// Directed path: distinct vertices, consecutive pairs are arcs.
struct DiPath {
    std::vector<Vertex> vertices;

    Vertex source() const { return vertices.front(); }
    Vertex target() const { return vertices.back(); }
    int length() const { return static_cast<int>(vertices.size()) - 1; }
    bool contains(Vertex v) const;
    DiPath reversed() const;
    bool operator==(const DiPath &) const = default;
};

/// Directed cycle given as a cyclic vertex sequence (last vertex -> first).
struct DiCycle {
    std::vector<Vertex> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    bool contains(Vertex v) const;
    /// Index of v in the sequence; -1 when absent.
    int index_of(Vertex v) const;
    Vertex at(int i) const;
    /// Number of arcs of C[a,b]; 0 when a == b.
    int distance(Vertex a, Vertex b) const;
    /// C[a,b]; a single vertex when a == b.
    DiPath segment(Vertex a, Vertex b) const;
    /// C]a,b[ as a vertex list (possibly empty).
    std::vector<Vertex> interior(Vertex a, Vertex b) const;
    /// Vertex reached from a after `steps` arcs (steps may be negative).
    Vertex step(Vertex a, int steps) const;
    DiCycle reversed() const;
    bool operator==(const DiCycle &) const = default;
};

bool is_dipath(const Digraph &d, const DiPath &p);
bool is_dicycle(const Digraph &d, const DiCycle &c);

/// P ⊙ Q: requires t(P) = s(Q) and no other common vertex.
DiPath concat(const DiPath &p, const DiPath &q);

// ---------------------------------------------------------------------------
// Connectivity

/// Strong components in a topological order of the condensation (sources
/// first); each component is sorted.
std::vector<std::vector<Vertex>> strong_components(const Digraph &d);

bool is_strong(const Digraph &d);

/// Vertices reachable from `from` (including it) using only vertices for which
/// allowed[v] is true. An empty mask allows everything.
std::vector<char> reachable(const Digraph &d, Vertex from, const std::vector<char> &allowed = {});

/// Shortest dipath from any vertex of `sources` to any vertex with
/// is_target[v], using only vertices with allowed[v] (sources and targets are
/// always allowed). Ties break towards smaller vertex ids.
std::optional<DiPath> shortest_path(const Digraph &d, std::span<const Vertex> sources,
                                    const std::vector<char> &is_target,
                                    const std::vector<char> &allowed = {});
std::optional<DiPath> shortest_path(const Digraph &d, Vertex from, Vertex to,
                                    const std::vector<char> &allowed = {});

/// Connected components of the underlying graph, each sorted, ordered by
/// least vertex.
std::vector<std::vector<Vertex>> connected_components(const Digraph &d);
bool is_connected(const Digraph &d);

/// Blocks (maximal 2-connected subgraphs, bridges and isolated vertices
/// included) of the underlying graph, each sorted, ordered lexicographically.
std::vector<std::vector<Vertex>> underlying_blocks(const Digraph &d);
bool is_two_connected(const Digraph &d);

/// Block of the underlying graph with largest exact chromatic number.
/// d must be strong with at least one arc.
InducedSubdigraph max_chi_strong_block(const Digraph &d);

/// Directed ear of f in d: a dipath of length >= 1 whose two (distinct) ends
/// lie in f and whose internal vertices do not, and which is not an arc of f.
/// f lives on the same vertex set as d; its vertices are the non-isolated
/// ones.
DiPath find_directed_ear(const Digraph &d, const Digraph &f);

/// Shortest directed cycle; ties broken by the lexicographically least
/// sequence starting at its least vertex. nullopt when d is acyclic.
std::optional<DiCycle> shortest_directed_cycle(const Digraph &d);

/// Number of blocks (maximal directed subpaths) of the oriented cycle given by
/// a cyclic vertex sequence of the underlying graph. A fully directed cycle
/// counts as 1.
int blocks_of_cycle(const Digraph &d, std::span<const Vertex> cycle);

/// Directed cycle of length >= min_length, found by exhaustive search; the
/// first one in a fixed order. nullopt when none exists.
std::optional<DiCycle> find_long_cycle(const Digraph &d, int min_length);

} // namespace spindle
