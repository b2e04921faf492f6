#pragma once

#include <spindle/digraph.hpp>

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace spindle {

using Color = std::int64_t;

/// Vertex colouring with an explicitly declared palette size. Colours are
/// dense from 0, so "uses at most B colours" means every entry is < bound.
struct Coloring {
    std::vector<Color> colors;
    Color bound = 0;

    bool operator==(const Coloring &) const = default;
};

/// True iff every vertex has a colour in [0, bound) and adjacent vertices of
/// the underlying graph differ.
bool is_proper(const Digraph &d, const Coloring &c);

/// Number of distinct colours actually used.
Color colors_used(const Coloring &c);

/// Renumbers used colours to 0..used-1 in order of first appearance and sets
/// bound to the number used.
Coloring compact(const Coloring &c);

/// Degeneracy of the underlying graph with its smallest-last order.
std::pair<int, std::vector<Vertex>> degeneracy_order(const Digraph &d);

/// Greedy colouring along the reverse of the smallest-last order;
/// bound = degeneracy + 1.
Coloring degeneracy_coloring(const Digraph &d);

/// DSATUR greedy colouring; bound = colours used.
Coloring dsatur_coloring(const Digraph &d);

/// Brooks: at most max degree colours unless the underlying graph is complete
/// or an odd cycle (then max degree + 1). Underlying graph must be connected.
Coloring brooks_coloring(const Digraph &d);

class TooLargeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ChromaticResult {
    int chromatic_number = 0;
    Coloring coloring;
};

inline constexpr int default_exact_limit = 40;

/// Exact chromatic number of the underlying graph by DSATUR branch and bound
/// with a greedy clique lower bound. Throws TooLargeError above `limit`.
ChromaticResult exact_chromatic(const Digraph &d, int limit = default_exact_limit);

/// Pair colouring (c1(v), c2(v)) as c1(v) * c2.bound + c2(v).
Coloring product_coloring(const Coloring &c1, const Coloring &c2);

struct Contraction {
    Digraph quotient;
    /// quotient vertex of every host vertex
    std::vector<Vertex> image;
    /// host vertices of every quotient vertex, sorted
    std::vector<std::vector<Vertex>> preimage;
};

/// Contracts every part into one vertex (parts first, in order, then the
/// remaining vertices in increasing order). Loops are dropped, parallel arcs
/// merged.
Contraction contract(const Digraph &d, std::span<const std::vector<Vertex>> parts);

/// Lifts a quotient colouring and proper part colourings to a colouring of d
/// with bound quotient.bound * max part bound. Vertices outside every part
/// take part-colour 0. Throws PreconditionError on improper inputs.
Coloring lift_contraction_coloring(const Digraph &d, std::span<const std::vector<Vertex>> parts,
                                   std::span<const Coloring> part_colorings, const Coloring &quotient_coloring);

/// True iff all vertices of p have pairwise distinct colours.
bool is_rainbow(const Digraph &d, const Coloring &c, const DiPath &p);
bool is_rainbow(const Coloring &c, std::span<const Vertex> vertices);

} // namespace spindle
