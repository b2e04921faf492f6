#pragma once

#include <spindle/coloring.hpp>
#include <spindle/digraph.hpp>
#include <spindle/spindles.hpp>

#include <variant>
#include <vector>

namespace spindle {

using ColoringOrWitness = std::variant<Coloring, SubdivisionWitness>;

/// Cycles of length >= 2k - 2 pairwise sharing at most one vertex.
struct NiceCollection {
    int k = 3;
    std::vector<DiCycle> cycles;
    /// component index of every cycle (components ordered by least cycle index)
    std::vector<int> component_of;
};

/// Components of the intersection graph of `cycles`: component_of per cycle,
/// numbered by least member index.
std::vector<int> cycle_components(const std::vector<DiCycle> &cycles);

/// Recomputes component_of from the cycles.
NiceCollection make_nice_collection(int k, std::vector<DiCycle> cycles);

/// Members of every component, by cycle index.
std::vector<std::vector<int>> component_members(const NiceCollection &c);

/// Sorted vertex set of the union of the given cycles.
std::vector<Vertex> union_vertices(const std::vector<DiCycle> &cycles);
/// The union of the cycles as a spanning subdigraph of d's vertex set.
Digraph union_digraph(int n, const std::vector<DiCycle> &cycles);

bool validate_nice(const Digraph &d, const NiceCollection &c);

/// A dipath p between two cycles of component s with no arc
/// in the union of s yields a B(k,1;1)-subdivision. k >= 3.
SubdivisionWitness headphone_extract(const Digraph &d, const std::vector<DiCycle> &s, const DiPath &p, int k,
                                     const SearchOptions &opt = {});

/// Colouring of D[S] with at most 2k - 2 colours, indexed by the sorted vertex
/// set of the union of s, or a B(k,1;1)-subdivision of d. k >= 3.
ColoringOrWitness color_component(const Digraph &d, const std::vector<DiCycle> &s, int k,
                                  const SearchOptions &opt = {});

/// Quotient of d by the components of c (component order, then the other
/// vertices ascending), as used by extend_or_extract and certify_b_k11.
Contraction nice_contraction(const Digraph &d, const NiceCollection &c);

/// Expands a cycle of length >= 2k - 2 of the quotient into a cycle of d that
/// meets each member in at most one vertex, or returns a B(k,1;1)-subdivision.
std::variant<DiCycle, SubdivisionWitness> extend_or_extract(const Digraph &d, const NiceCollection &c,
                                                            const DiCycle &quotient_cycle);

/// Colouring with at most (2k-2)(2k-3) colours or a B(k,1;1)-subdivision.
/// d strong, k >= 3. Both branches are verified before returning.
ColoringOrWitness certify_b_k11(const Digraph &d, int k, const SearchOptions &opt = {});

} // namespace spindle
