#pragma once

#include <spindle/bounds.hpp>
#include <spindle/coloring.hpp>
#include <spindle/digraph.hpp>
#include <spindle/nice.hpp>
#include <spindle/spindles.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace spindle {

/// Cycles of length >= 8k, any two meeting in a common subpath of order <= k
/// (possibly empty).
struct SuitableCollection {
    int k = 1;
    std::vector<DiCycle> cycles;
};

/// The intersection of a and b when it is a subpath of both, traversed in the
/// same direction; an empty path when they are disjoint; nullopt otherwise.
std::optional<DiPath> common_subpath(const DiCycle &a, const DiCycle &b);

bool validate_suitable(const Digraph &d, const SuitableCollection &c);

/// Same collection in the reversed digraph.
SuitableCollection reversed(const SuitableCollection &c);

/// Knobs shared by the extraction routines.
struct SuitableOptions {
    SearchOptions search;
    /// Gallai-Roy thresholds; 0 means the theorem's values (6k^2)^{3k} and
    /// (4k)^{4k}. Smaller values force the long-dipath extractions.
    std::int64_t plus_path_limit = 0;
    std::int64_t level_path_limit = 0;
    /// When set, every extraction appends "<name>:construction" or
    /// "<name>:search" depending on how its witness was obtained.
    std::vector<std::string> *trace = nullptr;
};

// ---------------------------------------------------------------------------
// Interface of a member cycle

enum class DisCase {
    /// C2[t12,v] and C3[t13,v] both shorter than 3k
    after_terminal,
    /// C2[v,s12] and C3[v,s13] both shorter than 3k
    before_initial,
};

/// Classifies v in C2 and C3 but not C1 (members i1, i2, i3, pairwise
/// intersecting), or returns a B(k,1;k)-subdivision.
std::variant<DisCase, SubdivisionWitness> dis_classify(const Digraph &d, const SuitableCollection &c, int i1, int i2,
                                                       int i3, Vertex v, const SuitableOptions &opt = {});

struct InterfacePart {
    int cycle = 0;
    /// intersection with the centre, s = front, t = back
    DiPath shared;
    /// from 3k before s to 3k after t along the member
    DiPath q;
    /// the 3k vertices before s and after t
    std::vector<Vertex> q_minus;
    std::vector<Vertex> q_plus;
};

struct Interface {
    int center = 0;
    std::vector<InterfacePart> parts;
    /// sorted vertex sets of I+(C1), I-(C1) and I(C1)
    std::vector<Vertex> plus;
    std::vector<Vertex> minus;
    std::vector<Vertex> all;
};

/// I(C1) for member `center`. Members that would break the disjointness of
/// I+ and I- are reported through a classification witness.
std::variant<Interface, SubdivisionWitness> build_interface(const Digraph &d, const SuitableCollection &c, int center,
                                                            const SuitableOptions &opt = {});

/// The union of the Q+ (or Q-) paths as a spanning subdigraph.
Digraph interface_digraph(int n, const Interface &in, const SuitableCollection &c, bool plus);

/// Fake-arc digraph: every Q+ (or Q-) completed to a transitive tournament.
Digraph fake_arc_digraph(int n, const Interface &in, const SuitableCollection &c, bool plus);

/// nullopt when I+(C1) and I-(C1) are acyclic; otherwise a witness built from
/// a directed cycle there.
std::optional<SubdivisionWitness> check_acyclic_interface(const Digraph &d, const SuitableCollection &c,
                                                          const Interface &in, const SuitableOptions &opt = {});

/// Witness from a directed cycle `cyc` of I+(C1).
SubdivisionWitness no_dicycle_extract(const Digraph &d, const SuitableCollection &c, const Interface &in,
                                      const DiCycle &cyc, const SuitableOptions &opt = {});

/// Witness from a dipath of I+(C1) too long for the fake-arc colouring.
SubdivisionWitness plus_path_extract(const Digraph &d, const SuitableCollection &c, const Interface &in,
                                     const DiPath &path, const SuitableOptions &opt = {});

// ---------------------------------------------------------------------------
// Rainbow colourings

/// Colour -1 marks an uncoloured vertex in partial colourings.
inline constexpr Color uncoloured = -1;

/// Extends `partial` (size n; coloured vertices lie on the centre within a
/// subpath of length <= 7k and carry distinct colours) to I(C1): every subpath
/// of C1 of length <= 7k and every Q_j rainbow. Throws PreconditionError on an
/// invalid partial colouring.
std::variant<Coloring, SubdivisionWitness> rainbow_extend(const Digraph &d, const SuitableCollection &c, int center,
                                                          const Coloring &partial, const SuitableOptions &opt = {});

/// True iff every subpath of length <= 7k of every member is rainbow.
bool windows_rainbow(const SuitableCollection &c, const Coloring &col);

/// Colouring of every vertex of the union (others uncoloured) with the
/// window property, or a witness.
std::variant<Coloring, SubdivisionWitness> color_union(const Digraph &d, const SuitableCollection &c,
                                                       const SuitableOptions &opt = {});

// ---------------------------------------------------------------------------
// Level decomposition of a component

struct LevelDecomposition {
    /// member indices of the component, ascending
    std::vector<int> cycles;
    int root = 0;
    /// per member index (-1 outside the component or for the root)
    std::vector<int> father;
    std::vector<int> cycle_level;
    std::vector<std::vector<int>> levels;
    /// per vertex (-1 outside the union)
    std::vector<int> vertex_level;
    /// ends of the intersection with the father, per member (unused for the
    /// root and outside the component)
    std::vector<Vertex> s_father, t_father;
    /// markers per member, same convention
    std::vector<Vertex> p_plus, r_plus, p_minus, r_minus;
    /// per vertex: 0 outside, 1 in X+, 2 in X-, 3 in X'
    std::vector<char> side;
    /// ascending vertices of the union of the component
    std::vector<Vertex> vertices;

    bool in_plus(Vertex v) const { return side[static_cast<std::size_t>(v)] == 1; }
    bool in_minus(Vertex v) const { return side[static_cast<std::size_t>(v)] == 2; }
    bool in_prime(Vertex v) const { return side[static_cast<std::size_t>(v)] == 3; }
};

/// The decomposition seen in the reversed digraph: ends and markers swap
/// sides, X+ and X- swap outside the root.
LevelDecomposition reversed(const LevelDecomposition &ld);

/// Membership of v in P+_l, R+_l, P-_l, R-_l of member l (l not the root).
bool in_p_plus(const SuitableCollection &c, const LevelDecomposition &ld, int l, Vertex v);
bool in_r_plus(const SuitableCollection &c, const LevelDecomposition &ld, int l, Vertex v);
bool in_p_minus(const SuitableCollection &c, const LevelDecomposition &ld, int l, Vertex v);
bool in_r_minus(const SuitableCollection &c, const LevelDecomposition &ld, int l, Vertex v);

/// 0: same level (A0), 1: gap below k (A1), 2: gap at least k (A2).
int arc_class(const LevelDecomposition &ld, int k, Vertex u, Vertex v);

/// BFS by intersection from `root` over the component `members`; the father
/// of a member is the least-index intersecting member of the previous level.
std::variant<LevelDecomposition, SubdivisionWitness> level_decompose(const Digraph &d, const SuitableCollection &c,
                                                                     const std::vector<int> &members, int root,
                                                                     const SuitableOptions &opt = {});

/// Colouring of D[S] indexed by the ascending vertices of the union of S,
/// assembled as the product of the same-level, near-level and far-level
/// colourings, or a witness.
std::variant<Coloring, SubdivisionWitness> color_component_suitable(const Digraph &d, const SuitableCollection &c,
                                                                    const std::vector<int> &members,
                                                                    const SuitableOptions &opt = {});

// ---------------------------------------------------------------------------
// Main loop

/// Expands a cycle of length >= 8k of the quotient by the components of c
/// into a cycle of d; returns it when c plus the cycle stays suitable,
/// otherwise a B(k,1;k)-subdivision.
std::variant<DiCycle, SubdivisionWitness> extend_suitable(const Digraph &d, const SuitableCollection &c,
                                                          const Contraction &con, const DiCycle &quotient_cycle,
                                                          const SuitableOptions &opt = {});

/// Colouring with at most gamma_k colours or a B(k,1;k)-subdivision. d
/// strong, k >= 1. Both branches verified before returning.
ColoringOrWitness certify_b_k1k(const Digraph &d, int k, const SuitableOptions &opt = {});

} // namespace spindle
