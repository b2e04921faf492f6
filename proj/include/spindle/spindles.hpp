#pragma once

#include <spindle/digraph.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace spindle {

/// Minimum lengths of the (x,y)-dipaths (forward) and (y,x)-dipaths (backward).
struct BispindlePattern {
    std::vector<int> forward;
    std::vector<int> backward;

    /// B(k1,k2;k3)
    static BispindlePattern b(int k1, int k2, int k3) { return {{k1, k2}, {k3}}; }
    /// p internally disjoint (x,y)-dipaths
    static BispindlePattern spindle(int p) { return {std::vector<int>(static_cast<std::size_t>(p), 1), {}}; }
    /// (p+q)-bispindle
    static BispindlePattern bispindle(int p, int q)
    {
        return {std::vector<int>(static_cast<std::size_t>(p), 1), std::vector<int>(static_cast<std::size_t>(q), 1)};
    }

    /// Parses "a,b,...:c,..." (backward part optional). Throws PreconditionError.
    static BispindlePattern parse(const std::string &text);
    std::string to_string() const;

    bool operator==(const BispindlePattern &) const = default;
};

struct SubdivisionWitness {
    Vertex x = 0;
    Vertex y = 0;
    std::vector<DiPath> forward;
    std::vector<DiPath> backward;

    bool operator==(const SubdivisionWitness &) const = default;
};

struct WitnessCheck {
    bool valid = false;
    std::vector<std::string> reasons;
    explicit operator bool() const { return valid; }
};

/// Full check with reasons for every violated condition.
WitnessCheck check_witness(const Digraph &d, const BispindlePattern &pat, const SubdivisionWitness &w);
bool verify_witness(const Digraph &d, const BispindlePattern &pat, const SubdivisionWitness &w);

/// Same witness in the reversed digraph: paths reversed, hubs swapped.
SubdivisionWitness reverse_witness(const SubdivisionWitness &w);
/// Relabels through `to_host` (local vertex i becomes to_host[i]).
SubdivisionWitness map_witness(const SubdivisionWitness &w, const std::vector<Vertex> &to_host);

enum class Detection { found, absent, unknown };
std::string to_string(Detection d);

struct DetectionResult {
    Detection status = Detection::unknown;
    std::optional<SubdivisionWitness> witness;
};

struct SearchOptions {
    /// search nodes allowed per hub pair; <= 0 means unlimited
    long long node_budget = 2'000'000;
    int threads = 1;
    /// all-1 pure spindles go through max-flow unless disabled
    bool use_flow = true;
};

/// Hub pairs in lexicographic order; the witness of the first successful pair
/// is returned. `absent` means every pair was searched to completion.
DetectionResult find_subdivision(const Digraph &d, const BispindlePattern &pat, const SearchOptions &opt = {});

/// find_subdivision on the subdigraph induced by `vertices`; a found witness
/// is mapped back to d.
std::optional<SubdivisionWitness> find_subdivision_within(const Digraph &d, std::span<const Vertex> vertices,
                                                          const BispindlePattern &pat, const SearchOptions &opt = {});

/// Up to `count` internally vertex-disjoint (x,y)-dipaths by unit vertex
/// capacity max-flow; nullopt when fewer exist. The arc (x,y), if present, is
/// one of them.
std::optional<std::vector<DiPath>> disjoint_dipaths(const Digraph &d, Vertex x, Vertex y, int count);

// ---------------------------------------------------------------------------
// Witnesses from a cycle plus an ear

/// Cycle b with an ear e from u to v (distinct vertices of b, internal
/// vertices off b): hubs (u,v), forward {e, b[u,v]}, backward {b[v,u]}.
/// Returned only if it verifies against pat.
std::optional<SubdivisionWitness> ear_witness(const Digraph &d, const BispindlePattern &pat, const DiCycle &b,
                                              const DiPath &e);

/// Tries every maximal subpath of a whose ends lie on b and whose interior
/// avoids b, as an ear of b.
std::optional<SubdivisionWitness> two_cycle_witness(const Digraph &d, const BispindlePattern &pat, const DiCycle &a,
                                                    const DiCycle &b);

/// Maximal subpaths of `walk` (a path, or a cycle when `cyclic`) running
/// between two distinct vertices with on[v] set, interior avoiding them.
std::vector<DiPath> ears_along(const std::vector<Vertex> &walk, bool cyclic, const std::vector<char> &on);

// ---------------------------------------------------------------------------
// Tournaments and small chromatic number

bool is_tournament(const Digraph &t);

/// Hamiltonian directed cycle of a strong tournament on >= 3 vertices.
DiCycle camion_hamiltonian_cycle(const Digraph &t);

/// B(k,1;1)-subdivision in a strong tournament of order 2k-1, k >= 3.
SubdivisionWitness tournament_b_k11(const Digraph &t, int k);

/// B(2,1;1)-subdivision in a strong digraph of chromatic number >= 4.
SubdivisionWitness extract_b211(const Digraph &d);

} // namespace spindle
