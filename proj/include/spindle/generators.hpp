#pragma once

#include <spindle/digraph.hpp>
#include <spindle/spindles.hpp>

#include <cstdint>
#include <optional>

namespace spindle {

/// Directed cycle 0 -> 1 -> ... -> n-1 -> 0; n odd and >= 3.
Digraph odd_dicycle(int n);

/// R_{2k-1}: arc (i,j) iff (j - i) mod (2k-1) lies in [1, k-1]. k >= 2.
Digraph rotative_tournament(int k);

/// Every ordered pair is an arc.
Digraph bidirected_complete(int n);

/// Arc (i,j) iff i < j.
Digraph transitive_tournament(int n);

/// Independent arcs with probability p, resampled a few times until strong,
/// then completed with a random Hamiltonian cycle. Deterministic per seed.
Digraph random_strong_digraph(int n, double p, std::uint64_t seed);

/// Uniform random tournament, resampled until strong. n >= 3.
Digraph random_strong_tournament(int n, std::uint64_t seed);

/// Acyclic, every cycle of the underlying graph has >= b blocks, and
/// chromatic number > k. nullopt when the cycle enumeration budget or the
/// exact colouring limit is exceeded.
std::optional<bool> validate_dkb(const Digraph &d, int k, int b, long long budget = 5'000'000);

/// Seeded random search among acyclic orientations on n vertices for an
/// instance passing validate_dkb.
std::optional<Digraph> search_dkb(int k, int b, int n, std::uint64_t seed, int attempts = 200'000);

struct Theorem3Instance {
    Digraph digraph;
    /// the arc (x_l, z) every directed cycle passes through
    Vertex x_last = 0;
    Vertex z = 0;
};

/// Adds the dipath x_1..x_l z y_1..y_m with arcs s_i x_i (S = sinks) and
/// y_j t_j (T = sources). dk4 must pass validate_dkb(dk4, k, 4).
Theorem3Instance theorem3_construct(const Digraph &dk4, int k);

/// Three internally disjoint dipaths with common ends, by max-flow per pair.
std::optional<SubdivisionWitness> detect_3spindle(const Digraph &d);

/// (2+2)-bispindle. Absent at once when every directed cycle uses one arc;
/// otherwise backtracking search.
DetectionResult detect_22bispindle(const Digraph &d, const SearchOptions &opt = {});

} // namespace spindle
