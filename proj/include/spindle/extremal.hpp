#pragma once

#include <spindle/coloring.hpp>
#include <spindle/digraph.hpp>

#include <variant>
#include <vector>

namespace spindle {

struct GallaiRoyResult {
    DiPath path;
    /// proper colouring with bound = number of vertices of `path`
    Coloring coloring;
};

/// Levels of a maximal acyclic spanning subdigraph (arcs added in
/// lexicographic order). Colour = level - 1; the returned dipath realises the
/// top level.
GallaiRoyResult gallai_roy_dipath(const Digraph &d);

/// Either a directed cycle of length >= k or a proper colouring with at most
/// k - 1 colours. d must be strong, k >= 2.
std::variant<DiCycle, Coloring> bondy_certifier(const Digraph &d, int k);

struct SequenceWitnessMin {
    /// increasing 0-based indices
    std::vector<int> indices;
    int common_value = 0;
};

struct SequenceWitnessMax {
    /// 0-based start of a window of `length` consecutive entries
    int start = 0;
    int length = 0;
};

/// For seq with values in [1, k] and |seq| >= l^k: l indices holding a common
/// value with strictly larger values strictly between any two of them.
SequenceWitnessMin lemma_min(const std::vector<int> &seq, int l, int k);

/// For seq with values in [1, k] and |seq| > k(m - 1): a window of m
/// consecutive entries whose last entry is >= every entry of the window.
SequenceWitnessMax lemma_max(const std::vector<int> &seq, int m, int k);

} // namespace spindle
