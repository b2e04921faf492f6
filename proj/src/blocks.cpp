#include <spindle/coloring.hpp>
#include <spindle/digraph.hpp>

namespace spindle {

InducedSubdigraph max_chi_strong_block(const Digraph &d)
{
    if (d.size() == 0 || !is_strong(d))
        throw PreconditionError("max_chi_strong_block: digraph must be strong with at least one arc");
    std::optional<InducedSubdigraph> best;
    int best_chi = -1;
    for (const auto &block : underlying_blocks(d)) {
        auto sub = induced_subdigraph(d, block);
        int chi = exact_chromatic(sub.graph).chromatic_number;
        if (chi > best_chi) {
            best_chi = chi;
            best = std::move(sub);
        }
    }
    return *best;
}

} // namespace spindle
