#include "extract_util.hpp"

#include <spindle/extremal.hpp>

#include <algorithm>
#include <stdexcept>

namespace spindle {

using namespace detail;

namespace {
    std::vector<std::vector<int>> groups_of(const SuitableCollection &c)
    {
        auto comp = cycle_components(c.cycles);
        int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
        std::vector<std::vector<int>> out(static_cast<std::size_t>(count));
        for (std::size_t i = 0; i < comp.size(); ++i)
            out[static_cast<std::size_t>(comp[i])].push_back(static_cast<int>(i));
        return out;
    }

    std::vector<std::vector<Vertex>> parts_of(const SuitableCollection &c,
                                              const std::vector<std::vector<int>> &groups)
    {
        std::vector<std::vector<Vertex>> parts;
        for (const auto &g : groups)
            parts.push_back(cycles_vertices(c, g));
        return parts;
    }

    bool fits(const DiCycle &a, const DiCycle &b, int k)
    {
        auto p = common_subpath(a, b);
        return p && static_cast<int>(p->vertices.size()) <= k;
    }

    /// The grown cycle and a member meet badly.
    std::optional<SubdivisionWitness> nocycle_candidates(const Digraph &d, int k, const DiCycle &member,
                                                         const DiCycle &grown)
    {
        const auto pat = pattern_of(k);
        if (auto w = two_cycle_witness(d, pat, member, grown))
            return w;
        if (auto w = two_cycle_witness(d, pat, grown, member))
            return w;
        std::vector<char> on_member(static_cast<std::size_t>(d.order()), 0), on_grown = on_member;
        for (Vertex v : member.vertices)
            on_member[static_cast<std::size_t>(v)] = 1;
        for (Vertex v : grown.vertices)
            on_grown[static_cast<std::size_t>(v)] = 1;
        for (const auto &ear : ears_along(grown.vertices, true, on_member))
            if (auto w = ear_witness(d, pat, member, ear))
                return w;
        for (const auto &ear : ears_along(member.vertices, true, on_grown))
            if (auto w = ear_witness(d, pat, grown, ear))
                return w;
        return std::nullopt;
    }
}

std::variant<DiCycle, SubdivisionWitness> extend_suitable(const Digraph &d, const SuitableCollection &c,
                                                          const Contraction &con, const DiCycle &quotient_cycle,
                                                          const SuitableOptions &opt)
{
    const int k = c.k;
    if (!is_dicycle(con.quotient, quotient_cycle))
        throw PreconditionError("extend_suitable: not a directed cycle of the contraction");
    if (quotient_cycle.length() < 8 * k)
        throw PreconditionError("extend_suitable: quotient cycle shorter than 8k");
    const int l = quotient_cycle.length();

    // least arc realising each quotient arc
    std::vector<Arc> realised(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) {
        Vertex a = quotient_cycle.at(i), b = quotient_cycle.at(i + 1);
        bool found = false;
        for (Vertex t : con.preimage[static_cast<std::size_t>(a)]) {
            for (Vertex h : d.out(t))
                if (con.image[static_cast<std::size_t>(h)] == b) {
                    realised[static_cast<std::size_t>(i)] = {t, h};
                    found = true;
                    break;
                }
            if (found)
                break;
        }
        if (!found)
            throw std::logic_error("extend_suitable: quotient arc without a host arc");
    }
    std::vector<Vertex> expanded;
    for (int i = 0; i < l; ++i) {
        Vertex x = quotient_cycle.at(i);
        Vertex entry = realised[static_cast<std::size_t>((i + l - 1) % l)].head;
        Vertex exit = realised[static_cast<std::size_t>(i)].tail;
        auto allowed = mask_of(d.order(), con.preimage[static_cast<std::size_t>(x)]);
        auto pi = path_within(d, entry, exit, allowed);
        if (!pi)
            throw std::logic_error("extend_suitable: component is not strong");
        expanded.insert(expanded.end(), pi->vertices.begin(), pi->vertices.end());
    }
    DiCycle grown{expanded};

    for (const auto &m : c.cycles) {
        if (fits(m, grown, k))
            continue;
        auto built = nocycle_candidates(d, k, m, grown);
        if (!built)
            if (auto w = nocycle_candidates(d.reversed(), k, m.reversed(), grown.reversed()))
                built = reverse_witness(*w);
        return finish(d, k, built, sorted_unique([&] {
                          auto v = m.vertices;
                          v.insert(v.end(), grown.vertices.begin(), grown.vertices.end());
                          return v;
                      }()),
                      opt, "cl:nocycle");
    }
    return grown;
}

ColoringOrWitness certify_b_k1k(const Digraph &d, int k, const SuitableOptions &opt)
{
    if (k < 1)
        throw PreconditionError("certify_b_k1k: k must be at least 1");
    if (!is_strong(d))
        throw PreconditionError("certify_b_k1k: digraph must be strong");
    const auto pat = pattern_of(k);
    auto checked = [&](const SubdivisionWitness &w) -> ColoringOrWitness {
        if (!verify_witness(d, pat, w))
            throw std::logic_error("certify_b_k1k: produced witness does not verify");
        return w;
    };
    auto last_resort = [&](const std::string &what) -> ColoringOrWitness {
        auto r = find_subdivision(d, pat, opt.search);
        if (r.status == Detection::found)
            return checked(*r.witness);
        note(opt, what + ":colouring");
        return dsatur_coloring(d);
    };

    SuitableCollection c{k, {}};
    while (true) {
        auto groups = groups_of(c);
        auto parts = parts_of(c, groups);
        auto con = contract(d, parts);
        std::variant<DiCycle, Coloring> cert = Coloring{std::vector<Color>(1, 0), 1};
        if (con.quotient.order() > 1)
            cert = bondy_certifier(con.quotient, 8 * k);
        if (auto *qc = std::get_if<DiCycle>(&cert)) {
            std::variant<DiCycle, SubdivisionWitness> grown;
            try {
                grown = extend_suitable(d, c, con, *qc, opt);
            } catch (const PreconditionError &) {
                throw;
            } catch (const std::logic_error &) {
                return last_resort("cl:nocycle");
            }
            if (auto *w = std::get_if<SubdivisionWitness>(&grown))
                return checked(*w);
            c.cycles.push_back(std::get<DiCycle>(grown));
            if (!validate_suitable(d, c))
                throw std::logic_error("certify_b_k1k: collection lost suitability");
            continue;
        }
        const Coloring &quotient_coloring = std::get<Coloring>(cert);

        std::vector<Coloring> part_colorings;
        for (const auto &g : groups) {
            std::variant<Coloring, SubdivisionWitness> r;
            try {
                r = color_component_suitable(d, c, g, opt);
            } catch (const PreconditionError &) {
                throw;
            } catch (const std::logic_error &) {
                return last_resort("component");
            }
            if (auto *w = std::get_if<SubdivisionWitness>(&r))
                return checked(*w);
            part_colorings.push_back(std::get<Coloring>(r));
        }
        Coloring result = lift_contraction_coloring(d, parts, part_colorings, quotient_coloring);
        if (!is_proper(d, result) || BigInt(result.bound) > compute_bounds(k).gamma)
            throw std::logic_error("certify_b_k1k: lifted colouring fails its bound");
        return result;
    }
}

} // namespace spindle
