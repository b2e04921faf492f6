#pragma once

// Single-field mutations of a certificate, each one making it invalid.

#include <spindle/io.hpp>

#include <string>

namespace tamper {

using namespace spindle;

inline constexpr int kinds = 4;

/// Applies mutation `kind` (0..kinds-1) and names it.
inline std::string apply(const Digraph &d, Certificate &c, int kind)
{
    switch (kind) {
    case 1:
        c.bound += 1;
        return "claimed bound";
    case 2:
        c.pattern = c.theorem == Theorem::p211 ? "B(3,1;1)" : theorem_pattern(c.theorem, c.parameter + 1).to_string();
        return "pattern";
    case 3:
        c.parameter += 1;
        return "parameter";
    default:
        break;
    }
    if (auto *col = std::get_if<Coloring>(&c.payload)) {
        // one colour copied across an arc
        auto arcs = d.arcs();
        const auto &a = arcs.at(static_cast<std::size_t>(arcs.size() / 2));
        col->colors.at(static_cast<std::size_t>(a.head)) = col->colors.at(static_cast<std::size_t>(a.tail));
        return "colour of " + std::to_string(a.head);
    }
    auto &w = std::get<SubdivisionWitness>(c.payload);
    for (auto *paths : {&w.forward, &w.backward})
        for (auto &p : *paths)
            if (p.vertices.size() > 2) {
                p.vertices[p.vertices.size() / 2] = w.y;
                return "path vertex";
            }
    w.forward.front().vertices.back() = w.x;
    return "path end";
}

} // namespace tamper
