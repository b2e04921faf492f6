#pragma once

#include <spindle/bounds.hpp>
#include <spindle/coloring.hpp>
#include <spindle/digraph.hpp>
#include <spindle/nice.hpp>
#include <spindle/spindles.hpp>

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace spindle {

// ---------------------------------------------------------------------------
// Edge lists and DOT

/// "n m" then m lines "u v". Lines starting with '#' are comments. Throws
/// PreconditionError on malformed input, loops, duplicates and bad counts.
Digraph read_edge_list(std::istream &in);
Digraph read_edge_list_file(const std::string &path);

/// Arcs in lexicographic order after one "# " line per header entry.
void write_edge_list(std::ostream &out, const Digraph &d, const std::vector<std::string> &header = {});
void write_dot(std::ostream &out, const Digraph &d, const std::string &name = "D");

// ---------------------------------------------------------------------------
// Certificates

enum class Theorem {
    /// chromatic number >= 4 forces B(2,1;1)
    p211,
    /// more than (2k-2)(2k-3) colours force B(k,1;1)
    bk11,
    /// more than gamma_k colours force B(k,1;k)
    bk1k,
};

std::string to_string(Theorem t);
/// Throws PreconditionError on an unknown name.
Theorem parse_theorem(const std::string &name);

/// Pattern a witness certificate must realise.
BispindlePattern theorem_pattern(Theorem t, int k);
/// Colours a colouring certificate may use.
BigInt theorem_bound(Theorem t, int k);
/// Smallest admissible parameter.
int theorem_min_k(Theorem t);

struct Certificate {
    Theorem theorem = Theorem::p211;
    int parameter = 2;
    /// claimed bound and pattern, as written in the file
    BigInt bound = 0;
    std::string pattern;
    std::variant<Coloring, SubdivisionWitness> payload;
};

/// Certificate for `result` with the theorem's bound and pattern filled in.
Certificate make_certificate(Theorem t, int k, const std::variant<Coloring, SubdivisionWitness> &result);

std::string certificate_to_json(const Certificate &c);
/// Throws PreconditionError on malformed JSON or missing fields.
Certificate parse_certificate(const std::string &text);

struct Verdict {
    bool valid = false;
    std::vector<std::string> reasons;
    explicit operator bool() const { return valid; }
};

/// Independent checker: header fields against the theorem, then the
/// colouring's range and properness or the witness against the pattern.
Verdict verify_certificate(const Digraph &d, const Certificate &c);

} // namespace spindle
