#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace spindle {

using BigInt = boost::multiprecision::cpp_int;

/// Colour bounds of the B(k,1;k) theorem.
struct Bounds {
    int k = 1;
    /// 2(6k^2)^{3k} + 14k
    BigInt alpha;
    /// k(4k^2+2)(2(4k)^{4k}+1) alpha
    BigInt beta;
    /// 8k beta; the bound certify_b_k1k works against
    BigInt gamma;
    /// 8k(2(6k^2)^{3k}+14k)(2(2k+1)k(4k)^{4k}), the constant announced before
    /// the proof; read-only, differs from gamma
    BigInt announced;
    bool announced_matches_gamma = false;
};

/// Throws PreconditionError for k < 1.
Bounds compute_bounds(int k);

/// (6k^2)^{3k}: Gallai-Roy threshold of the fake-arc digraph.
BigInt plus_path_threshold(int k);
/// (4k)^{4k}: Gallai-Roy threshold of the same-level classes.
BigInt level_path_threshold(int k);

/// v clamped to [0, INT64_MAX].
std::int64_t saturate(const BigInt &v);

} // namespace spindle
