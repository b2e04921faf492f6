#include <spindle/bounds.hpp>
#include <spindle/digraph.hpp>

#include <limits>

namespace spindle {

namespace {
    BigInt power(BigInt base, int exp)
    {
        BigInt r = 1;
        for (int i = 0; i < exp; ++i)
            r *= base;
        return r;
    }
}

BigInt plus_path_threshold(int k) { return power(BigInt(6) * k * k, 3 * k); }
BigInt level_path_threshold(int k) { return power(BigInt(4) * k, 4 * k); }

Bounds compute_bounds(int k)
{
    if (k < 1)
        throw PreconditionError("compute_bounds: k must be at least 1");
    Bounds b;
    b.k = k;
    BigInt kk = k;
    b.alpha = 2 * plus_path_threshold(k) + 14 * kk;
    b.beta = kk * (4 * kk * kk + 2) * (2 * level_path_threshold(k) + 1) * b.alpha;
    b.gamma = 8 * kk * b.beta;
    b.announced = 8 * kk * b.alpha * (2 * (2 * kk + 1) * kk * level_path_threshold(k));
    b.announced_matches_gamma = b.announced == b.gamma;
    return b;
}

std::int64_t saturate(const BigInt &v)
{
    if (v <= 0)
        return 0;
    if (v >= BigInt(std::numeric_limits<std::int64_t>::max()))
        return std::numeric_limits<std::int64_t>::max();
    return v.convert_to<std::int64_t>();
}

} // namespace spindle
