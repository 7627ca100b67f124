#pragma once

#include <algorithm>
#include <cstdint>
#include <random>

#include "homlab/errors.hpp"
#include "homlab/geometry.hpp"

namespace homlab {

/// Seeded arrangement of `count` axis-parallel segments with integer
/// endpoints in [0, grid). Each segment is horizontal or vertical with equal
/// probability and has length in [1, max_length]. The intersection graph is
/// a 2-DIR graph. Output depends only on the arguments.
inline geometry::SegmentArrangement random_axis_parallel(int count, std::uint64_t seed, int grid = 12,
                                                         int max_length = 10) {
    if (count < 0 || grid < 2 || max_length < 1)
        throw ContractViolation("random_axis_parallel: bad parameters");
    std::mt19937_64 rng(seed);
    auto pick = [&](int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); };
    geometry::SegmentArrangement arr;
    for (int i = 0; i < count; ++i) {
        const bool vertical = rng() & 1U;
        const int len = 1 + pick(max_length);
        const int a = pick(grid), b = pick(grid);
        const int lo = std::min(b, grid - 1 - len < 0 ? 0 : grid - 1 - len);
        auto r = [](int v) { return geometry::make_rational(v); };
        if (vertical)
            arr.add(geometry::Segment(r(a), r(lo), r(a), r(lo + len)));
        else
            arr.add(geometry::Segment(r(lo), r(a), r(lo + len), r(a)));
    }
    return arr;
}

} // namespace homlab
