#pragma once

// Helpers shared by the translation units of the library.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "kuiper/rational.hpp"

namespace kuiper::detail {

inline void sort_unique(std::vector<Rational>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// A point strictly inside segment `seg` of the partition of ℝ induced by
/// the sorted, non-empty `nodes` (segment 0 is the left ray).
inline Rational segment_sample(const std::vector<Rational>& nodes, std::size_t seg) {
    if (seg == 0) return nodes.front() - Rational(1);
    if (seg == nodes.size()) return nodes.back() + Rational(1);
    return (nodes[seg - 1] + nodes[seg]) / Rational(2);
}

}  // namespace kuiper::detail
