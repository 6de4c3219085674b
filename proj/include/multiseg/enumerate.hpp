#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "multiseg/multisegment.hpp"

namespace multiseg {

/// Inclusive exponent window [lo, hi].
struct Window {
    int lo = 0;
    int hi = 0;
};

/// All segments [a,b] with lo ≤ a ≤ b ≤ hi, (a,b)-lex order.
std::vector<Segment> segments_in_window(const Window& w);

/// Every multisegment with support in the window and total point count
/// ≤ max_points, each exactly once, in canonical (multiset-lex) order.
void for_each_multisegment(const Window& w, int max_points,
                           const std::function<void(const Multisegment&)>& fn);

std::vector<Multisegment> all_multisegments(const Window& w, int max_points);

std::uint64_t count_multisegments(const Window& w, int max_points);

/// All multisegments whose support is exactly s (the set partitions of the
/// point multiset into valid segments), canonical order, each once.
std::vector<Multisegment> partitions_of_support(const Support& s);

} // namespace multiseg
