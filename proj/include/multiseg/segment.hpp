#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>

namespace multiseg {

/// Integer interval [a, b] with b >= a. Empty intervals are never
/// materialized; operations that could produce one return std::nullopt.
struct Segment {
    int a = 0;
    int b = 0;

    Segment() = default;
    Segment(int a_, int b_) : a(a_), b(b_) {
        if (b < a)
            throw std::invalid_argument("segment [" + std::to_string(a_) + "," +
                                        std::to_string(b_) + "]: end before start");
    }

    int length() const { return b - a + 1; }
    bool is_singleton() const { return a == b; }
    bool contains(int p) const { return a <= p && p <= b; }
    // non-strict containment
    bool contains(const Segment& o) const { return a <= o.a && o.b <= b; }

    // (a, b)-lexicographic; this is the paper-order on 'left' values.
    auto operator<=>(const Segment&) const = default;
};

/// True iff the interval union is an interval (adjacency counts) and
/// neither segment contains the other.
inline bool linked(const Segment& x, const Segment& y) {
    bool union_is_interval = std::max(x.a, y.a) <= std::min(x.b, y.b) + 1;
    return union_is_interval && !x.contains(y) && !y.contains(x);
}

inline bool unlinked(const Segment& x, const Segment& y) { return !linked(x, y); }

/// Interval union. The two segments must overlap or be adjacent.
inline Segment seg_union(const Segment& x, const Segment& y) {
    if (std::max(x.a, y.a) > std::min(x.b, y.b) + 1)
        throw std::invalid_argument("seg_union: union is not an interval");
    return Segment(std::min(x.a, y.a), std::max(x.b, y.b));
}

/// Interval intersection; absent when disjoint.
inline std::optional<Segment> seg_intersection(const Segment& x, const Segment& y) {
    int lo = std::max(x.a, y.a);
    int hi = std::min(x.b, y.b);
    if (lo > hi) return std::nullopt;
    return Segment(lo, hi);
}

/// [a+1, b]; absent for singletons.
inline std::optional<Segment> left_truncate(const Segment& x) {
    if (x.is_singleton()) return std::nullopt;
    return Segment(x.a + 1, x.b);
}

inline std::string to_string(const Segment& s) {
    return "[" + std::to_string(s.a) + "," + std::to_string(s.b) + "]";
}

} // namespace multiseg
