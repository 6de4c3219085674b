#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "multiseg/segment.hpp"

namespace multiseg {

/// Multiset of exponents, kept sorted.
struct Support {
    std::vector<int> points;

    Support() = default;
    explicit Support(std::vector<int> pts) : points(std::move(pts)) {
        std::sort(points.begin(), points.end());
    }

    bool empty() const { return points.empty(); }
    std::size_t size() const { return points.size(); }

    bool operator==(const Support&) const = default;
    auto operator<=>(const Support&) const = default;

    // multiset inclusion
    bool contains(const Support& other) const {
        return std::includes(points.begin(), points.end(),
                             other.points.begin(), other.points.end());
    }

    Support plus(const Support& other) const {
        Support out;
        std::merge(points.begin(), points.end(), other.points.begin(), other.points.end(),
                   std::back_inserter(out.points));
        return out;
    }

    // multiset difference; requires contains(other)
    Support minus(const Support& other) const {
        Support out;
        auto it = other.points.begin();
        for (int p : points) {
            if (it != other.points.end() && *it == p) {
                ++it;
                continue;
            }
            out.points.push_back(p);
        }
        if (it != other.points.end())
            throw std::invalid_argument("Support::minus: not a sub-multiset");
        return out;
    }
};

/// Finite multiset of non-empty segments in canonical sorted form:
/// a flat (a,b)-lexicographically sorted vector, copies adjacent.
/// Two multisegments are equal iff their canonical forms are identical.
class Multisegment {
    std::vector<Segment> segs_;

public:
    Multisegment() = default;
    explicit Multisegment(std::vector<Segment> segs) : segs_(std::move(segs)) {
        std::sort(segs_.begin(), segs_.end());
    }
    Multisegment(std::initializer_list<Segment> segs)
        : Multisegment(std::vector<Segment>(segs)) {}

    bool empty() const { return segs_.empty(); }
    std::size_t size() const { return segs_.size(); }
    const std::vector<Segment>& segments() const { return segs_; }
    auto begin() const { return segs_.begin(); }
    auto end() const { return segs_.end(); }

    bool operator==(const Multisegment&) const = default;
    auto operator<=>(const Multisegment&) const = default;

    std::size_t count(const Segment& s) const {
        auto [lo, hi] = std::equal_range(segs_.begin(), segs_.end(), s);
        return static_cast<std::size_t>(hi - lo);
    }
    bool contains(const Segment& s) const { return count(s) > 0; }

    /// 𝔪 + Δ. Adding nothing (an "empty segment") is expressed by not calling.
    Multisegment plus(const Segment& s) const {
        Multisegment out(*this);
        out.segs_.insert(std::upper_bound(out.segs_.begin(), out.segs_.end(), s), s);
        return out;
    }
    Multisegment plus(const std::optional<Segment>& s) const {
        return s ? plus(*s) : *this;
    }
    Multisegment plus(const Multisegment& other) const {
        Multisegment out;
        std::merge(segs_.begin(), segs_.end(), other.segs_.begin(), other.segs_.end(),
                   std::back_inserter(out.segs_));
        return out;
    }

    /// 𝔪 − Δ; one copy. Rejects if absent.
    Multisegment minus(const Segment& s) const {
        auto it = std::lower_bound(segs_.begin(), segs_.end(), s);
        if (it == segs_.end() || *it != s)
            throw std::invalid_argument("Multisegment::minus: segment " + to_string(s) +
                                        " not present");
        Multisegment out(*this);
        out.segs_.erase(out.segs_.begin() + (it - segs_.begin()));
        return out;
    }
    Multisegment minus(const Multisegment& other) const {
        Multisegment out = *this;
        for (const Segment& s : other.segs_) out = out.minus(s);
        return out;
    }

    /// 𝔪[c]: all segments starting at c, multiplicity preserved.
    Multisegment at_point(int c) const {
        Multisegment out;
        for (const Segment& s : segs_) {
            if (s.a == c) out.segs_.push_back(s);
            else if (s.a > c) break;
        }
        return out;
    }

    /// ⁻𝔪: left-truncate every segment, dropping singletons.
    Multisegment left_truncated() const {
        std::vector<Segment> out;
        for (const Segment& s : segs_)
            if (auto t = left_truncate(s)) out.push_back(*t);
        return Multisegment(std::move(out));
    }

    Support support() const {
        std::vector<int> pts;
        pts.reserve(static_cast<std::size_t>(total_length()));
        for (const Segment& s : segs_)
            for (int p = s.a; p <= s.b; ++p) pts.push_back(p);
        return Support(std::move(pts));
    }

    /// l_rel(𝔪) = Σ (b − a + 1)
    int total_length() const {
        int n = 0;
        for (const Segment& s : segs_) n += s.length();
        return n;
    }

    /// Smallest c with 𝔪[c] ≠ ∅; absent for ∅.
    std::optional<int> min_point() const {
        if (segs_.empty()) return std::nullopt;
        return segs_.front().a;
    }
};

/// The stored canonical order is an ascending order in the paper's sense:
/// segments with equal start are never linked, otherwise starts increase.
inline const std::vector<Segment>& ascending_order(const Multisegment& m) {
    return m.segments();
}

inline std::string to_string(const Multisegment& m) {
    if (m.empty()) return "{}";
    std::string out = "{";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += ",";
        out += to_string(m.segments()[i]);
    }
    return out + "}";
}

/// Four-valued result of a partial-order comparison.
enum class PartialCmp { LT, EQ, GT, INCOMPARABLE };

inline const char* to_string(PartialCmp c) {
    switch (c) {
        case PartialCmp::LT: return "LT";
        case PartialCmp::EQ: return "EQ";
        case PartialCmp::GT: return "GT";
        default: return "INCOMPARABLE";
    }
}

/// Lexicographic ordering ≤ᵃ_c on multisegments at a single point c:
/// with both sides sorted by descending end, m1 ≤ m2 iff m1 has no more
/// segments and ends compare ≤ pairwise.
PartialCmp lex_compare_at(const Multisegment& m1, const Multisegment& m2, int c);

/// Either a multisegment or the distinguished Infinity symbol ∞.
/// Infinity is an in-band value (the removal process composes through it).
class RemovalOutcome {
    std::optional<Multisegment> m_;

    RemovalOutcome() = default;

public:
    RemovalOutcome(Multisegment m) : m_(std::move(m)) {}
    static RemovalOutcome infinity() { return RemovalOutcome(); }

    bool is_infinity() const { return !m_.has_value(); }
    const Multisegment& value() const {
        if (is_infinity())
            throw std::invalid_argument("RemovalOutcome: expected a multisegment, got infinity");
        return *m_;
    }

    bool operator==(const RemovalOutcome&) const = default;
};

inline std::string to_string(const RemovalOutcome& o) {
    return o.is_infinity() ? "infinity" : to_string(o.value());
}

/// ≤ᵃ_c extended to the Infinity symbol: finite < ∞, ∞ = ∞.
PartialCmp lex_compare_at(const RemovalOutcome& p1, const RemovalOutcome& p2, int c);

struct MultisegmentHash {
    std::size_t operator()(const Multisegment& m) const {
        std::uint64_t h = 1469598103934665603ull; // FNV-1a
        auto mix = [&h](std::uint64_t v) {
            h ^= v;
            h *= 1099511628211ull;
        };
        for (const Segment& s : m.segments()) {
            mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(s.a)) + 0x9e3779b9u);
            mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(s.b)));
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace multiseg
