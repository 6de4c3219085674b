#pragma once

#include <unordered_map>
#include <vector>

#include "multiseg/multisegment.hpp"

namespace multiseg {

/// 𝔪 − Δ − Δ′ + Δ∪Δ′ + Δ∩Δ′ for a linked pair in 𝔪; the intersection term
/// is dropped when empty. Rejects absent or unlinked pairs.
Multisegment elementary_iu(const Multisegment& m, const Segment& d1, const Segment& d2);

/// All distinct one-step results over the linked pairs of 𝔪, canonical order.
std::vector<Multisegment> iu_successors(const Multisegment& m);

/// Zelevinsky ordering: lo ≤_Z hi iff lo is reachable from hi by elementary
/// intersection-union moves (or equal). Decided by BFS; the support class
/// is finite so this terminates.
bool leq_Z(const Multisegment& lo, const Multisegment& hi);

/// { 𝔪″ : lo ≤_Z 𝔪″ ≤_Z hi }, canonical order. Rejects unless lo ≤_Z hi.
std::vector<Multisegment> interval_Z(const Multisegment& lo, const Multisegment& hi);

/// Generic: every pair of segments unlinked. Generic multisegments are
/// ≤_Z-minimal.
bool is_generic(const Multisegment& m);

/// Memoizing one-step-successor map for repeated poset navigation within
/// support classes. Single writer during construction; read-only sharing
/// afterwards.
class PosetCache {
    std::unordered_map<Multisegment, std::vector<Multisegment>, MultisegmentHash> succ_;

public:
    const std::vector<Multisegment>& successors(const Multisegment& m);

    /// BFS through the memoized successor map.
    bool leq(const Multisegment& lo, const Multisegment& hi);

    /// Down-set of m: every element ≤_Z m (m included), canonical order.
    std::vector<Multisegment> down_set(const Multisegment& m);
};

} // namespace multiseg
