#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "multiseg/multisegment.hpp"

namespace multiseg {

/// Local minimizability of (𝔫, 𝔥): with a the smallest point of 𝔫, some
/// Δ̄ ∈ 𝔫[a+1] is contained in strictly more members of 𝔣𝔰(𝔫,𝔥) than of
/// 𝔫[a] (containments non-strict). Rejects 𝔫 = ∅ or 𝔫[a] inadmissible.
bool is_locally_minimizable(const Multisegment& n, const Multisegment& h);

/// A pair (Δ ∈ 𝔫[a], Δ̄ ∈ 𝔫[a+1]) with Δ̄ ⊄ Δ and Δ̄ ⊆ Υ(Δ,𝔥), if one
/// exists; such a witness forces local minimizability.
std::optional<std::pair<Segment, Segment>>
one_segment_witness(const Multisegment& n, const Multisegment& h);

/// Index of the first fine-chain state (𝔫ⱼ, 𝔥ⱼ) that is locally
/// minimizable, or absent when none is. Absent iff 𝔫 is the ≤_Z-minimum
/// of its fiber. Rejects inadmissible 𝔫.
std::optional<std::size_t> chain_minimizable(const Multisegment& n, const Multisegment& h);

/// Some 𝔫′ ∈ iu_successors(𝔫) with 𝔯(𝔫′,𝔥) = 𝔯(𝔫,𝔥), or absent. One
/// elementary step suffices to witness non-minimality by convexity of
/// the fiber.
std::optional<Multisegment> descend_step(const Multisegment& n, const Multisegment& h);

/// Greedy descent to the unique ≤_Z-minimal element of the fiber of 𝔫.
Multisegment find_minimal(const Multisegment& n, const Multisegment& h);

/// The fiber S′(𝔥, 𝔭) with its Hasse structure. hasse_edges hold
/// (upper, lower) member indices of the covering relations.
struct FiberReport {
    Multisegment base;                                   // 𝔥
    RemovalOutcome target;                               // 𝔭
    std::vector<Multisegment> members;                   // canonical order
    std::vector<std::pair<std::size_t, std::size_t>> hasse_edges;
    std::vector<std::size_t> minimal_elements;
    std::vector<std::size_t> maximal_elements;
};

/// Exhaustive fiber enumeration over the forced support
/// support(𝔥) − support(𝔭). Rejects 𝔭 = ∞.
FiberReport enumerate_fiber(const Multisegment& h, const RemovalOutcome& p);

} // namespace multiseg
