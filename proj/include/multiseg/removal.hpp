#pragma once

#include <optional>
#include <vector>

#include "multiseg/multisegment.hpp"

namespace multiseg {

/// Δ = [a,b] is admissible to 𝔥 iff 𝔥 contains some [a,c] with c ≥ b.
bool admissible_seg(const Segment& d, const Multisegment& h);

/// The chain Δ₁ ⊇ Δ₂ ⊇ … ⊇ Δ_r selected by the removal process, with the
/// truncations that replace them. Invariants: a₁ < a₂ < … < a_r and
/// b ≤ b_r < … < b₁ (nesting); truncations[i] = [a_{i+1}, b_i] for i < r−1
/// and the last is [b+1, b_r], absent when empty.
struct RemovalSequence {
    Segment target;                                 // Δ
    std::vector<Segment> removed;                   // Δ₁, …, Δ_r
    std::vector<std::optional<Segment>> truncations; // Δᵢ^tr
};

/// Runs steps (1)–(3) of the removal process. Rejects if Δ is not admissible.
RemovalSequence removal_sequence(const Segment& d, const Multisegment& h);

/// Υ(Δ, 𝔥) = Δ₁, the first segment of the removal sequence.
Segment upsilon(const Segment& d, const Multisegment& h);

/// 𝔯(Δ, 𝔥) = 𝔥 − ΣΔᵢ + ΣΔᵢ^tr; ∞ when 𝔥 = ∞ or Δ is not admissible.
RemovalOutcome r_seg(const Segment& d, const RemovalOutcome& h);

/// 𝔯(𝔪, 𝔥): fold of r_seg over 𝔪 in ascending order.
RemovalOutcome r_mult(const Multisegment& m, const RemovalOutcome& h);

/// True iff 𝔯(𝔪, 𝔥) ≠ ∞.
bool admissible_mult(const Multisegment& m, const Multisegment& h);

/// ε_Δ(𝔥) = number of segments in 𝔥[a(Δ)] containing Δ (non-strict).
int epsilon(const Segment& d, const Multisegment& h);

} // namespace multiseg
