#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "multiseg/multisegment.hpp"

namespace multiseg {

/// η_Δ(𝔥) = (ε_{[a,b]}(𝔥), ε_{[a+1,b]}(𝔥), …, ε_{[b,b]}(𝔥)).
struct EtaVector {
    Segment segment;
    std::vector<int> values;

    bool operator==(const EtaVector&) const = default;
};

EtaVector eta(const Segment& d, const Multisegment& h);

/// Preconditions shared by the two-segment criteria: Δ admissible to 𝔥,
/// linked(Δ, Δ′) and Δ < Δ′ (b(Δ) < b(Δ′)); Δ′ need not be admissible.
///
/// Non-overlapping: the shortest removal-sequence member for (Δ, 𝔥)
/// containing the point a(Δ′) − 1 does not contain Δ′. (Under the
/// preconditions the first member always contains that point.)
bool non_overlapping(const Segment& d, const Segment& dp, const Multisegment& h);

/// ∃ Δ̃ ∈ 𝔥 with a(Δ) ≤ a(Δ̃) < a(Δ′) and b(Δ) ≤ b(Δ̃) < b(Δ′).
bool intermediate_segment(const Segment& d, const Segment& dp, const Multisegment& h);

/// η_{Δ′}(𝔥) = η_{Δ′}(𝔯(Δ, 𝔥)) componentwise.
bool eta_preserved(const Segment& d, const Segment& dp, const Multisegment& h);

/// When (Δ, Δ′, 𝔥) fails the non-overlapping property, {Δ∩Δ′, Δ∪Δ′} has the
/// same removal outcome as {Δ, Δ′}; returns that replacement and the shared
/// outcome. Absent when the property holds. Additionally requires Δ′
/// admissible to 𝔯(Δ, 𝔥).
std::optional<std::pair<Multisegment, Multisegment>>
construct_smaller(const Segment& d, const Segment& dp, const Multisegment& h);

} // namespace multiseg
