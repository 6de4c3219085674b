#pragma once

#include <utility>
#include <vector>

#include "multiseg/multisegment.hpp"

namespace multiseg {

/// 𝔣𝔰(𝔫, 𝔥): first segments of the staged removals of 𝔫[a] from 𝔥, where a
/// is the smallest point of 𝔫. Returns ∅ when 𝔫 = ∅ or 𝔫[a] is not
/// admissible to 𝔥. Independent of the order in which 𝔫[a] is processed.
Multisegment fs(const Multisegment& n, const Multisegment& h);

/// 𝔱𝔯𝔯(𝔫, 𝔥) = 𝔥 − 𝔣𝔰(𝔫,𝔥) + ⁻𝔣𝔰(𝔫,𝔥)
Multisegment trr(const Multisegment& n, const Multisegment& h);

/// 𝔱𝔯𝔡(𝔫, 𝔥) = 𝔫 − 𝔫[a] + ⁻(𝔫[a]); identity on ∅.
Multisegment trd(const Multisegment& n, const Multisegment& h);

/// The fine chain for (𝔫, 𝔥): terms[i] = 𝔣𝔰(𝔫ᵢ, 𝔥ᵢ) with states evolving by
/// (𝔫ᵢ₊₁, 𝔥ᵢ₊₁) = (trd(𝔫ᵢ,𝔥ᵢ), trr(𝔫ᵢ,𝔥ᵢ)) until 𝔫ᵢ = ∅.
/// points[i] = cᵢ, the smallest point of 𝔫ᵢ; every segment of terms[i]
/// starts at cᵢ. One round per distinct support point of 𝔫.
struct FineChain {
    std::vector<Multisegment> terms;
    std::vector<std::pair<Multisegment, Multisegment>> states; // (𝔫ᵢ, 𝔥ᵢ)
    std::vector<int> points;                                   // cᵢ

    std::size_t length() const { return terms.size(); }
};

FineChain fine_chain(const Multisegment& n, const Multisegment& h);

/// Two fine chains coincide iff both removal outcomes are finite and the
/// term sequences are equal.
bool chains_coincide(const Multisegment& n, const Multisegment& np, const Multisegment& h);

/// Fine chain ordering ≤^fc: first differing term decides, compared with
/// ≤ᵃ at the round's point. Requires equal cuspidal support and both
/// multisegments admissible to 𝔥.
PartialCmp fc_compare(const Multisegment& n, const Multisegment& np, const Multisegment& h);

} // namespace multiseg
