#pragma once

#include <string>
#include <vector>

#include "multiseg/multisegment.hpp"

namespace multiseg {

/// Marker tag for a set of points on one segment row of a diagram.
/// "removed" renders as '*', "first" as '#'; other tags use their first
/// character.
struct DiagramMark {
    Segment segment;
    std::vector<int> points;
    std::string tag;
};

/// Text diagram in the style of the paper's figures: one row per segment in
/// canonical order, columns aligned to exponents (origin at the minimum
/// exponent, negatives allowed), covered points printed as the exponent
/// value joined by dashes, tagged points wrapped in their marker character.
std::string render_diagram(const Multisegment& m,
                           const std::vector<DiagramMark>& marks = {});

} // namespace multiseg
