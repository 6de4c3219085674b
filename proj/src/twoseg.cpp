#include "multiseg/twoseg.hpp"

#include "multiseg/removal.hpp"

namespace multiseg {

namespace {

void check_pair(const Segment& d, const Segment& dp, const Multisegment& h,
                const char* who) {
    if (!admissible_seg(d, h))
        throw std::invalid_argument(std::string(who) + ": " + to_string(d) +
                                    " is not admissible to " + to_string(h));
    if (!linked(d, dp) || d.b >= dp.b)
        throw std::invalid_argument(std::string(who) + ": need linked segments with " +
                                    to_string(d) + " < " + to_string(dp));
}

} // namespace

EtaVector eta(const Segment& d, const Multisegment& h) {
    EtaVector out;
    out.segment = d;
    out.values.reserve(static_cast<std::size_t>(d.length()));
    for (int a = d.a; a <= d.b; ++a) out.values.push_back(epsilon(Segment(a, d.b), h));
    return out;
}

bool non_overlapping(const Segment& d, const Segment& dp, const Multisegment& h) {
    check_pair(d, dp, h, "non_overlapping");
    int point = dp.a - 1;
    // linkage forces a(Δ) ≤ point ≤ b(Δ), so Δ₁ always contains it
    std::optional<Segment> shortest;
    for (const Segment& s : removal_sequence(d, h).removed)
        if (s.contains(point) && (!shortest || s.length() < shortest->length()))
            shortest = s;
    if (!shortest) return true; // vacuously
    return !shortest->contains(dp);
}

bool intermediate_segment(const Segment& d, const Segment& dp, const Multisegment& h) {
    if (!linked(d, dp) || d.b >= dp.b)
        throw std::invalid_argument("intermediate_segment: need linked segments with " +
                                    to_string(d) + " < " + to_string(dp));
    for (const Segment& s : h.segments())
        if (d.a <= s.a && s.a < dp.a && d.b <= s.b && s.b < dp.b) return true;
    return false;
}

bool eta_preserved(const Segment& d, const Segment& dp, const Multisegment& h) {
    check_pair(d, dp, h, "eta_preserved");
    return eta(dp, h) == eta(dp, r_seg(d, h).value());
}

std::optional<std::pair<Multisegment, Multisegment>>
construct_smaller(const Segment& d, const Segment& dp, const Multisegment& h) {
    check_pair(d, dp, h, "construct_smaller");
    RemovalOutcome after = r_seg(d, h);
    if (!admissible_seg(dp, after.value()))
        throw std::invalid_argument("construct_smaller: " + to_string(dp) +
                                    " is not admissible to r(" + to_string(d) + ", h)");
    if (non_overlapping(d, dp, h)) return std::nullopt;
    auto inter = seg_intersection(d, dp);
    Multisegment replacement({seg_union(d, dp)});
    replacement = replacement.plus(inter);
    return std::make_pair(replacement, r_seg(dp, after).value());
}

} // namespace multiseg
