#include "multiseg/removal.hpp"

namespace multiseg {

bool admissible_seg(const Segment& d, const Multisegment& h) {
    for (const Segment& s : h.segments()) {
        if (s.a != d.a) continue;
        if (s.b >= d.b) return true;
    }
    return false;
}

RemovalSequence removal_sequence(const Segment& d, const Multisegment& h) {
    // step (1): shortest [a,c] in 𝔥[a] with c ≥ b
    std::optional<Segment> first;
    for (const Segment& s : h.segments())
        if (s.a == d.a && s.b >= d.b && (!first || s.b < first->b)) first = s;
    if (!first)
        throw std::invalid_argument("removal_sequence: " + to_string(d) +
                                    " is not admissible to " + to_string(h));

    RemovalSequence seq;
    seq.target = d;
    seq.removed.push_back(*first);

    // step (2): ≺ᴸ-minimal Δᵢ with a_{i−1} < aᵢ and b ≤ bᵢ < b_{i−1}.
    // Starts strictly increase, so a segment value is never picked twice.
    for (;;) {
        const Segment& prev = seq.removed.back();
        std::optional<Segment> next;
        for (const Segment& s : h.segments()) {
            if (s.a <= prev.a) continue;
            if (s.b < d.b || s.b >= prev.b) continue;
            if (!next || s < *next) next = s;
        }
        if (!next) break;
        seq.removed.push_back(*next);
    }

    // step (3): Δᵢ^tr = [a_{i+1}, bᵢ] for i < r, Δ_r^tr = [b+1, b_r]
    for (std::size_t i = 0; i + 1 < seq.removed.size(); ++i)
        seq.truncations.emplace_back(Segment(seq.removed[i + 1].a, seq.removed[i].b));
    const Segment& last = seq.removed.back();
    if (last.b >= d.b + 1)
        seq.truncations.emplace_back(Segment(d.b + 1, last.b));
    else
        seq.truncations.emplace_back(std::nullopt);
    return seq;
}

Segment upsilon(const Segment& d, const Multisegment& h) {
    return removal_sequence(d, h).removed.front();
}

RemovalOutcome r_seg(const Segment& d, const RemovalOutcome& h) {
    if (h.is_infinity()) return RemovalOutcome::infinity();
    if (!admissible_seg(d, h.value())) return RemovalOutcome::infinity();
    RemovalSequence seq = removal_sequence(d, h.value());
    Multisegment out = h.value();
    for (const Segment& s : seq.removed) out = out.minus(s);
    for (const auto& t : seq.truncations) out = out.plus(t);
    return out;
}

RemovalOutcome r_mult(const Multisegment& m, const RemovalOutcome& h) {
    RemovalOutcome acc = h;
    for (const Segment& d : ascending_order(m)) acc = r_seg(d, acc);
    return acc;
}

bool admissible_mult(const Multisegment& m, const Multisegment& h) {
    return !r_mult(m, h).is_infinity();
}

int epsilon(const Segment& d, const Multisegment& h) {
    int n = 0;
    for (const Segment& s : h.segments())
        if (s.a == d.a && s.contains(d)) ++n;
    return n;
}

} // namespace multiseg
