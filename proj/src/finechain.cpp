#include "multiseg/finechain.hpp"

#include "multiseg/removal.hpp"

namespace multiseg {

Multisegment fs(const Multisegment& n, const Multisegment& h) {
    if (n.empty()) return {};
    Multisegment na = n.at_point(*n.min_point());
    std::vector<Segment> firsts;
    RemovalOutcome state(h);
    for (const Segment& d : na.segments()) {
        if (state.is_infinity() || !admissible_seg(d, state.value()))
            return {}; // 𝔫[a] not admissible to 𝔥
        firsts.push_back(upsilon(d, state.value()));
        state = r_seg(d, state);
    }
    return Multisegment(std::move(firsts));
}

Multisegment trr(const Multisegment& n, const Multisegment& h) {
    Multisegment f = fs(n, h);
    return h.minus(f).plus(f.left_truncated());
}

Multisegment trd(const Multisegment& n, const Multisegment& h) {
    (void)h;
    if (n.empty()) return n;
    Multisegment na = n.at_point(*n.min_point());
    return n.minus(na).plus(na.left_truncated());
}

FineChain fine_chain(const Multisegment& n, const Multisegment& h) {
    FineChain chain;
    Multisegment ni = n;
    Multisegment hi = h;
    while (!ni.empty()) {
        chain.points.push_back(*ni.min_point());
        chain.states.emplace_back(ni, hi);
        chain.terms.push_back(fs(ni, hi));
        Multisegment next_h = trr(ni, hi); // before ni is replaced
        ni = trd(ni, hi);
        hi = std::move(next_h);
    }
    return chain;
}

bool chains_coincide(const Multisegment& n, const Multisegment& np, const Multisegment& h) {
    if (r_mult(n, h).is_infinity() || r_mult(np, h).is_infinity()) return false;
    return fine_chain(n, h).terms == fine_chain(np, h).terms;
}

PartialCmp fc_compare(const Multisegment& n, const Multisegment& np, const Multisegment& h) {
    if (n.support() != np.support())
        throw std::invalid_argument("fc_compare: cuspidal supports differ");
    if (r_mult(n, h).is_infinity() || r_mult(np, h).is_infinity())
        throw std::invalid_argument("fc_compare: inadmissible multisegment");

    FineChain c1 = fine_chain(n, h);
    FineChain c2 = fine_chain(np, h);
    // equal supports give identical round points, hence equal lengths
    for (std::size_t i = 0; i < c1.length(); ++i) {
        if (c1.terms[i] == c2.terms[i]) continue;
        return lex_compare_at(c1.terms[i], c2.terms[i], c1.points[i]);
    }
    return PartialCmp::EQ;
}

} // namespace multiseg
