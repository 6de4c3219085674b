#include "multiseg/multisegment.hpp"

#include <algorithm>

namespace multiseg {

namespace {

// ends sorted descending; segments must all start at c
std::vector<int> descending_ends_at(const Multisegment& m, int c) {
    std::vector<int> ends;
    ends.reserve(m.size());
    for (const Segment& s : m.segments()) {
        if (s.a != c)
            throw std::invalid_argument("lex_compare_at: segment " + to_string(s) +
                                        " does not start at " + std::to_string(c));
        ends.push_back(s.b);
    }
    std::sort(ends.rbegin(), ends.rend());
    return ends;
}

bool lex_leq(const std::vector<int>& e1, const std::vector<int>& e2) {
    if (e1.size() > e2.size()) return false;
    for (std::size_t i = 0; i < e1.size(); ++i)
        if (e1[i] > e2[i]) return false;
    return true;
}

} // namespace

PartialCmp lex_compare_at(const Multisegment& m1, const Multisegment& m2, int c) {
    std::vector<int> e1 = descending_ends_at(m1, c);
    std::vector<int> e2 = descending_ends_at(m2, c);
    bool le = lex_leq(e1, e2);
    bool ge = lex_leq(e2, e1);
    if (le && ge) return PartialCmp::EQ;
    if (le) return PartialCmp::LT;
    if (ge) return PartialCmp::GT;
    return PartialCmp::INCOMPARABLE;
}

PartialCmp lex_compare_at(const RemovalOutcome& p1, const RemovalOutcome& p2, int c) {
    if (p1.is_infinity() && p2.is_infinity()) return PartialCmp::EQ;
    if (p1.is_infinity()) return PartialCmp::GT;
    if (p2.is_infinity()) return PartialCmp::LT;
    return lex_compare_at(p1.value(), p2.value(), c);
}

} // namespace multiseg
