#include "multiseg/zpos.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace multiseg {

Multisegment elementary_iu(const Multisegment& m, const Segment& d1, const Segment& d2) {
    if (!linked(d1, d2))
        throw std::invalid_argument("elementary_iu: " + to_string(d1) + " and " +
                                    to_string(d2) + " are not linked");
    if (!m.contains(d1) || !m.minus(d1).contains(d2))
        throw std::invalid_argument("elementary_iu: pair not present in " + to_string(m));
    Multisegment out = m.minus(d1).minus(d2).plus(seg_union(d1, d2));
    return out.plus(seg_intersection(d1, d2));
}

std::vector<Multisegment> iu_successors(const Multisegment& m) {
    std::vector<Multisegment> out;
    const auto& segs = m.segments();
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j)
            if (linked(segs[i], segs[j]))
                out.push_back(elementary_iu(m, segs[i], segs[j]));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_generic(const Multisegment& m) {
    const auto& segs = m.segments();
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j)
            if (linked(segs[i], segs[j])) return false;
    return true;
}

bool leq_Z(const Multisegment& lo, const Multisegment& hi) {
    if (lo == hi) return true;
    if (lo.support() != hi.support()) return false;
    PosetCache cache;
    return cache.leq(lo, hi);
}

std::vector<Multisegment> interval_Z(const Multisegment& lo, const Multisegment& hi) {
    PosetCache cache;
    if (lo != hi && (lo.support() != hi.support() || !cache.leq(lo, hi)))
        throw std::invalid_argument("interval_Z: " + to_string(lo) + " is not <=_Z " +
                                    to_string(hi));
    std::vector<Multisegment> down = cache.down_set(hi);
    std::vector<Multisegment> out;
    for (const Multisegment& m : down)
        if (m == lo || cache.leq(lo, m)) out.push_back(m);
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<Multisegment>& PosetCache::successors(const Multisegment& m) {
    auto it = succ_.find(m);
    if (it == succ_.end()) it = succ_.emplace(m, iu_successors(m)).first;
    return it->second;
}

bool PosetCache::leq(const Multisegment& lo, const Multisegment& hi) {
    if (lo == hi) return true;
    std::unordered_set<Multisegment, MultisegmentHash> seen{hi};
    std::deque<Multisegment> queue{hi};
    while (!queue.empty()) {
        Multisegment cur = std::move(queue.front());
        queue.pop_front();
        for (const Multisegment& next : successors(cur)) {
            if (next == lo) return true;
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return false;
}

std::vector<Multisegment> PosetCache::down_set(const Multisegment& m) {
    std::unordered_set<Multisegment, MultisegmentHash> seen{m};
    std::deque<Multisegment> queue{m};
    while (!queue.empty()) {
        Multisegment cur = std::move(queue.front());
        queue.pop_front();
        for (const Multisegment& next : successors(cur))
            if (seen.insert(next).second) queue.push_back(next);
    }
    std::vector<Multisegment> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace multiseg
