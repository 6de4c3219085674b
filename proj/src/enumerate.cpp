#include "multiseg/enumerate.hpp"

#include <algorithm>
#include <map>

namespace multiseg {

std::vector<Segment> segments_in_window(const Window& w) {
    std::vector<Segment> out;
    for (int a = w.lo; a <= w.hi; ++a)
        for (int b = a; b <= w.hi; ++b) out.emplace_back(a, b);
    return out;
}

namespace {

// nondecreasing segment picks give each multiset exactly once, and
// emitting a node before its extensions gives canonical multiset-lex order
void rec_enumerate(const std::vector<Segment>& segs, std::size_t start, int budget,
                   std::vector<Segment>& current,
                   const std::function<void(const Multisegment&)>& fn) {
    fn(Multisegment(current));
    for (std::size_t i = start; i < segs.size(); ++i) {
        if (segs[i].length() > budget) continue;
        current.push_back(segs[i]);
        rec_enumerate(segs, i, budget - segs[i].length(), current, fn);
        current.pop_back();
    }
}

std::uint64_t rec_count(const std::vector<Segment>& segs, std::size_t start, int budget) {
    std::uint64_t n = 1;
    for (std::size_t i = start; i < segs.size(); ++i)
        if (segs[i].length() <= budget) n += rec_count(segs, i, budget - segs[i].length());
    return n;
}

} // namespace

void for_each_multisegment(const Window& w, int max_points,
                           const std::function<void(const Multisegment&)>& fn) {
    if (w.lo > w.hi) throw std::invalid_argument("for_each_multisegment: bad window");
    std::vector<Segment> segs = segments_in_window(w);
    std::vector<Segment> current;
    rec_enumerate(segs, 0, max_points, current, fn);
}

std::vector<Multisegment> all_multisegments(const Window& w, int max_points) {
    std::vector<Multisegment> out;
    for_each_multisegment(w, max_points, [&out](const Multisegment& m) { out.push_back(m); });
    return out;
}

std::uint64_t count_multisegments(const Window& w, int max_points) {
    if (w.lo > w.hi) throw std::invalid_argument("count_multisegments: bad window");
    return rec_count(segments_in_window(w), 0, max_points);
}

namespace {

void rec_partitions(std::map<int, int>& counts, const Segment* min_at_same_start,
                    std::vector<Segment>& current, std::vector<Multisegment>& out) {
    auto lowest = counts.begin();
    if (lowest == counts.end()) {
        out.emplace_back(current);
        return;
    }
    int p = lowest->first;
    int min_end = p;
    if (min_at_same_start && min_at_same_start->a == p)
        min_end = min_at_same_start->b; // keep picks at p nondecreasing
    // grow [p, q] while the next point is available
    int q = p;
    std::vector<int> consumed;
    for (;;) {
        auto it = counts.find(q);
        if (it == counts.end() || it->second == 0) break;
        if (--it->second == 0) counts.erase(it);
        consumed.push_back(q);
        if (q >= min_end) {
            Segment chosen(p, q);
            current.push_back(chosen);
            rec_partitions(counts, &chosen, current, out);
            current.pop_back();
        }
        ++q;
    }
    for (int pt : consumed) ++counts[pt];
}

} // namespace

std::vector<Multisegment> partitions_of_support(const Support& s) {
    std::map<int, int> counts;
    for (int p : s.points) ++counts[p];
    std::vector<Multisegment> out;
    std::vector<Segment> current;
    rec_partitions(counts, nullptr, current, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace multiseg
