#include "multiseg/minimal.hpp"

#include <algorithm>
#include <functional>

#include "multiseg/enumerate.hpp"
#include "multiseg/finechain.hpp"
#include "multiseg/removal.hpp"
#include "multiseg/zpos.hpp"

namespace multiseg {

namespace {

int count_containing(const Multisegment& m, const Segment& inner) {
    int n = 0;
    for (const Segment& s : m.segments())
        if (s.contains(inner)) ++n;
    return n;
}

} // namespace

bool is_locally_minimizable(const Multisegment& n, const Multisegment& h) {
    if (n.empty())
        throw std::invalid_argument("is_locally_minimizable: empty multisegment");
    int a = *n.min_point();
    Multisegment firsts = fs(n, h);
    if (firsts.empty())
        throw std::invalid_argument("is_locally_minimizable: " + to_string(n) +
                                    " is not admissible to " + to_string(h));
    Multisegment na = n.at_point(a);
    for (const Segment& bar : n.at_point(a + 1).segments())
        if (count_containing(na, bar) < count_containing(firsts, bar)) return true;
    return false;
}

std::optional<std::pair<Segment, Segment>>
one_segment_witness(const Multisegment& n, const Multisegment& h) {
    if (n.empty()) return std::nullopt;
    int a = *n.min_point();
    Multisegment above = n.at_point(a + 1);
    if (above.empty()) return std::nullopt;
    for (const Segment& d : n.at_point(a).segments()) {
        if (!admissible_seg(d, h)) continue;
        Segment first = upsilon(d, h);
        for (const Segment& bar : above.segments())
            if (!d.contains(bar) && first.contains(bar)) return std::make_pair(d, bar);
    }
    return std::nullopt;
}

std::optional<std::size_t> chain_minimizable(const Multisegment& n, const Multisegment& h) {
    if (r_mult(n, h).is_infinity())
        throw std::invalid_argument("chain_minimizable: " + to_string(n) +
                                    " is not admissible to " + to_string(h));
    FineChain chain = fine_chain(n, h);
    for (std::size_t j = 0; j < chain.length(); ++j)
        if (is_locally_minimizable(chain.states[j].first, chain.states[j].second)) return j;
    return std::nullopt;
}

std::optional<Multisegment> descend_step(const Multisegment& n, const Multisegment& h) {
    RemovalOutcome target = r_mult(n, h);
    for (const Multisegment& next : iu_successors(n))
        if (r_mult(next, h) == target) return next;
    return std::nullopt;
}

Multisegment find_minimal(const Multisegment& n, const Multisegment& h) {
    if (r_mult(n, h).is_infinity())
        throw std::invalid_argument("find_minimal: " + to_string(n) +
                                    " is not admissible to " + to_string(h));
    Multisegment cur = n;
    while (auto next = descend_step(cur, h)) cur = std::move(*next);
    return cur;
}

FiberReport enumerate_fiber(const Multisegment& h, const RemovalOutcome& p) {
    if (p.is_infinity())
        throw std::invalid_argument("enumerate_fiber: target must be a multisegment");

    FiberReport report;
    report.base = h;
    report.target = p;

    Support hs = h.support();
    Support ps = p.value().support();
    if (!hs.contains(ps)) return report; // fiber forced empty

    // each removal deletes exactly the points of the removed segment, so
    // members all have support(𝔥) − support(𝔭)
    for (const Multisegment& cand : partitions_of_support(hs.minus(ps)))
        if (r_mult(cand, h) == p) report.members.push_back(cand);

    const auto& members = report.members;
    auto index_of = [&members](const Multisegment& m) -> std::optional<std::size_t> {
        auto it = std::lower_bound(members.begin(), members.end(), m);
        if (it == members.end() || *it != m) return std::nullopt;
        return static_cast<std::size_t>(it - members.begin());
    };

    // one-step edges inside the fiber; convexity keeps every ≤_Z path
    // between members inside the member set
    std::vector<std::vector<std::size_t>> step(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
        for (const Multisegment& next : iu_successors(members[i]))
            if (auto j = index_of(next)) step[i].push_back(*j);

    std::vector<bool> has_below(members.size(), false), has_above(members.size(), false);
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j : step[i]) {
            has_below[i] = true;
            has_above[j] = true;
        }

    // Hasse reduction: drop one-step edges implied by longer paths
    std::vector<std::vector<bool>> reach(members.size(),
                                         std::vector<bool>(members.size(), false));
    // members are canonically sorted, not topologically; propagate by DFS
    std::function<void(std::size_t)> close = [&](std::size_t u) {
        if (reach[u][u]) return;
        reach[u][u] = true;
        for (std::size_t v : step[u]) {
            close(v);
            for (std::size_t w = 0; w < members.size(); ++w)
                if (reach[v][w]) reach[u][w] = true;
        }
    };
    for (std::size_t i = 0; i < members.size(); ++i) close(i);

    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j : step[i]) {
            bool implied = false;
            for (std::size_t k : step[i])
                if (k != j && reach[k][j]) implied = true;
            if (!implied) report.hasse_edges.emplace_back(i, j);
        }

    for (std::size_t i = 0; i < members.size(); ++i) {
        if (!has_below[i]) report.minimal_elements.push_back(i);
        if (!has_above[i]) report.maximal_elements.push_back(i);
    }
    return report;
}

} // namespace multiseg
