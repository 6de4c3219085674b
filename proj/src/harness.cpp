#include "multiseg/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <limits>
#include <map>
#include <random>
#include <thread>

#include "multiseg/finechain.hpp"
#include "multiseg/json_io.hpp"
#include "multiseg/minimal.hpp"
#include "multiseg/removal.hpp"
#include "multiseg/twoseg.hpp"
#include "multiseg/zpos.hpp"

namespace multiseg {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------- context

struct Ctx {
    Window w{};
    int max_points = 0;
    std::vector<Segment> segs;      // D: all segments in the window
    std::vector<Multisegment> all;  // N: all multisegments in the window space

    // support-class decomposition of N
    std::vector<std::size_t> class_of;     // n index -> class index
    std::vector<std::size_t> pos_in_class; // n index -> position within class
    std::vector<std::vector<std::size_t>> classes; // class -> n indices
    // rel[c][i][j]: member i ≤_Z member j (positions within class c)
    std::vector<std::vector<std::vector<bool>>> rel;

    // lazily prepared instance lists
    bool pairs_ready = false;
    std::vector<std::pair<std::size_t, std::size_t>> z_pairs; // (lo, hi) n indices, lo ≠ hi
    bool chains_ready = false;
    struct ZChain {
        std::size_t lo, hi;
        std::vector<std::size_t> mids; // interval members, n indices
    };
    std::vector<ZChain> z_chains;
    std::uint64_t z_chain_instances = 0; // Σ |mids|
    bool repl_ready = false;
    struct Replacement {
        std::size_t m1; // n index; all segments start at one point
        Segment from, to;
    };
    std::vector<Replacement> replacements;

    const Multisegment& n(std::size_t i) const { return all[i]; }

    bool same_class(std::size_t i, std::size_t j) const { return class_of[i] == class_of[j]; }

    bool leq_z(std::size_t lo, std::size_t hi) const {
        if (!same_class(lo, hi)) return false;
        return rel[class_of[lo]][pos_in_class[lo]][pos_in_class[hi]];
    }
};

Ctx build_ctx(const Window& w, int max_points) {
    Ctx ctx;
    ctx.w = w;
    ctx.max_points = max_points;
    ctx.segs = segments_in_window(w);
    ctx.all = all_multisegments(w, max_points);

    std::map<Support, std::size_t> class_ids;
    ctx.class_of.resize(ctx.all.size());
    ctx.pos_in_class.resize(ctx.all.size());
    for (std::size_t i = 0; i < ctx.all.size(); ++i) {
        Support s = ctx.all[i].support();
        auto [it, fresh] = class_ids.emplace(s, ctx.classes.size());
        if (fresh) ctx.classes.emplace_back();
        ctx.class_of[i] = it->second;
        ctx.pos_in_class[i] = ctx.classes[it->second].size();
        ctx.classes[it->second].push_back(i);
    }

    ctx.rel.resize(ctx.classes.size());
    PosetCache cache;
    for (std::size_t c = 0; c < ctx.classes.size(); ++c) {
        const auto& members = ctx.classes[c];
        auto& r = ctx.rel[c];
        r.assign(members.size(), std::vector<bool>(members.size(), false));
        std::map<Multisegment, std::size_t> index;
        for (std::size_t p = 0; p < members.size(); ++p)
            index.emplace(ctx.all[members[p]], p);
        for (std::size_t hi = 0; hi < members.size(); ++hi)
            for (const Multisegment& lo : cache.down_set(ctx.all[members[hi]]))
                r[index.at(lo)][hi] = true;
    }
    return ctx;
}

void prepare_pairs(Ctx& ctx) {
    if (ctx.pairs_ready) return;
    for (std::size_t c = 0; c < ctx.classes.size(); ++c) {
        const auto& members = ctx.classes[c];
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = 0; j < members.size(); ++j)
                if (i != j && ctx.rel[c][i][j]) ctx.z_pairs.emplace_back(members[i], members[j]);
    }
    ctx.pairs_ready = true;
}

void prepare_chains(Ctx& ctx) {
    if (ctx.chains_ready) return;
    prepare_pairs(ctx);
    for (const auto& [lo, hi] : ctx.z_pairs) {
        Ctx::ZChain chain{lo, hi, {}};
        std::size_t c = ctx.class_of[lo];
        for (std::size_t mid : ctx.classes[c])
            if (ctx.leq_z(lo, mid) && ctx.leq_z(mid, hi)) chain.mids.push_back(mid);
        ctx.z_chain_instances += chain.mids.size();
        ctx.z_chains.push_back(std::move(chain));
    }
    ctx.chains_ready = true;
}

void prepare_replacements(Ctx& ctx) {
    if (ctx.repl_ready) return;
    for (std::size_t i = 0; i < ctx.all.size(); ++i) {
        const Multisegment& m = ctx.all[i];
        if (m.empty()) continue;
        int c = *m.min_point();
        if (m.at_point(c).size() != m.size()) continue; // not at a single point
        Segment prev(0, 0);
        bool have_prev = false;
        for (const Segment& d : m.segments()) {
            if (have_prev && d == prev) continue; // copies are interchangeable
            prev = d;
            have_prev = true;
            for (int b2 = d.b + 1; b2 <= ctx.w.hi; ++b2) {
                if (m.total_length() + (b2 - d.b) > ctx.max_points) break;
                ctx.replacements.push_back({i, d, Segment(c, b2)});
            }
        }
    }
    ctx.repl_ready = true;
}

// ---------------------------------------------------------- parallel sweep

struct SweepOutcome {
    std::optional<json> ce;
    std::uint64_t evaluated = 0;
};

// fn(outer, evaluated) -> first counterexample within that outer slot.
// The reported counterexample is the one with the smallest outer index,
// independent of worker count.
SweepOutcome run_parallel(std::uint64_t n, unsigned workers,
                          const std::function<std::optional<json>(std::uint64_t, std::uint64_t&)>& fn) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(n, 1)));

    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
    std::vector<std::uint64_t> best_local(workers, std::numeric_limits<std::uint64_t>::max());
    std::vector<std::optional<json>> ce_local(workers);
    std::vector<std::uint64_t> eval_local(workers, 0);

    auto work = [&](unsigned wi) {
        for (;;) {
            std::uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= n) return;
            if (i > best.load(std::memory_order_relaxed)) continue;
            std::optional<json> ce = fn(i, eval_local[wi]);
            if (ce) {
                if (i < best_local[wi]) {
                    best_local[wi] = i;
                    ce_local[wi] = std::move(ce);
                }
                std::uint64_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {}
            }
        }
    };

    if (workers <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned wi = 0; wi < workers; ++wi) pool.emplace_back(work, wi);
        for (auto& t : pool) t.join();
    }

    SweepOutcome out;
    std::uint64_t win = std::numeric_limits<std::uint64_t>::max();
    for (unsigned wi = 0; wi < workers; ++wi) {
        out.evaluated += eval_local[wi];
        if (best_local[wi] < win) {
            win = best_local[wi];
            out.ce = ce_local[wi];
        }
    }
    if (out.ce) out.evaluated = 0; // counts are only meaningful for certificates
    return out;
}

// ------------------------------------------------------------- per-h cache

struct HCache {
    std::size_t h_idx = SIZE_MAX;
    std::vector<RemovalOutcome> out;
    std::vector<FineChain> chains;

    void build(const Ctx& ctx, std::size_t h, bool with_chains) {
        h_idx = h;
        out.clear();
        chains.clear();
        out.reserve(ctx.all.size());
        const Multisegment& hm = ctx.all[h];
        for (const Multisegment& n : ctx.all) out.push_back(r_mult(n, hm));
        if (with_chains) {
            chains.reserve(ctx.all.size());
            for (const Multisegment& n : ctx.all) chains.push_back(fine_chain(n, hm));
        }
    }
};

json chain_terms_json(const FineChain& chain) {
    json terms = json::array();
    for (const Multisegment& t : chain.terms) terms.push_back(to_json(t));
    return terms;
}

// 𝔫″ ≤^fc 𝔫′ given both admissible and the cached chains
bool fc_leq(const FineChain& hi_chain, const FineChain& lo_chain) {
    for (std::size_t i = 0; i < hi_chain.length(); ++i) {
        if (hi_chain.terms[i] == lo_chain.terms[i]) continue;
        PartialCmp cmp = lex_compare_at(hi_chain.terms[i], lo_chain.terms[i], hi_chain.points[i]);
        return cmp == PartialCmp::LT;
    }
    return true; // equal chains
}

// fiber minima within one outcome group, via the class relation
std::vector<std::size_t> group_minima(const Ctx& ctx, const std::vector<std::size_t>& group) {
    std::vector<std::size_t> minima;
    for (std::size_t x : group) {
        bool minimal = true;
        for (std::size_t y : group)
            if (y != x && ctx.leq_z(y, x)) {
                minimal = false;
                break;
            }
        if (minimal) minima.push_back(x);
    }
    return minima;
}

std::map<Multisegment, std::vector<std::size_t>> group_by_outcome(const HCache& cache) {
    std::map<Multisegment, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < cache.out.size(); ++i)
        if (!cache.out[i].is_infinity()) groups[cache.out[i].value()].push_back(i);
    return groups;
}

Multisegment all_singletons(const Support& s) {
    std::vector<Segment> segs;
    segs.reserve(s.points.size());
    for (int p : s.points) segs.emplace_back(p, p);
    return Multisegment(std::move(segs));
}

// ---------------------------------------------------------------- checkers
//
// Each checker evaluates one instance and returns a counterexample record
// (inputs plus both sides) or nullopt. Instances that fail a filter do not
// count as evaluated.

json ce_base(const char* property) {
    json j;
    j["property"] = property;
    return j;
}

std::optional<json> check_L1(const Ctx&, const Segment& d, const Multisegment& h,
                             std::uint64_t& evaluated) {
    if (!admissible_seg(d, h)) return std::nullopt;
    ++evaluated;
    Segment u = upsilon(d, h);
    Multisegment hstar = h.minus(u).plus(left_truncate(u));
    RemovalOutcome lhs = r_seg(d, h);
    RemovalOutcome rhs =
        left_truncate(d) ? r_seg(*left_truncate(d), hstar) : RemovalOutcome(hstar);
    if (lhs == rhs) return std::nullopt;
    json j = ce_base("L1");
    j["delta"] = to_json(d);
    j["h"] = to_json(h);
    j["r(delta,h)"] = to_json(lhs);
    j["r(-delta,h*)"] = to_json(rhs);
    return j;
}

std::optional<json> check_L2(const Ctx& ctx, const Segment& d, const Multisegment& h,
                             std::uint64_t& evaluated) {
    if (!admissible_seg(d, h)) return std::nullopt;
    ++evaluated;
    Multisegment res = r_seg(d, h).value();
    for (int ap = ctx.w.lo; ap < d.a; ++ap) {
        if (res.at_point(ap) == h.at_point(ap)) continue;
        json j = ce_base("L2");
        j["delta"] = to_json(d);
        j["h"] = to_json(h);
        j["point"] = ap;
        j["r(delta,h)[a']"] = to_json(res.at_point(ap));
        j["h[a']"] = to_json(h.at_point(ap));
        return j;
    }
    return std::nullopt;
}

std::optional<json> check_L3(const Ctx&, const Segment& d, const Multisegment& h,
                             std::uint64_t& evaluated) {
    if (!h.contains(d)) return std::nullopt;
    ++evaluated;
    RemovalOutcome lhs = r_seg(d, h);
    Multisegment rhs = h.minus(d);
    if (!lhs.is_infinity() && lhs.value() == rhs) return std::nullopt;
    json j = ce_base("L3");
    j["delta"] = to_json(d);
    j["h"] = to_json(h);
    j["r(delta,h)"] = to_json(lhs);
    j["h-delta"] = to_json(rhs);
    return j;
}

std::optional<json> check_L4(const Ctx&, const Segment& d1, const Segment& d2,
                             const Multisegment& h, std::uint64_t& evaluated) {
    if (d1.a != d2.a) return std::nullopt;
    if (!admissible_seg(d1, h) || !admissible_seg(d2, h)) return std::nullopt;
    Multisegment r1 = r_seg(d1, h).value();
    Multisegment r2 = r_seg(d2, h).value();
    if (!admissible_seg(d2, r1) || !admissible_seg(d1, r2)) return std::nullopt;
    ++evaluated;
    Multisegment lhs({upsilon(d1, h), upsilon(d2, r1)});
    Multisegment rhs({upsilon(d2, h), upsilon(d1, r2)});
    if (lhs == rhs) return std::nullopt;
    json j = ce_base("L4");
    j["delta"] = to_json(d1);
    j["delta'"] = to_json(d2);
    j["h"] = to_json(h);
    j["upsilon(d,h)+upsilon(d',r(d,h))"] = to_json(lhs);
    j["upsilon(d',h)+upsilon(d,r(d',h))"] = to_json(rhs);
    return j;
}

std::optional<json> check_L5(const Ctx&, const Segment& d1, const Segment& d2,
                             const Multisegment& h, std::uint64_t& evaluated) {
    if (linked(d1, d2)) return std::nullopt;
    if (!admissible_seg(d1, h) || !admissible_seg(d2, h)) return std::nullopt;
    ++evaluated;
    RemovalOutcome lhs = r_seg(d2, r_seg(d1, h));
    RemovalOutcome rhs = r_seg(d1, r_seg(d2, h));
    if (lhs == rhs) return std::nullopt;
    json j = ce_base("L5");
    j["delta"] = to_json(d1);
    j["delta'"] = to_json(d2);
    j["h"] = to_json(h);
    j["r(d',r(d,h))"] = to_json(lhs);
    j["r(d,r(d',h))"] = to_json(rhs);
    return j;
}

bool is_ascending(const std::vector<Segment>& order) {
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (linked(order[i], order[j]) && order[i].a >= order[j].a) return false;
    return true;
}

std::optional<json> check_ascending_independence(const Ctx&, const Multisegment& m,
                                                 const Multisegment& h,
                                                 std::uint64_t& evaluated) {
    ++evaluated;
    RemovalOutcome ref = r_mult(m, h);
    std::vector<Segment> order = m.segments();
    do {
        if (!is_ascending(order)) continue;
        RemovalOutcome acc{h};
        for (const Segment& d : order) acc = r_seg(d, acc);
        if (acc == ref) continue;
        json j = ce_base("ascending-independence");
        j["m"] = to_json(m);
        j["h"] = to_json(h);
        json ord = json::array();
        for (const Segment& d : order) ord.push_back(to_json(d));
        j["ordering"] = ord;
        j["outcome"] = to_json(acc);
        j["canonical_outcome"] = to_json(ref);
        return j;
    } while (std::next_permutation(order.begin(), order.end()));
    return std::nullopt;
}

std::optional<json> check_fs_well_defined(const Ctx&, const Multisegment& n,
                                          const Multisegment& h, std::uint64_t& evaluated) {
    if (n.empty()) return std::nullopt;
    ++evaluated;
    Multisegment ref = fs(n, h);
    std::vector<Segment> order = n.at_point(*n.min_point()).segments();
    do {
        std::vector<Segment> firsts;
        RemovalOutcome state{h};
        bool dead = false;
        for (const Segment& d : order) {
            if (state.is_infinity() || !admissible_seg(d, state.value())) {
                dead = true;
                break;
            }
            firsts.push_back(upsilon(d, state.value()));
            state = r_seg(d, state);
        }
        Multisegment got = dead ? Multisegment{} : Multisegment(std::move(firsts));
        if (got == ref) continue;
        json j = ce_base("fs-well-definedness");
        j["n"] = to_json(n);
        j["h"] = to_json(h);
        json ord = json::array();
        for (const Segment& d : order) ord.push_back(to_json(d));
        j["ordering"] = ord;
        j["fs_under_ordering"] = to_json(got);
        j["fs_canonical"] = to_json(ref);
        return j;
    } while (std::next_permutation(order.begin(), order.end()));
    return std::nullopt;
}

std::optional<json> check_locality(const Ctx&, const Multisegment& n, const Multisegment& h,
                                   std::uint64_t& evaluated) {
    if (n.empty()) return std::nullopt;
    ++evaluated;
    int a = *n.min_point();
    Multisegment whole = fs(n, h);
    Multisegment local = fs(n.at_point(a), h);
    Multisegment point = fs(n.at_point(a), h.at_point(a));
    if (whole == local && local == point) return std::nullopt;
    json j = ce_base("locality");
    j["n"] = to_json(n);
    j["h"] = to_json(h);
    j["fs(n,h)"] = to_json(whole);
    j["fs(n[a],h)"] = to_json(local);
    j["fs(n[a],h[a])"] = to_json(point);
    return j;
}

std::optional<json> check_multiple_truncation(const Ctx&, const Multisegment& n,
                                              const Multisegment& h,
                                              std::uint64_t& evaluated) {
    if (n.empty() || fs(n, h).empty()) return std::nullopt; // 𝔫[a] must be admissible
    ++evaluated;
    RemovalOutcome lhs = r_mult(n, h);
    RemovalOutcome rhs = r_mult(trd(n, h), trr(n, h));
    if (lhs == rhs) return std::nullopt;
    json j = ce_base("multiple-truncation");
    j["n"] = to_json(n);
    j["h"] = to_json(h);
    j["r(n,h)"] = to_json(lhs);
    j["r(trd,trr)"] = to_json(rhs);
    return j;
}

std::optional<json> check_coincidence(const Multisegment& ni, const Multisegment& nj,
                                      const Multisegment& h, const RemovalOutcome& ri,
                                      const RemovalOutcome& rj, const FineChain& ci,
                                      const FineChain& cj) {
    bool same_outcome = !ri.is_infinity() && !rj.is_infinity() && ri == rj;
    bool coincide = !ri.is_infinity() && !rj.is_infinity() && ci.terms == cj.terms;
    if (same_outcome == coincide) return std::nullopt;
    json j = ce_base("coincidence");
    j["n"] = to_json(ni);
    j["n'"] = to_json(nj);
    j["h"] = to_json(h);
    j["r(n,h)"] = to_json(ri);
    j["r(n',h)"] = to_json(rj);
    j["chain_n"] = chain_terms_json(ci);
    j["chain_n'"] = chain_terms_json(cj);
    return j;
}

std::optional<json> check_order_reversal(const Multisegment& lo, const Multisegment& hi,
                                         const Multisegment& h, const FineChain& lo_chain,
                                         const FineChain& hi_chain) {
    if (fc_leq(hi_chain, lo_chain)) return std::nullopt;
    json j = ce_base("order-reversal");
    j["n_lo"] = to_json(lo);
    j["n_hi"] = to_json(hi);
    j["h"] = to_json(h);
    j["chain_lo"] = chain_terms_json(lo_chain);
    j["chain_hi"] = chain_terms_json(hi_chain);
    return j;
}

std::optional<json> check_single_replacement(const Ctx&, const Multisegment& m1,
                                             const Segment& from, const Segment& to,
                                             const Multisegment& h,
                                             std::uint64_t& evaluated) {
    Multisegment m2 = m1.minus(from).plus(to);
    int c = from.a;
    Multisegment fs1 = fs(m1, h);
    Multisegment fs2 = fs(m2, h);
    if (fs2.empty()) return std::nullopt; // m2 inadmissible: ∞ dominates
    ++evaluated;
    json j = ce_base("single-replacement");
    j["m1"] = to_json(m1);
    j["m2"] = to_json(m2);
    j["h"] = to_json(h);
    j["fs(m1,h)"] = to_json(fs1);
    j["fs(m2,h)"] = to_json(fs2);
    if (fs1.empty()) {
        j["violation"] = "m2 admissible but m1 not";
        return j;
    }
    PartialCmp cmp = lex_compare_at(fs1, fs2, c);
    if (cmp == PartialCmp::LT || cmp == PartialCmp::EQ) return std::nullopt;
    j["violation"] = "fs(m1,h) is not <=^a_c fs(m2,h)";
    return j;
}

std::optional<json> check_three_way(const Ctx&, const Segment& d, const Segment& dp,
                                    const Multisegment& h, std::uint64_t& evaluated) {
    if (!admissible_seg(d, h) || !linked(d, dp) || d.b >= dp.b) return std::nullopt;
    ++evaluated;
    bool no = non_overlapping(d, dp, h);
    bool ep = eta_preserved(d, dp, h);
    bool is = intermediate_segment(d, dp, h);
    if (no == ep && ep == is) return std::nullopt;
    json j = ce_base("three-way-equivalence");
    j["delta"] = to_json(d);
    j["delta'"] = to_json(dp);
    j["h"] = to_json(h);
    j["non_overlapping"] = no;
    j["eta_preserved"] = ep;
    j["intermediate_segment"] = is;
    return j;
}

std::optional<json> check_iu_criterion(const Ctx&, const Segment& d, const Segment& dp,
                                       const Multisegment& h, std::uint64_t& evaluated) {
    if (!admissible_seg(d, h) || !linked(d, dp) || d.b >= dp.b) return std::nullopt;
    Multisegment rd = r_seg(d, h).value();
    if (!admissible_seg(dp, rd)) return std::nullopt;
    ++evaluated;
    Multisegment pair({d, dp});
    Multisegment merged = Multisegment({seg_union(d, dp)}).plus(seg_intersection(d, dp));
    RemovalOutcome lhs = r_mult(pair, h);
    RemovalOutcome rhs = r_mult(merged, h);
    bool overlap = !non_overlapping(d, dp, h);
    if (overlap == (lhs == rhs)) return std::nullopt;
    json j = ce_base("IU-criterion");
    j["delta"] = to_json(d);
    j["delta'"] = to_json(dp);
    j["h"] = to_json(h);
    j["non_overlapping"] = !overlap;
    j["r({d,d'},h)"] = to_json(lhs);
    j["r({d∩d',d∪d'},h)"] = to_json(rhs);
    return j;
}

std::optional<json> check_transitivity(const Ctx&, const Segment& d, const Segment& dp,
                                       const Multisegment& h, std::uint64_t& evaluated) {
    if (!admissible_seg(d, h) || !linked(d, dp) || d.b >= dp.b) return std::nullopt;
    if (!non_overlapping(d, dp, h)) return std::nullopt;
    ++evaluated;
    for (int ta = dp.a; ta <= dp.b; ++ta) {
        Segment t(ta, dp.b);
        if (!linked(d, t) || d.b >= t.b) continue;
        if (non_overlapping(d, t, h)) continue;
        json j = ce_base("transitivity-corollary");
        j["delta"] = to_json(d);
        j["delta'"] = to_json(dp);
        j["tilde"] = to_json(t);
        j["h"] = to_json(h);
        j["non_overlapping(delta,delta')"] = true;
        j["non_overlapping(delta,tilde)"] = false;
        return j;
    }
    return std::nullopt;
}

std::optional<json> check_bridge(const Ctx&, const Segment& d, const Segment& dp,
                                 const Multisegment& h, std::uint64_t& evaluated) {
    if (dp.a != d.a + 1 || !linked(d, dp) || d.b >= dp.b || !admissible_seg(d, h))
        return std::nullopt;
    ++evaluated;
    bool no = non_overlapping(d, dp, h);
    bool lm = is_locally_minimizable(Multisegment({d, dp}), h);
    if (no == !lm) return std::nullopt;
    json j = ce_base("bridge");
    j["delta"] = to_json(d);
    j["delta'"] = to_json(dp);
    j["h"] = to_json(h);
    j["non_overlapping"] = no;
    j["is_locally_minimizable"] = lm;
    return j;
}

std::optional<json> check_highest_derivative(const Ctx&, const Multisegment& h,
                                             std::uint64_t& evaluated) {
    ++evaluated;
    RemovalOutcome out = r_mult(h, h);
    bool empty_outcome = !out.is_infinity() && out.value().empty();
    Multisegment min = empty_outcome ? find_minimal(h, h) : Multisegment{};
    if (empty_outcome && min == h) return std::nullopt;
    json j = ce_base("highest-derivative-shadow");
    j["h"] = to_json(h);
    j["r(h,h)"] = to_json(out);
    if (empty_outcome) j["find_minimal(h,h)"] = to_json(min);
    return j;
}

std::optional<json> check_singleton_maximum(const Ctx& ctx, std::size_t h_idx,
                                            std::uint64_t& evaluated) {
    const Multisegment& h = ctx.n(h_idx);
    ++evaluated;
    Support s = h.support();
    RemovalOutcome empty_target{Multisegment{}};
    std::vector<std::size_t> members;
    for (std::size_t i : ctx.classes[ctx.class_of[h_idx]])
        if (r_mult(ctx.n(i), h) == empty_target) members.push_back(i);
    std::vector<std::size_t> maxima;
    for (std::size_t x : members) {
        bool maximal = true;
        for (std::size_t y : members)
            if (y != x && ctx.leq_z(x, y)) {
                maximal = false;
                break;
            }
        if (maximal) maxima.push_back(x);
    }
    Multisegment expect = all_singletons(s);
    if (maxima.size() == 1 && ctx.n(maxima.front()) == expect) return std::nullopt;
    json j = ce_base("singleton-maximum");
    j["h"] = to_json(h);
    json mx = json::array();
    for (std::size_t x : maxima) mx.push_back(to_json(ctx.n(x)));
    j["maximal_elements"] = mx;
    j["expected_maximum"] = to_json(expect);
    return j;
}

// fiber of r(n,h) from the class of n, brute force
std::vector<std::size_t> fiber_members(const Ctx& ctx, std::size_t n_idx,
                                       const Multisegment& h, const RemovalOutcome& target) {
    std::vector<std::size_t> members;
    for (std::size_t i : ctx.classes[ctx.class_of[n_idx]])
        if (r_mult(ctx.n(i), h) == target) members.push_back(i);
    return members;
}

json group_json(const Ctx& ctx, const std::vector<std::size_t>& group) {
    json arr = json::array();
    for (std::size_t i : group) arr.push_back(to_json(ctx.n(i)));
    return arr;
}

std::optional<json> unique_minimum_violation(const Ctx& ctx, const Multisegment& h,
                                             const RemovalOutcome& target,
                                             const std::vector<std::size_t>& group,
                                             const char* property) {
    std::vector<std::size_t> minima = group_minima(ctx, group);
    if (minima.size() == 1) return std::nullopt;
    json j = ce_base(property);
    j["h"] = to_json(h);
    j["target"] = to_json(target);
    j["fiber"] = group_json(ctx, group);
    j["minimal_elements"] = group_json(ctx, minima);
    return j;
}

// ------------------------------------------------------------- properties

struct Property {
    std::string id;
    std::string space;
    std::function<void(Ctx&)> prepare; // may be empty
    std::function<std::uint64_t(const Ctx&)> size;
    std::function<SweepOutcome(Ctx&, unsigned)> exhaustive;
    // one instance from raw 64-bit draws; deterministic given the draw
    std::function<std::optional<json>(Ctx&, const std::array<std::uint64_t, 4>&,
                                      std::uint64_t&)> sample;
};

// D × H sweep helper
template <typename Fn>
SweepOutcome sweep_dh(Ctx& ctx, unsigned workers, Fn check) {
    return run_parallel(ctx.all.size(), workers,
                        [&](std::uint64_t h_idx, std::uint64_t& evaluated) -> std::optional<json> {
                            const Multisegment& h = ctx.n(h_idx);
                            for (const Segment& d : ctx.segs)
                                if (auto ce = check(ctx, d, h, evaluated)) return ce;
                            return std::nullopt;
                        });
}

// D × D × H sweep helper
template <typename Fn>
SweepOutcome sweep_ddh(Ctx& ctx, unsigned workers, Fn check) {
    return run_parallel(ctx.all.size(), workers,
                        [&](std::uint64_t h_idx, std::uint64_t& evaluated) -> std::optional<json> {
                            const Multisegment& h = ctx.n(h_idx);
                            for (const Segment& d1 : ctx.segs)
                                for (const Segment& d2 : ctx.segs)
                                    if (auto ce = check(ctx, d1, d2, h, evaluated)) return ce;
                            return std::nullopt;
                        });
}

// N × H sweep helper
template <typename Fn>
SweepOutcome sweep_nh(Ctx& ctx, unsigned workers, Fn check) {
    return run_parallel(ctx.all.size(), workers,
                        [&](std::uint64_t h_idx, std::uint64_t& evaluated) -> std::optional<json> {
                            const Multisegment& h = ctx.n(h_idx);
                            for (const Multisegment& n : ctx.all)
                                if (auto ce = check(ctx, n, h, evaluated)) return ce;
                            return std::nullopt;
                        });
}

std::vector<Property> make_properties() {
    std::vector<Property> props;

    auto seg_of = [](Ctx& ctx, std::uint64_t v) -> const Segment& {
        return ctx.segs[v % ctx.segs.size()];
    };
    auto n_of = [](Ctx& ctx, std::uint64_t v) -> const Multisegment& {
        return ctx.all[v % ctx.all.size()];
    };

    auto add_dh = [&](const char* id, auto checker) {
        props.push_back(Property{
            id, "all (Δ, 𝔥) with Δ a window segment and 𝔥 a window multisegment", {},
            [](const Ctx& c) { return std::uint64_t(c.segs.size()) * c.all.size(); },
            [checker](Ctx& c, unsigned w) { return sweep_dh(c, w, checker); },
            [checker, seg_of, n_of](Ctx& c, const std::array<std::uint64_t, 4>& d,
                                    std::uint64_t& ev) {
                return checker(c, seg_of(c, d[0]), n_of(c, d[1]), ev);
            }});
    };
    auto add_ddh = [&](const char* id, auto checker) {
        props.push_back(Property{
            id, "all (Δ, Δ′, 𝔥) with window segments and a window multisegment", {},
            [](const Ctx& c) {
                return std::uint64_t(c.segs.size()) * c.segs.size() * c.all.size();
            },
            [checker](Ctx& c, unsigned w) { return sweep_ddh(c, w, checker); },
            [checker, seg_of, n_of](Ctx& c, const std::array<std::uint64_t, 4>& d,
                                    std::uint64_t& ev) {
                return checker(c, seg_of(c, d[0]), seg_of(c, d[1]), n_of(c, d[2]), ev);
            }});
    };
    auto add_nh = [&](const char* id, auto checker) {
        props.push_back(Property{
            id, "all (𝔫, 𝔥) pairs of window multisegments", {},
            [](const Ctx& c) { return std::uint64_t(c.all.size()) * c.all.size(); },
            [checker](Ctx& c, unsigned w) { return sweep_nh(c, w, checker); },
            [checker, n_of](Ctx& c, const std::array<std::uint64_t, 4>& d, std::uint64_t& ev) {
                return checker(c, n_of(c, d[0]), n_of(c, d[1]), ev);
            }});
    };

    add_dh("L1", check_L1);
    add_dh("L2", check_L2);
    add_dh("L3", check_L3);
    add_ddh("L4", check_L4);
    add_ddh("L5", check_L5);
    add_nh("ascending-independence", check_ascending_independence);
    add_nh("fs-well-definedness", check_fs_well_defined);
    add_nh("locality", check_locality);
    add_nh("multiple-truncation", check_multiple_truncation);

    // coincidence: biconditional over unordered pairs, cached per 𝔥
    props.push_back(Property{
        "coincidence", "all (𝔥, {𝔫, 𝔫′}) with unordered multisegment pairs of the window",
        {},
        [](const Ctx& c) {
            std::uint64_t k = c.all.size();
            return k * (k + 1) / 2 * k;
        },
        [](Ctx& ctx, unsigned workers) {
            return run_parallel(
                ctx.all.size(), workers,
                [&](std::uint64_t h_idx, std::uint64_t& evaluated) -> std::optional<json> {
                    HCache cache;
                    cache.build(ctx, h_idx, true);
                    const Multisegment& h = ctx.n(h_idx);
                    for (std::size_t i = 0; i < ctx.all.size(); ++i)
                        for (std::size_t j = i; j < ctx.all.size(); ++j) {
                            ++evaluated;
                            if (auto ce = check_coincidence(ctx.n(i), ctx.n(j), h, cache.out[i],
                                                            cache.out[j], cache.chains[i],
                                                            cache.chains[j]))
                                return ce;
                        }
                    return std::nullopt;
                });
        },
        [](Ctx& ctx, const std::array<std::uint64_t, 4>& d, std::uint64_t& ev)
            -> std::optional<json> {
            const Multisegment& ni = ctx.all[d[0] % ctx.all.size()];
            const Multisegment& nj = ctx.all[d[1] % ctx.all.size()];
            const Multisegment& h = ctx.all[d[2] % ctx.all.size()];
            ++ev;
            return check_coincidence(ni, nj, h, r_mult(ni, h), r_mult(nj, h),
                                     fine_chain(ni, h), fine_chain(nj, h));
        }});

    // order-reversal over precomputed strict ≤_Z pairs
    props.push_back(Property{
        "order-reversal",
        "all (𝔥, 𝔫′ <_Z 𝔫″) with same-support comparable pairs, both admissible",
        [](Ctx& ctx) { prepare_pairs(ctx); },
        [](const Ctx& c) { return std::uint64_t(c.z_pairs.size()) * c.all.size(); },
        [](Ctx& ctx, unsigned workers) {
            return run_parallel(
                ctx.all.size(), workers,
                [&](std::uint64_t h_idx, std::uint64_t& evaluated) -> std::optional<json> {
                    HCache cache;
                    cache.build(ctx, h_idx, true);
                    const Multisegment& h = ctx.n(h_idx);
                    for (const auto& [lo, hi] : ctx.z_pairs) {
                        if (cache.out[lo].is_infinity() || cache.out[hi].is_infinity()) continue;
                        ++evaluated;
                        if (auto ce = check_order_reversal(ctx.n(lo), ctx.n(hi), h,
                                                           cache.chains[lo], cache.chains[hi]))
                            return ce;
                    }
                    return std::nullopt;
                });
        },
        [](Ctx& ctx, const std::array<std::uint64_t, 4>& d, std::uint64_t& ev)
            -> std::optional<json> {
            if (ctx.z_pairs.empty()) return std::nullopt;
            const auto& [lo, hi] = ctx.z_pairs[d[0] % ctx.z_pairs.size()];
            const Multisegment& h = ctx.all[d[1] % ctx.all.size()];
            if (r_mult(ctx.n(lo), h).is_infinity() || r_mult(ctx.n(hi), h).is_infinity())
                return std::nullopt;
            ++ev;
            return check_order_reversal(ctx.n(lo), ctx.n(hi), h, fine_chain(ctx.n(lo), h),
                                        fine_chain(ctx.n(hi), h));
        }});

    // single-replacement over precomputed (m1, Δ→Δ_long) tuples
    props.push_back(Property{
        "single-replacement",
        "all (𝔪₁ at one point, segment lengthened in place, 𝔥) within the window",
        [](Ctx& ctx) { prepare_replacements(ctx); },
        [](const Ctx& c) { return std::uint64_t(c.replacements.size()) * c.all.size(); },
        [](Ctx& ctx, unsigned workers) {
            return run_parallel(
                ctx.all.size(), workers,
                [&](std::uint64_t h_idx, std::uint64_t& evaluated) -> std::optional<json> {
                    const Multisegment& h = ctx.n(h_idx);
                    for (const auto& rep : ctx.replacements)
                        if (auto ce = check_single_replacement(ctx, ctx.n(rep.m1), rep.from,
                                                               rep.to, h, evaluated))
                            return ce;
                    return std::nullopt;
                });
        },
        [](Ctx& ctx, const std::array<std::uint64_t, 4>& d, std::uint64_t& ev)
            -> std::optional<json> {
            if (ctx.replacements.empty()) return std::nullopt;
            const auto& rep = ctx.replacements[d[0] % ctx.replacements.size()];
            const Multisegment& h = ctx.all[d[1] % ctx.all.size()];
            return check_single_replacement(ctx, ctx.n(rep.m1), rep.from, rep.to, h, ev);
        }});

    // convexity over precomputed ≤_Z chains
    props.push_back(Property{
        "convexity",
        "all (𝔥, 𝔫′ ≤_Z 𝔫″ ≤_Z 𝔫) chains with equal finite outcomes at the endpoints",
        [](Ctx& ctx) { prepare_chains(ctx); },
        [](const Ctx& c) { return c.z_chain_instances * c.all.size(); },
        [](Ctx& ctx, unsigned workers) {
            return run_parallel(
                ctx.all.size(), workers,
                [&](std::uint64_t h_idx, std::uint64_t& evaluated) -> std::optional<json> {
                    HCache cache;
                    cache.build(ctx, h_idx, false);
                    const Multisegment& h = ctx.n(h_idx);
                    for (const auto& chain : ctx.z_chains) {
                        const RemovalOutcome& olo = cache.out[chain.lo];
                        if (olo.is_infinity() || !(olo == cache.out[chain.hi])) continue;
                        for (std::size_t mid : chain.mids) {
                            ++evaluated;
                            if (cache.out[mid] == olo) continue;
                            json j = ce_base("convexity");
                            j["n_lo"] = to_json(ctx.n(chain.lo));
                            j["n_mid"] = to_json(ctx.n(mid));
                            j["n_hi"] = to_json(ctx.n(chain.hi));
                            j["h"] = to_json(h);
                            j["endpoint_outcome"] = to_json(olo);
                            j["mid_outcome"] = to_json(cache.out[mid]);
                            return j;
                        }
                    }
                    return std::nullopt;
                });
        },
        [](Ctx& ctx, const std::array<std::uint64_t, 4>& d, std::uint64_t& ev)
            -> std::optional<json> {
            if (ctx.z_chains.empty()) return std::nullopt;
            const auto& chain = ctx.z_chains[d[0] % ctx.z_chains.size()];
            const Multisegment& h = ctx.all[d[1] % ctx.all.size()];
            RemovalOutcome olo = r_mult(ctx.n(chain.lo), h);
            if (olo.is_infinity() || !(olo == r_mult(ctx.n(chain.hi), h))) return std::nullopt;
            std::size_t mid = chain.mids[d[2] % chain.mids.size()];
            ++ev;
            RemovalOutcome omid = r_mult(ctx.n(mid), h);
            if (omid == olo) return std::nullopt;
            json j = ce_base("convexity");
            j["n_lo"] = to_json(ctx.n(chain.lo));
            j["n_mid"] = to_json(ctx.n(mid));
            j["n_hi"] = to_json(ctx.n(chain.hi));
            j["h"] = to_json(h);
            j["endpoint_outcome"] = to_json(olo);
            j["mid_outcome"] = to_json(omid);
            return j;
        }});

    // unique-minimum: each admissible 𝔫 confirms its fiber has one minimum
    props.push_back(Property{
        "unique-minimum", "fibers of every admissible (𝔫, 𝔥) pair of the window",
        {},
        [](const Ctx& c) { return std::uint64_t(c.all.size()) * c.all.size(); },
        [](Ctx& ctx, unsigned workers) {
            return run_parallel(
                ctx.all.size(), workers,
                [&](std::uint64_t h_idx, std::uint64_t& evaluated) -> std::optional<json> {
                    HCache cache;
                    cache.build(ctx, h_idx, false);
                    const Multisegment& h = ctx.n(h_idx);
                    for (const auto& [target, group] : group_by_outcome(cache)) {
                        evaluated += group.size();
                        if (auto ce = unique_minimum_violation(ctx, h, RemovalOutcome(target),
                                                               group, "unique-minimum"))
                            return ce;
                    }
                    return std::nullopt;
                });
        },
        [](Ctx& ctx, const std::array<std::uint64_t, 4>& d, std::uint64_t& ev)
            -> std::optional<json> {
            std::size_t n_idx = d[0] % ctx.all.size();
            const Multisegment& h = ctx.all[d[1] % ctx.all.size()];
            RemovalOutcome target = r_mult(ctx.n(n_idx), h);
            if (target.is_infinity()) return std::nullopt;
            ++ev;
            return unique_minimum_violation(ctx, h, target, fiber_members(ctx, n_idx, h, target),
                                            "unique-minimum");
        }});

    // greedy-correctness: find_minimal agrees with the brute-force minimum
    props.push_back(Property{
        "greedy-correctness", "every admissible (𝔫, 𝔥) pair of the window",
        {},
        [](const Ctx& c) { return std::uint64_t(c.all.size()) * c.all.size(); },
        [](Ctx& ctx, unsigned workers) {
            return run_parallel(
                ctx.all.size(), workers,
                [&](std::uint64_t h_idx, std::uint64_t& evaluated) -> std::optional<json> {
                    HCache cache;
                    cache.build(ctx, h_idx, false);
                    const Multisegment& h = ctx.n(h_idx);
                    for (const auto& [target, group] : group_by_outcome(cache)) {
                        std::vector<std::size_t> minima = group_minima(ctx, group);
                        for (std::size_t i : group) {
                            ++evaluated;
                            Multisegment greedy = find_minimal(ctx.n(i), h);
                            if (minima.size() == 1 && greedy == ctx.n(minima.front())) continue;
                            json j = ce_base("greedy-correctness");
                            j["n"] = to_json(ctx.n(i));
                            j["h"] = to_json(h);
                            j["find_minimal"] = to_json(greedy);
                            j["fiber_minima"] = group_json(ctx, minima);
                            return j;
                        }
                    }
                    return std::nullopt;
                });
        },
        [](Ctx& ctx, const std::array<std::uint64_t, 4>& d, std::uint64_t& ev)
            -> std::optional<json> {
            std::size_t n_idx = d[0] % ctx.all.size();
            const Multisegment& h = ctx.all[d[1] % ctx.all.size()];
            RemovalOutcome target = r_mult(ctx.n(n_idx), h);
            if (target.is_infinity()) return std::nullopt;
            ++ev;
            std::vector<std::size_t> minima =
                group_minima(ctx, fiber_members(ctx, n_idx, h, target));
            Multisegment greedy = find_minimal(ctx.n(n_idx), h);
            if (minima.size() == 1 && greedy == ctx.n(minima.front())) return std::nullopt;
            json j = ce_base("greedy-correctness");
            j["n"] = to_json(ctx.n(n_idx));
            j["h"] = to_json(h);
            j["find_minimal"] = to_json(greedy);
            j["fiber_minima"] = group_json(ctx, minima);
            return j;
        }});

    // minimizability-iff-nonminimality
    props.push_back(Property{
        "minimizability-iff-nonminimality",
        "every admissible (𝔫, 𝔥) pair of the window",
        {},
        [](const Ctx& c) { return std::uint64_t(c.all.size()) * c.all.size(); },
        [](Ctx& ctx, unsigned workers) {
            return run_parallel(
                ctx.all.size(), workers,
                [&](std::uint64_t h_idx, std::uint64_t& evaluated) -> std::optional<json> {
                    HCache cache;
                    cache.build(ctx, h_idx, false);
                    const Multisegment& h = ctx.n(h_idx);
                    for (const auto& [target, group] : group_by_outcome(cache)) {
                        std::vector<std::size_t> minima = group_minima(ctx, group);
                        for (std::size_t i : group) {
                            ++evaluated;
                            bool minimizable = chain_minimizable(ctx.n(i), h).has_value();
                            bool is_min = minima.size() == 1 && i == minima.front();
                            if (minimizable == !is_min) continue;
                            json j = ce_base("minimizability-iff-nonminimality");
                            j["n"] = to_json(ctx.n(i));
                            j["h"] = to_json(h);
                            j["chain_minimizable"] = minimizable;
                            j["is_fiber_minimum"] = is_min;
                            j["fiber_minima"] = group_json(ctx, minima);
                            return j;
                        }
                    }
                    return std::nullopt;
                });
        },
        [](Ctx& ctx, const std::array<std::uint64_t, 4>& d, std::uint64_t& ev)
            -> std::optional<json> {
            std::size_t n_idx = d[0] % ctx.all.size();
            const Multisegment& h = ctx.all[d[1] % ctx.all.size()];
            RemovalOutcome target = r_mult(ctx.n(n_idx), h);
            if (target.is_infinity()) return std::nullopt;
            ++ev;
            std::vector<std::size_t> minima =
                group_minima(ctx, fiber_members(ctx, n_idx, h, target));
            bool minimizable = chain_minimizable(ctx.n(n_idx), h).has_value();
            bool is_min = minima.size() == 1 && ctx.n(n_idx) == ctx.n(minima.front());
            if (minimizable == !is_min) return std::nullopt;
            json j = ce_base("minimizability-iff-nonminimality");
            j["n"] = to_json(ctx.n(n_idx));
            j["h"] = to_json(h);
            j["chain_minimizable"] = minimizable;
            j["is_fiber_minimum"] = is_min;
            return j;
        }});

    // highest-derivative-shadow
    props.push_back(Property{
        "highest-derivative-shadow", "every window multisegment 𝔥",
        {},
        [](const Ctx& c) { return std::uint64_t(c.all.size()); },
        [](Ctx& ctx, unsigned workers) {
            return run_parallel(ctx.all.size(), workers,
                                [&](std::uint64_t h_idx, std::uint64_t& ev) {
                                    return check_highest_derivative(ctx, ctx.n(h_idx), ev);
                                });
        },
        [](Ctx& ctx, const std::array<std::uint64_t, 4>& d, std::uint64_t& ev) {
            return check_highest_derivative(ctx, ctx.all[d[0] % ctx.all.size()], ev);
        }});

    // generic-shadow
    props.push_back(Property{
        "generic-shadow", "fibers of every admissible 𝔫 over generic window 𝔥",
        {},
        [](const Ctx& c) { return std::uint64_t(c.all.size()) * c.all.size(); },
        [](Ctx& ctx, unsigned workers) {
            return run_parallel(
                ctx.all.size(), workers,
                [&](std::uint64_t h_idx, std::uint64_t& evaluated) -> std::optional<json> {
                    const Multisegment& h = ctx.n(h_idx);
                    if (!is_generic(h)) return std::nullopt;
                    HCache cache;
                    cache.build(ctx, h_idx, false);
                    for (const auto& [target, group] : group_by_outcome(cache)) {
                        evaluated += group.size();
                        std::vector<std::size_t> minima = group_minima(ctx, group);
                        if (minima.size() == 1 && is_generic(ctx.n(minima.front()))) continue;
                        json j = ce_base("generic-shadow");
                        j["h"] = to_json(h);
                        j["target"] = to_json(RemovalOutcome(target));
                        j["fiber_minima"] = group_json(ctx, minima);
                        return j;
                    }
                    return std::nullopt;
                });
        },
        [](Ctx& ctx, const std::array<std::uint64_t, 4>& d, std::uint64_t& ev)
            -> std::optional<json> {
            std::size_t n_idx = d[0] % ctx.all.size();
            const Multisegment& h = ctx.all[d[1] % ctx.all.size()];
            if (!is_generic(h)) return std::nullopt;
            RemovalOutcome target = r_mult(ctx.n(n_idx), h);
            if (target.is_infinity()) return std::nullopt;
            ++ev;
            std::vector<std::size_t> minima =
                group_minima(ctx, fiber_members(ctx, n_idx, h, target));
            if (minima.size() == 1 && is_generic(ctx.n(minima.front()))) return std::nullopt;
            json j = ce_base("generic-shadow");
            j["h"] = to_json(h);
            j["target"] = to_json(target);
            j["fiber_minima"] = group_json(ctx, minima);
            return j;
        }});

    // singleton-maximum
    props.push_back(Property{
        "singleton-maximum", "the fiber S′(𝔥, ∅) of every window multisegment 𝔥",
        {},
        [](const Ctx& c) { return std::uint64_t(c.all.size()); },
        [](Ctx& ctx, unsigned workers) {
            return run_parallel(ctx.all.size(), workers,
                                [&](std::uint64_t h_idx, std::uint64_t& ev) {
                                    return check_singleton_maximum(ctx, h_idx, ev);
                                });
        },
        [](Ctx& ctx, const std::array<std::uint64_t, 4>& d, std::uint64_t& ev) {
            return check_singleton_maximum(ctx, d[0] % ctx.all.size(), ev);
        }});

    add_ddh("three-way-equivalence", check_three_way);
    add_ddh("IU-criterion", check_iu_criterion);
    add_ddh("transitivity-corollary", check_transitivity);
    add_ddh("bridge", check_bridge);

    return props;
}

const std::vector<Property>& properties() {
    static const std::vector<Property> props = make_properties();
    return props;
}

} // namespace

std::vector<std::string> registered_properties() {
    std::vector<std::string> ids;
    for (const Property& p : properties()) ids.push_back(p.id);
    return ids;
}

nlohmann::json VerifyResult::to_json() const {
    json j;
    j["property"] = property;
    j["window"] = json::array({window.lo, window.hi});
    j["max_points"] = max_points;
    j["space"] = space;
    j["space_size"] = space_size;
    j["evaluated"] = evaluated;
    j["mode"] = exhaustive ? "exhaustive" : "sampled";
    if (!exhaustive) {
        j["seed"] = seed;
        j["samples"] = samples;
    }
    j["result"] = passed() ? "pass" : "counterexample";
    if (counterexample) j["counterexample"] = *counterexample;

    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : j.dump()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    j["record_id"] = buf;
    j["elapsed_sec"] = elapsed_sec;
    return j;
}

VerifyResult verify(const std::string& property_id, const Window& w, int max_points,
                    std::optional<std::uint64_t> seed, std::uint64_t budget,
                    std::uint64_t samples, unsigned workers) {
    const Property* prop = nullptr;
    for (const Property& p : properties())
        if (p.id == property_id) prop = &p;
    if (!prop) throw std::invalid_argument("unknown property id: " + property_id);

    auto t0 = std::chrono::steady_clock::now();
    Ctx ctx = build_ctx(w, max_points);
    if (prop->prepare) prop->prepare(ctx);

    VerifyResult res;
    res.property = prop->id;
    res.window = w;
    res.max_points = max_points;
    res.space = prop->space;
    res.space_size = prop->size(ctx);
    res.seed = seed.value_or(kDefaultSeed);
    res.exhaustive = res.space_size <= budget;

    if (res.exhaustive) {
        SweepOutcome out = prop->exhaustive(ctx, workers);
        res.evaluated = out.evaluated;
        res.counterexample = std::move(out.ce);
    } else {
        res.samples = samples;
        std::mt19937_64 rng(res.seed);
        std::vector<std::array<std::uint64_t, 4>> draws(samples);
        for (auto& d : draws)
            for (auto& v : d) v = rng();
        SweepOutcome out = run_parallel(
            samples, workers,
            [&](std::uint64_t i, std::uint64_t& ev) { return prop->sample(ctx, draws[i], ev); });
        res.evaluated = out.evaluated;
        res.counterexample = std::move(out.ce);
    }

    res.elapsed_sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

} // namespace multiseg
