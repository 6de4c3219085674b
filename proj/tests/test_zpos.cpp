#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "multiseg/enumerate.hpp"
#include "multiseg/zpos.hpp"

using namespace multiseg;

TEST_CASE("elementary intersection-union") {
    Multisegment m({Segment(0, 2), Segment(1, 3)});
    CHECK(elementary_iu(m, Segment(0, 2), Segment(1, 3)) ==
          Multisegment({Segment(0, 3), Segment(1, 2)}));

    // empty intersection term is dropped
    Multisegment singletons({Segment(0, 3), Segment(1, 1), Segment(2, 2)});
    CHECK(elementary_iu(singletons, Segment(1, 1), Segment(2, 2)) ==
          Multisegment({Segment(0, 3), Segment(1, 2)}));

    // containment pairs are unlinked
    Multisegment nested({Segment(0, 3), Segment(1, 2)});
    CHECK_THROWS_AS(elementary_iu(nested, Segment(0, 3), Segment(1, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(elementary_iu(m, Segment(0, 2), Segment(2, 4)), std::invalid_argument);
}

TEST_CASE("iu_successors") {
    CHECK(iu_successors(Multisegment({Segment(0, 3), Segment(1, 2)})).empty());
    auto succ = iu_successors(Multisegment({Segment(0, 2), Segment(1, 3)}));
    REQUIRE(succ.size() == 1);
    CHECK(succ[0] == Multisegment({Segment(0, 3), Segment(1, 2)}));

    succ = iu_successors(Multisegment({Segment(1, 1), Segment(2, 2), Segment(3, 3)}));
    REQUIRE(succ.size() == 2);
    CHECK(std::count(succ.begin(), succ.end(),
                     Multisegment({Segment(1, 2), Segment(3, 3)})) == 1);
    CHECK(std::count(succ.begin(), succ.end(),
                     Multisegment({Segment(1, 1), Segment(2, 3)})) == 1);
}

TEST_CASE("leq_Z") {
    Multisegment lower({Segment(0, 3), Segment(1, 2)});
    Multisegment upper({Segment(0, 2), Segment(1, 3)});
    CHECK(leq_Z(lower, upper));
    CHECK(leq_Z(lower, lower));
    CHECK_FALSE(leq_Z(upper, lower));
    CHECK_FALSE(leq_Z(Multisegment({Segment(0, 0)}), lower)); // support mismatch
}

TEST_CASE("interval_Z") {
    Multisegment lower({Segment(0, 3), Segment(1, 2)});
    Multisegment upper({Segment(0, 2), Segment(1, 3)});
    CHECK(interval_Z(lower, lower) == std::vector<Multisegment>{lower});
    auto both = interval_Z(lower, upper);
    REQUIRE(both.size() == 2);
    CHECK(both[0] == lower);
    CHECK(both[1] == upper);
    CHECK_THROWS_AS(interval_Z(upper, lower), std::invalid_argument);

    // a three-element chain: singletons -> one merge -> full merge
    Multisegment top({Segment(1, 1), Segment(2, 2), Segment(3, 3)});
    Multisegment mid({Segment(1, 2), Segment(3, 3)});
    Multisegment bot({Segment(1, 3)});
    auto chain = interval_Z(bot, top);
    CHECK(chain.size() == 4); // bot, two merges, top
    CHECK(std::count(chain.begin(), chain.end(), mid) == 1);
}

TEST_CASE("is_generic") {
    CHECK(is_generic(Multisegment({Segment(0, 3), Segment(1, 2)})));
    CHECK_FALSE(is_generic(Multisegment({Segment(0, 2), Segment(1, 3)})));
    CHECK(is_generic(Multisegment{}));
}

TEST_CASE("zpos invariants, window sweep") {
    PosetCache cache;
    for_each_multisegment(Window{0, 4}, 6, [&](const Multisegment& m) {
        auto succ = iu_successors(m);
        if (is_generic(m)) REQUIRE(succ.empty());
        for (const Multisegment& s : succ) {
            REQUIRE(s != m);
            REQUIRE(s.support() == m.support());
            REQUIRE(cache.leq(s, m));
            REQUIRE_FALSE(cache.leq(m, s)); // antisymmetry on strict moves
        }
    });
}
