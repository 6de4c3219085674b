#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multiseg/enumerate.hpp"
#include "multiseg/removal.hpp"

using namespace multiseg;

namespace {
const Multisegment kH({Segment(0, 5), Segment(3, 8)}); // running two-segment example
}

TEST_CASE("admissibility") {
    CHECK(admissible_seg(Segment(0, 3), kH));
    CHECK_FALSE(admissible_seg(Segment(0, 6), kH));
    CHECK_FALSE(admissible_seg(Segment(2, 2), kH));
}

TEST_CASE("removal sequence, worked examples") {
    RemovalSequence seq = removal_sequence(Segment(0, 3), kH);
    CHECK(seq.removed == std::vector<Segment>{Segment(0, 5)});
    REQUIRE(seq.truncations.size() == 1);
    CHECK(seq.truncations[0] == Segment(4, 5));

    // nested two-step sequence with an interior truncation
    Multisegment h2({Segment(0, 7), Segment(3, 6), Segment(6, 10)});
    seq = removal_sequence(Segment(0, 5), h2);
    CHECK(seq.removed == std::vector<Segment>{Segment(0, 7), Segment(3, 6)});
    REQUIRE(seq.truncations.size() == 2);
    CHECK(seq.truncations[0] == Segment(3, 7));
    CHECK(seq.truncations[1] == Segment(6, 6));
    CHECK(r_seg(Segment(0, 5), h2).value() ==
          Multisegment({Segment(3, 7), Segment(6, 6), Segment(6, 10)}));

    seq = removal_sequence(Segment(3, 3), kH);
    CHECK(seq.removed == std::vector<Segment>{Segment(3, 8)});
    REQUIRE(seq.truncations.size() == 1);
    CHECK(seq.truncations[0] == Segment(4, 8));

    CHECK_THROWS_AS(removal_sequence(Segment(0, 6), kH), std::invalid_argument);
}

TEST_CASE("upsilon") {
    CHECK(upsilon(Segment(0, 3), kH) == Segment(0, 5));
    Multisegment self({Segment(1, 4)});
    CHECK(upsilon(Segment(1, 4), self) == Segment(1, 4));
    Multisegment h32({Segment(0, 3), Segment(1, 2), Segment(1, 4), Segment(1, 5), Segment(2, 3)});
    CHECK(upsilon(Segment(1, 3), h32) == Segment(1, 4));
    CHECK_THROWS_AS(upsilon(Segment(0, 6), kH), std::invalid_argument);
}

TEST_CASE("r_seg, worked examples") {
    CHECK(r_seg(Segment(0, 3), kH).value() == Multisegment({Segment(4, 5), Segment(3, 8)}));
    CHECK(r_seg(Segment(3, 4), Multisegment({Segment(4, 5), Segment(3, 8)})).value() ==
          Multisegment({Segment(4, 8), Segment(5, 5)}));
    CHECK(r_seg(Segment(0, 6), kH).is_infinity());
    CHECK(r_seg(Segment(0, 3), RemovalOutcome::infinity()).is_infinity());
}

TEST_CASE("member removal drops exactly one copy") {
    Multisegment h({Segment(1, 2), Segment(1, 2), Segment(0, 4)});
    CHECK(r_seg(Segment(1, 2), h).value() == Multisegment({Segment(1, 2), Segment(0, 4)}));
}

TEST_CASE("r_mult, worked examples") {
    CHECK(r_mult(Multisegment({Segment(0, 3), Segment(3, 4)}), kH).value() ==
          Multisegment({Segment(4, 8), Segment(5, 5)}));
    CHECK(r_mult(Multisegment({Segment(0, 4), Segment(3, 3)}), kH).value() ==
          Multisegment({Segment(5, 5), Segment(4, 8)}));
    CHECK(r_mult(Multisegment{}, kH).value() == kH);
}

TEST_CASE("epsilon counts non-strict containment at the start point") {
    CHECK(epsilon(Segment(3, 6), kH) == 1);
    CHECK(epsilon(Segment(5, 6), kH) == 0);
    CHECK(epsilon(Segment(1, 1), Multisegment{}) == 0);
    Multisegment copies({Segment(1, 4), Segment(1, 4), Segment(1, 2)});
    CHECK(epsilon(Segment(1, 3), copies) == 2);
}

TEST_CASE("nesting property, window sweep") {
    std::vector<Segment> segs = segments_in_window(Window{0, 4});
    for_each_multisegment(Window{0, 4}, 6, [&](const Multisegment& h) {
        for (const Segment& d : segs) {
            if (!admissible_seg(d, h)) continue;
            RemovalSequence seq = removal_sequence(d, h);
            for (std::size_t i = 0; i + 1 < seq.removed.size(); ++i) {
                REQUIRE(seq.removed[i].contains(seq.removed[i + 1]));
                REQUIRE(seq.removed[i].a < seq.removed[i + 1].a);
                REQUIRE(seq.removed[i].b > seq.removed[i + 1].b);
                REQUIRE(seq.removed[i + 1].b >= d.b);
            }
        }
    });
}

TEST_CASE("removal preserves the untouched support") {
    // support bookkeeping: r(Δ,𝔥) deletes exactly the points of Δ
    std::vector<Segment> segs = segments_in_window(Window{0, 4});
    for_each_multisegment(Window{0, 4}, 6, [&](const Multisegment& h) {
        for (const Segment& d : segs) {
            if (!admissible_seg(d, h)) continue;
            Support got = r_seg(d, h).value().support();
            Support expect = h.support().minus(Multisegment({d}).support());
            REQUIRE(got == expect);
        }
    });
}
