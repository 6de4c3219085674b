#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multiseg/enumerate.hpp"
#include "multiseg/multisegment.hpp"

using namespace multiseg;

TEST_CASE("linked") {
    CHECK(linked(Segment(0, 3), Segment(3, 8)));
    CHECK_FALSE(linked(Segment(0, 5), Segment(2, 3))); // containment
    CHECK_FALSE(linked(Segment(0, 1), Segment(3, 4))); // gap at 2
    CHECK(linked(Segment(0, 1), Segment(2, 3)));       // adjacency counts
    CHECK_FALSE(linked(Segment(1, 2), Segment(1, 2))); // equal copies
}

TEST_CASE("segment union and intersection") {
    CHECK(seg_union(Segment(0, 3), Segment(3, 8)) == Segment(0, 8));
    CHECK(seg_intersection(Segment(0, 3), Segment(3, 8)) == Segment(3, 3));
    CHECK(seg_union(Segment(1, 3), Segment(2, 5)) == Segment(1, 5));
    CHECK(seg_intersection(Segment(1, 3), Segment(2, 5)) == Segment(2, 3));
    CHECK_FALSE(seg_intersection(Segment(0, 1), Segment(3, 4)).has_value());
    CHECK_THROWS_AS(seg_union(Segment(0, 1), Segment(3, 4)), std::invalid_argument);
    CHECK_THROWS_AS(Segment(2, 1), std::invalid_argument);
}

TEST_CASE("left truncation") {
    CHECK(left_truncate(Segment(0, 3)) == Segment(1, 3));
    CHECK_FALSE(left_truncate(Segment(2, 2)).has_value());
    CHECK(left_truncate(Segment(1, 5)) == Segment(2, 5));

    Multisegment m({Segment(0, 3), Segment(1, 1), Segment(1, 1)});
    CHECK(m.left_truncated() == Multisegment({Segment(1, 3)}));
    CHECK(Multisegment{}.left_truncated() == Multisegment{});
    Multisegment fs_example({Segment(1, 4), Segment(1, 5)});
    CHECK(fs_example.left_truncated() == Multisegment({Segment(2, 4), Segment(2, 5)}));
}

TEST_CASE("canonical form and multiset algebra") {
    Multisegment a({Segment(1, 2), Segment(0, 3), Segment(1, 2)});
    Multisegment b({Segment(1, 2), Segment(1, 2), Segment(0, 3)});
    CHECK(a == b);
    CHECK(a.count(Segment(1, 2)) == 2);
    CHECK(a.minus(Segment(1, 2)).count(Segment(1, 2)) == 1);
    CHECK_THROWS_AS(a.minus(Segment(5, 5)), std::invalid_argument);
    CHECK(a.plus(Segment(0, 0)).size() == 4);
    CHECK(a.support() == Support({0, 1, 1, 2, 2, 3}));
    CHECK(a.total_length() == 8);
}

TEST_CASE("at_point") {
    Multisegment h({Segment(0, 3), Segment(1, 2), Segment(1, 4), Segment(1, 5), Segment(2, 3)});
    CHECK(h.at_point(1) == Multisegment({Segment(1, 2), Segment(1, 4), Segment(1, 5)}));
    CHECK(h.at_point(7) == Multisegment{});
    Multisegment twice({Segment(1, 2), Segment(1, 2)});
    CHECK(twice.at_point(1) == twice);
}

TEST_CASE("ascending order is the canonical order") {
    Multisegment m({Segment(2, 4), Segment(1, 3), Segment(1, 6)});
    std::vector<Segment> expect{Segment(1, 3), Segment(1, 6), Segment(2, 4)};
    CHECK(ascending_order(m) == expect);
    CHECK(ascending_order(Multisegment({Segment(3, 4), Segment(0, 2)})) ==
          std::vector<Segment>{Segment(0, 2), Segment(3, 4)});
    CHECK(ascending_order(Multisegment{}).empty());
}

TEST_CASE("ascending-order pairs are unlinked or increasing, window sweep") {
    for_each_multisegment(Window{0, 4}, 6, [](const Multisegment& m) {
        const auto& order = ascending_order(m);
        for (std::size_t i = 0; i < order.size(); ++i)
            for (std::size_t j = i + 1; j < order.size(); ++j) {
                bool ok = !linked(order[i], order[j]) || order[i].a < order[j].a;
                REQUIRE(ok);
            }
    });
}

TEST_CASE("lexicographic compare at a point") {
    CHECK(lex_compare_at(Multisegment({Segment(1, 3)}),
                         Multisegment({Segment(1, 4), Segment(1, 2)}), 1) == PartialCmp::LT);
    Multisegment m({Segment(2, 2), Segment(2, 5)});
    CHECK(lex_compare_at(m, m, 2) == PartialCmp::EQ);
    CHECK(lex_compare_at(Multisegment({Segment(1, 5)}),
                         Multisegment({Segment(1, 3), Segment(1, 4)}), 1) ==
          PartialCmp::INCOMPARABLE);
    CHECK(lex_compare_at(Multisegment({Segment(1, 3), Segment(1, 5)}),
                         Multisegment({Segment(1, 3)}), 1) == PartialCmp::GT);
    CHECK_THROWS_AS(lex_compare_at(Multisegment({Segment(2, 3)}), Multisegment{}, 1),
                    std::invalid_argument);
    // empty compares below anything at any point
    CHECK(lex_compare_at(Multisegment{}, Multisegment({Segment(1, 3)}), 1) == PartialCmp::LT);
}

TEST_CASE("lexicographic compare extended to infinity") {
    RemovalOutcome inf = RemovalOutcome::infinity();
    RemovalOutcome fin{Multisegment({Segment(1, 5)})};
    CHECK(lex_compare_at(fin, inf, 1) == PartialCmp::LT);
    CHECK(lex_compare_at(inf, fin, 1) == PartialCmp::GT);
    CHECK(lex_compare_at(inf, inf, 1) == PartialCmp::EQ);
}

TEST_CASE("support algebra") {
    Support a({0, 1, 1});
    Support b({1, 2});
    CHECK(a.plus(b) == Support({0, 1, 1, 1, 2}));
    CHECK(a.plus(b).minus(b) == a);
    CHECK(a.contains(Support({1, 1})));
    CHECK_FALSE(a.contains(Support({1, 1, 1})));
    CHECK_THROWS_AS(a.minus(Support({2})), std::invalid_argument);

    // support is additive over multisegment sum
    Multisegment m({Segment(0, 2)}), n({Segment(1, 3), Segment(2, 2)});
    CHECK(m.plus(n).support() == m.support().plus(n.support()));
}
