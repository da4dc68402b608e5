#include <doctest.h>

#include "topdyn/core.hpp"

using namespace topdyn;

TEST_CASE("pointset basics") {
    PointSet s = PointSet::of(5, {0u, 2u, 4u});
    CHECK(s.size() == 3);
    CHECK(s.contains(0));
    CHECK(!s.contains(1));
    CHECK(s.complement() == PointSet::of(5, {1u, 3u}));
    CHECK((s & PointSet::of(5, {2u, 3u})) == PointSet::of(5, {2u}));
    CHECK((s | PointSet::of(5, {1u})) == PointSet::of(5, {0u, 1u, 2u, 4u}));
    CHECK(s.minus(PointSet::of(5, {0u})) == PointSet::of(5, {2u, 4u}));
    CHECK(s.first() == 0);
    CHECK(s.to_string() == "{0,2,4}");
    CHECK(PointSet::full_set(3).size() == 3);
    CHECK(PointSet::empty_set(3).none());
    CHECK_THROWS_AS(PointSet::singleton(3, 3), Error);
    CHECK_THROWS_AS(PointSet(2, 0b100), Error);
}

TEST_CASE("pointset subset and intersection") {
    PointSet a = PointSet::of(4, {0u, 1u});
    PointSet b = PointSet::of(4, {0u, 1u, 2u});
    CHECK(a.subset_of(b));
    CHECK(!b.subset_of(a));
    CHECK(a.intersects(b));
    CHECK(!a.intersects(PointSet::of(4, {2u, 3u})));
}

TEST_CASE("splitmix64 is deterministic and seed-sensitive") {
    SplitMix64 a(42), b(42), c(43);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    bool differs = false;
    SplitMix64 a2(42);
    for (int i = 0; i < 100; ++i)
        if (a2.next() != c.next()) differs = true;
    CHECK(differs);
    SplitMix64 d(7);
    for (int i = 0; i < 1000; ++i) CHECK(d.below(10) < 10);
}
