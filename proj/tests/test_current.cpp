#include "support.hpp"

#include <currentlab/current.hpp>
#include <currentlab/errors.hpp>

#include <doctest.h>

using namespace currentlab;
using namespace testsupport;

TEST_CASE("box_measure examples") {
    DiscreteCurrent leaf({{ch(0, 1, 1, 2), 1}});
    CHECK(box_measure(leaf, Box(pt(-1, 16), pt(1, 16), pt(7, 16), pt(9, 16))) == 1);
    CHECK(box_measure(leaf, Box(pt(1, 16), pt(3, 16), pt(7, 16), pt(9, 16))) == 0);
    DiscreteCurrent two({{ch(0, 1, 1, 2), 1}, {ch(1, 4, 3, 4), 1}});
    CHECK(box_measure(two, Box(pt(-1, 16), pt(5, 16), pt(7, 16), pt(13, 16))) == 2);
    CHECK_THROWS_AS(box_measure(leaf, Box(pt(0, 1), pt(1, 16), pt(7, 16), pt(9, 16))), GenericPositionError);
}

TEST_CASE("weights merge and must be positive") {
    DiscreteCurrent mu({{ch(0, 1, 1, 2), Rational(1, 3)}, {ch(0, 1, 1, 2), Rational(1, 6)}});
    CHECK(mu.size() == 1);
    CHECK(mu.weight(0) == Rational(1, 2));
    CHECK_THROWS_AS(DiscreteCurrent({{ch(0, 1, 1, 2), 0}}), ValidationError);
    CHECK_THROWS_AS(DiscreteCurrent({{ch(0, 1, 1, 2), -1}}), ValidationError);
}

TEST_CASE("crossing_pairing examples") {
    DiscreteCurrent a({{ch(0, 1, 1, 2), 1}}), b({{ch(1, 4, 3, 4), 1}});
    CHECK(crossing_pairing(a, b, false) == 1);
    CHECK(crossing_pairing(a, b, true) == 1);
    CHECK(crossing_pairing(a, a, false) == 0);
    CHECK(crossing_pairing(a, a, true) == 0);
}

TEST_CASE("crossing_pairing symmetry") {
    std::mt19937 rng(3);
    for (int t = 0; t < 100; ++t) {
        auto a = random_current(rng, 4), b = random_current(rng, 4);
        CHECK(crossing_pairing(a, b, false) == crossing_pairing(b, a, false));
        CHECK(crossing_pairing(a, b, true) == -crossing_pairing(b, a, true));
    }
}

TEST_CASE("is_symmetric examples") {
    CHECK(is_symmetric(DiscreteCurrent({{ch(0, 1, 1, 2), 1}, {ch(1, 2, 0, 1), 1}})));
    CHECK_FALSE(is_symmetric(DiscreteCurrent({{ch(0, 1, 1, 2), 1}})));
    CHECK(is_symmetric(DiscreteCurrent()));
}

TEST_CASE("sample_gaps examples") {
    using V = std::vector<BoundaryPoint>;
    CHECK(sample_gaps(DiscreteCurrent({{ch(0, 1, 1, 2), 1}})) == V{pt(1, 4), pt(3, 4)});
    CHECK(sample_gaps(DiscreteCurrent({{ch(0, 1, 1, 2), 1}, {ch(1, 2, 0, 1), 1}})) == V{pt(1, 4), pt(3, 4)});
    CHECK(sample_gaps(DiscreteCurrent({{ch(0, 1, 1, 2), 1}, {ch(1, 4, 3, 4), 1}})) ==
          V{pt(1, 8), pt(3, 8), pt(5, 8), pt(7, 8)});
    CHECK_THROWS_AS(sample_gaps(DiscreteCurrent()), EmptyCurrentError);
}

TEST_CASE("box_measure additivity and rotation invariance") {
    std::mt19937 rng(17);
    for (int t = 0; t < 300; ++t) {
        auto mu = random_current(rng, 5, 32);
        // corners on odd multiples of 1/128 avoid every endpoint
        auto c = random_points(rng, 5, 64);
        std::sort(c.begin(), c.end());
        std::vector<BoundaryPoint> q;
        for (auto& p : c) q.emplace_back(p.angle() + Rational(1, 128));
        Rational whole = box_measure(mu, Box(q[0], q[2], q[3], q[4]));
        Rational parts = box_measure(mu, Box(q[0], q[1], q[3], q[4])) + box_measure(mu, Box(q[1], q[2], q[3], q[4]));
        CHECK(whole == parts);
        Rational vert = box_measure(mu, Box(q[0], q[1], q[2], q[4]));
        Rational vparts = box_measure(mu, Box(q[0], q[1], q[2], q[3])) + box_measure(mu, Box(q[0], q[1], q[3], q[4]));
        CHECK(vert == vparts);

        Rational shift(5, 17);
        std::vector<std::pair<Chord, Rational>> rot;
        for (size_t i = 0; i < mu.size(); ++i)
            rot.emplace_back(Chord(BoundaryPoint(mu.chord(i).src().angle() + shift),
                                   BoundaryPoint(mu.chord(i).dst().angle() + shift)),
                             mu.weight(i));
        auto r = [&](const BoundaryPoint& p) { return BoundaryPoint(p.angle() + shift); };
        CHECK(box_measure(DiscreteCurrent(rot), Box(r(q[0]), r(q[2]), r(q[3]), r(q[4]))) == whole);
    }
}
