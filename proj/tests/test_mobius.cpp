#include <currentlab/errors.hpp>
#include <currentlab/mobius.hpp>
#include <currentlab/tropical.hpp>

#include <doctest.h>

#include <cmath>

using namespace currentlab;

namespace {

double dist(const ProjectivePoint& p, const ProjectivePoint& q) {
    if (p.infinite || q.infinite) return p.infinite && q.infinite ? 0 : (p.infinite ? 1 / std::fabs(q.x) : 1 / std::fabs(p.x));
    return std::fabs(p.x - q.x) / (1 + std::fabs(p.x));
}

// a, b with isometric intervals centered p, q and radius r
MobiusMap from_intervals(double p, double q, double r) {
    double c = 1 / r, d = -p * c, a = q * c;
    return MobiusMap(a, (a * d - 1) / c, c, d);
}

ProjectivePoint random_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-6, 6);
    return ProjectivePoint::at(u(rng));
}

}  // namespace

TEST_CASE("Mobius maps") {
    CHECK_THROWS_AS(MobiusMap(1, 2, 2, 1), ValidationError);
    MobiusMap g(2, 2, 1, 2);
    CHECK(g.a() * g.d() - g.b() * g.c() == doctest::Approx(1));
    auto p = ProjectivePoint::at(0.3);
    auto q = g.inverse()(g(p));
    CHECK(q.x == doctest::Approx(0.3));
    CHECK(g(ProjectivePoint::inf()).x == doctest::Approx(2));
    CHECK(g(ProjectivePoint::at(-2)).infinite);
    CHECK(log_cross_ratio(p, p, ProjectivePoint::at(1), ProjectivePoint::at(2)) == 0);
}

TEST_CASE("fixed points and periods") {
    const double e = std::exp(1.0);
    auto d = MobiusMap::diagonal(e);
    auto f = fixed_points(d);
    CHECK(f.attracting.infinite);
    CHECK(f.repelling == ProjectivePoint::at(0));
    CHECK(period(d) == doctest::Approx(1));
    CHECK(period(d * d) == doctest::Approx(2));
    CHECK_THROWS_AS(fixed_points(MobiusMap(1, 1, 0, 1)), NotHyperbolicError);
    CHECK_THROWS_AS(period(MobiusMap::rotation(0.4)), NotHyperbolicError);

    std::mt19937_64 rng(71);
    for (int t = 0; t < 200; ++t) {
        auto g = random_hyperbolic(rng);
        auto fp = fixed_points(g);
        CHECK(dist(g(fp.attracting), fp.attracting) < 1e-9);
        CHECK(dist(g(fp.repelling), fp.repelling) < 1e-9);
        // iterating pushes generic points to the attracting point
        auto x = random_point(rng);
        MobiusMap g8 = g * g * g * g * g * g * g * g;
        if (period(g) > 1) CHECK(dist(g8(x), fp.attracting) < dist(x, fp.attracting) + 1e-12);
        CHECK(period(g) == doctest::Approx(std::acosh(std::fabs(g.trace()) / 2)).epsilon(1e-12));
        CHECK(period(g * g) == doctest::Approx(2 * period(g)).epsilon(1e-10));
        auto h = MobiusMap::rotation(0.7);
        auto fc = fixed_points(h * g * h.inverse());
        CHECK(dist(fc.attracting, h(fp.attracting)) < 1e-9);
        CHECK(dist(fc.repelling, h(fp.repelling)) < 1e-9);
    }
}

TEST_CASE("log cross ratio") {
    const double e = std::exp(1.0);
    auto g = MobiusMap::diagonal(e);
    auto x = ProjectivePoint::at(0.4), inf = ProjectivePoint::inf(), zero = ProjectivePoint::at(0);
    CHECK(log_cross_ratio(x, g(x), inf, zero) == doctest::Approx(2));
    CHECK(log_cross_ratio(x, g(x), zero, inf) == doctest::Approx(-2));
    CHECK_THROWS_AS(log_cross_ratio(x, g(x), x, zero), DiagonalError);
    CHECK_THROWS_AS(log_cross_ratio(inf, x, inf, zero), DiagonalError);
    std::mt19937_64 rng(72);
    for (int t = 0; t < 200; ++t) {
        ProjectivePoint p[4];
        for (auto& v : p) v = random_point(rng);
        double h = log_cross_ratio(p[0], p[1], p[2], p[3]);
        CHECK(log_cross_ratio(p[0], p[1], p[3], p[2]) == doctest::Approx(-h));
        auto m = random_hyperbolic(rng);
        CHECK(log_cross_ratio(m(p[0]), m(p[1]), m(p[2]), m(p[3])) == doctest::Approx(h).epsilon(1e-8));
    }
}

TEST_CASE("hilbert length box identity") {
    std::mt19937_64 rng(73);
    for (int t = 0; t < 300; ++t) {
        auto g = random_hyperbolic(rng);
        auto r = hilbert_length_check(g, random_point(rng));
        CHECK(r.agrees(1e-9));
        CHECK(r.lhs == doctest::Approx(2 * period(g)));
    }
}

TEST_CASE("Schottky pairs and the abc identity") {
    std::mt19937_64 rng(74);
    int seen[3] = {0, 0, 0};
    for (int t = 0; t < 300; ++t) {
        auto pair = random_schottky_pair(rng);
        ++seen[int(pair.configuration)];
        auto r = verify_abc(pair);
        CHECK(r.agrees(1e-9));
        auto h = random_hyperbolic(rng);
        auto c = verify_abc(h * pair.a * h.inverse(), h * pair.b * h.inverse());
        CHECK(c.lhs == doctest::Approx(r.lhs).epsilon(1e-8));
        CHECK(c.rhs == doctest::Approx(r.rhs).epsilon(1e-8));
    }
    for (int s : seen) CHECK(s > 10);
    auto self = verify_abc(MobiusMap(2, 1, 1, 1), MobiusMap(2, 1, 1, 1));
    CHECK(std::fabs(self.lhs) < 1e-12);
    CHECK(std::fabs(self.rhs) < 1e-9);
    CHECK_THROWS_AS(SchottkyPair::make(MobiusMap(2, 1, 1, 1), MobiusMap(2, 1, 1, 1)), ValidationError);
    CHECK_THROWS_AS(SchottkyPair::make(MobiusMap::diagonal(3), MobiusMap(2, 1, 1, 1)), ValidationError);
    CHECK_THROWS_AS(SchottkyPair::make(MobiusMap(1, 1, 0, 1), MobiusMap(2, 1, 1, 1)), NotHyperbolicError);
}

TEST_CASE("Veronese potentials have rank n") {
    auto r = veronese_rank_check(2, {0, 1, 2}, {3, 4, 5});
    CHECK(r.max_abs_top_minor < 1e-12);
    CHECK(r.min_abs_minor > 0.5);
    CHECK_THROWS_AS(veronese_rank_check(2, {0, 1, 1}, {3, 4, 5}), ContractError);
    CHECK_THROWS_AS(veronese_rank_check(2, {0, 1}, {3, 4, 5}), ContractError);
    CHECK_THROWS_AS(veronese_rank_check(9, std::vector<double>(10), std::vector<double>(10)), ContractError);
    std::mt19937_64 rng(75);
    for (int n = 2; n <= 4; ++n)
        for (int t = 0; t < 50; ++t) {
            auto [xs, ys] = random_veronese_tuple(rng, n);
            auto v = veronese_rank_check(n, xs, ys);
            CHECK(v.max_rel_top_minor < 1e-8);
            CHECK(v.min_rel_minor > 1e-8);
        }
}

TEST_CASE("exported delta currents") {
    std::mt19937_64 rng(76);
    auto pair = SchottkyPair::make(from_intervals(-3, 1, 0.9), from_intervals(-1, 3, 0.9));
    CHECK(pair.configuration == AxisConfiguration::Crossing);
    CHECK(export_delta_current(pair, 0).empty());
    auto one = export_delta_current(pair, 1);
    CHECK(one.size() == 4);
    CHECK(is_symmetric(one));
    CHECK(to_boundary(ProjectivePoint::inf()) == BoundaryPoint(Rational(0)));
    CHECK(to_boundary(ProjectivePoint::at(0)) == BoundaryPoint(Rational(1, 2)));
    // primitive cyclically reduced words: 4, 8, 24, 60 of lengths 1..4
    CHECK(export_delta_current(pair, 2).size() == 12);
    CHECK(export_delta_current(pair, 4).size() == 108);
    auto thin = SchottkyPair::make(from_intervals(-4, 4, 0.05), from_intervals(-1, 1, 0.05));
    CHECK_THROWS_AS(export_delta_current(thin, 6), RoundingCollisionError);
    CHECK_THROWS_AS(export_delta_current(pair, 9), ContractError);
    int interleaved = 0;
    for (int t = 0; t < 10; ++t) {
        auto p = random_schottky_pair(rng);
        auto mu = export_delta_current(p, 2);
        CHECK(is_symmetric(mu));
        if (forbidden_scan(mu, 2)) ++interleaved;
    }
    CHECK(interleaved > 0);
}
