#include <currentlab/errors.hpp>
#include <currentlab/finsler.hpp>

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace currentlab;

namespace {

const double kSqrt3 = std::sqrt(3.0);

Complex random_complex(std::mt19937_64& rng, double r = 4) {
    std::uniform_real_distribution<double> u(-r, r);
    return {u(rng), u(rng)};
}

// Oracle: F(q - p) by brute force over a fine sample of the unit triangle's
// support function, i.e. the max of  <v, w>  for w on the dual triangle.
double brute_norm(const Complex& v) {
    double best = -1e300;
    for (int k = 0; k < 3; ++k) {
        double th = 2 * M_PI * k / 3;
        best = std::max(best, 2 * (std::cos(th) * v.real() - std::sin(th) * v.imag()));
    }
    return best;
}

RayConfiguration shifted_corridor(double L, double s1, double s2, const Complex& rot) {
    Complex d = rot * Complex(-1, 0);
    Ray a{rot * Complex(s1, 0), d}, b{rot * Complex(s2, L), d};
    Ray a2{rot * Complex(s2, 0), d}, b2{rot * Complex(s1, L), d};
    return {a, b, b2, a2};
}

}  // namespace

TEST_CASE("Finsler norm") {
    CHECK(finsler_norm(1) == 2);
    CHECK(finsler_norm(-1) == doctest::Approx(1).epsilon(1e-15));
    CHECK(finsler_norm(Complex(0, 1)) == doctest::Approx(kSqrt3));
    CHECK(finsler_norm(0) == 0);
    CHECK(distance(0, 1) == 2);
    CHECK(distance(1, 0) == 1);
    for (int k = 0; k < 3; ++k) CHECK(finsler_norm(-std::conj(cube_root(k))) == doctest::Approx(1));
    CHECK(finsler_norm(cube_root(2) / 2.0) == doctest::Approx(1));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        Complex p = random_complex(rng), q = random_complex(rng), r = random_complex(rng);
        CHECK(finsler_norm(p) == doctest::Approx(brute_norm(p)));
        CHECK(distance(p, p) == 0);
        CHECK(distance(p, r) <= distance(p, q) + distance(q, r) + 1e-12);
        CHECK(finsler_norm(3.5 * p) == doctest::Approx(3.5 * finsler_norm(p)));
        CHECK(finsler_norm(p) > 0);
    }
}

TEST_CASE("maximizing roots") {
    CHECK(maximizing_roots(1) == std::vector<int>{0});
    CHECK(maximizing_roots(-1) == std::vector<int>{1, 2});
    CHECK(maximizing_roots(std::polar(1.0, M_PI / 3)).size() == 2);
    CHECK_THROWS_AS(maximizing_roots(0), ContractError);
    for (int m = 0; m < 3; ++m) CHECK(maximizing_roots(descending_direction(m)).size() == 2);
}

TEST_CASE("geodesics") {
    CHECK(is_geodesic({0, 1, 1.0 + std::polar(1.0, 50 * M_PI / 180)}));
    CHECK_FALSE(is_geodesic({0, 1, 0}));
    CHECK(is_geodesic({0, Complex(2, 3)}));
    CHECK_THROWS_AS(is_geodesic({0}), ValidationError);
    CHECK_THROWS_AS(is_geodesic({0, 1, 1}), ValidationError);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> turn(-1.0, 1.0), len(0.1, 2);
    int geodesics = 0;
    for (int i = 0; i < 400; ++i) {
        Polyline path{random_complex(rng)};
        for (int s = 0; s < 4; ++s) path.push_back(path.back() + len(rng) * std::polar(1.0, turn(rng)));
        if (is_geodesic(path)) {
            ++geodesics;
            CHECK(std::fabs(finsler_length(path) - distance(path.front(), path.back())) <= 1e-12 * (1 + finsler_length(path)));
        }
    }
    CHECK(geodesics > 20);
}

TEST_CASE("descending trajectories are rigid geodesics") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> eps(-0.5, 0.5), along(0.2, 1.8);
    for (int m = 0; m < 3; ++m) {
        Complex d = descending_direction(m);
        Polyline line{0, d, 2.0 * d};
        CHECK(is_geodesic(line));
        CHECK(finsler_length(line) == doctest::Approx(2));
        for (int i = 0; i < 100; ++i) {
            double e = eps(rng);
            if (std::fabs(e) < 1e-3) continue;
            Polyline bent{0, along(rng) * d + e * d * Complex(0, 1), 2.0 * d};
            CHECK(finsler_length(bent) > 2 + 1e-6);
        }
    }
}

TEST_CASE("busemann functions") {
    CHECK_THROWS_AS(busemann(0, 0, HoroSign::Plus), ContractError);
    auto h = busemann(0, -1, HoroSign::Plus);
    CHECK(h.forms.size() == 2);
    CHECK(busemann(0, 1, HoroSign::Plus).forms.size() == 1);
    CHECK(busemann(0, std::polar(1.0, M_PI / 3), HoroSign::Minus).forms.size() == 2);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ang(0, 2 * M_PI);
    for (int i = 0; i < 200; ++i) {
        Complex base = random_complex(rng), x = random_complex(rng);
        Complex dir = std::polar(1.0, ang(rng));
        if (i % 4 == 0) dir = descending_direction(int(rng() % 3));
        dir /= finsler_norm(dir);
        auto plus = busemann(base, dir, HoroSign::Plus), minus = busemann(base, dir, HoroSign::Minus);
        // the limit is attained once the max of affine pieces settles
        double t = 1e4;
        CHECK(plus(x) == doctest::Approx(distance(x, base + t * dir) - t).epsilon(1e-9));
        CHECK(minus(x) == doctest::Approx(distance(base - t * dir, x) - t).epsilon(1e-9));
        CHECK(plus(base) == doctest::Approx(0).epsilon(1e-12));
        // asymptotic rays along the direction give the same point, shifted
        auto later = busemann(base + 2.5 * dir, 3.0 * dir, HoroSign::Plus);
        CHECK(same_horofunction(later, plus.shifted(2.5), 1e-9));
    }
    // bases differing along a level set
    Complex level = Complex(0, 1) * std::conj(cube_root(0));
    CHECK(same_horofunction(busemann(0, 1, HoroSign::Plus), busemann(level * 2.0, 1, HoroSign::Plus), 1e-12));
}

TEST_CASE("pairings") {
    auto g = busemann(0, -1, HoroSign::Minus), h = busemann(0, -1, HoroSign::Plus);
    CHECK(pairing(g, h) == doctest::Approx(0));
    CHECK(pairing(g, h.shifted(1.5)) == doctest::Approx(1.5));
    CHECK(pairing(busemann(0, 1, HoroSign::Minus), busemann(0, cube_root(1), HoroSign::Plus)) ==
          -std::numeric_limits<double>::infinity());
    CHECK_THROWS_AS(pairing(h, g), ContractError);
    // pairing as an infimum: never above sampled values of g + h
    std::mt19937_64 rng(21);
    for (int i = 0; i < 100; ++i) {
        auto c = random_configuration(rng);
        auto gi = busemann(c.g1.base, c.g1.dir, HoroSign::Minus), hi = busemann(c.h2.base, c.h2.dir, HoroSign::Plus);
        double p = pairing(gi, hi);
        REQUIRE(std::isfinite(p));
        double sampled = 1e300;
        for (int s = 0; s < 200; ++s) {
            Complex z = random_complex(rng, 20);
            double v = gi(z) + hi(z);
            CHECK(v >= p - 1e-9);
            sampled = std::min(sampled, v);
        }
        CHECK(sampled >= p - 1e-9);
    }
}

TEST_CASE("corridor cross ratio") {
    for (double L : {0.25, 1.0, 7.0}) {
        CHECK(std::fabs(corridor_cross_ratio(L) - 2 * kSqrt3 * L) <= 1e-9);
        CHECK(std::fabs(cross_ratio_from_distances(corridor(L)) - 2 * kSqrt3 * L) <= 1e-9);
        CHECK(2 * finsler_norm(Complex(0, L)) == doctest::Approx(2 * kSqrt3 * L));
    }
    auto c = corridor(1);
    auto g = busemann(c.g1.base, c.g1.dir, HoroSign::Minus);
    auto h1 = busemann(c.h1.base, c.h1.dir, HoroSign::Plus), h2 = busemann(c.h2.base, c.h2.dir, HoroSign::Plus);
    CHECK(cross_ratio_b(g, g, h1, h2) == 0);
}

TEST_CASE("pairing and cross-distance evaluations agree") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 300; ++i) {
        auto c = random_configuration(rng);
        double a = cross_ratio_from_pairings(c), b = cross_ratio_from_distances(c);
        CHECK(std::fabs(a - b) <= 1e-9);
    }
}

TEST_CASE("zero box and degenerate configurations") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> turn(-0.9, 0.9);
    for (int i = 0; i < 100; ++i) {
        auto ray = [&]() { return Ray{random_complex(rng), std::polar(1.0, turn(rng))}; };
        RayConfiguration c{ray(), ray(), ray(), ray()};
        CHECK(std::fabs(cross_ratio_from_pairings(c)) <= 1e-9);
        CHECK(std::fabs(cross_ratio_from_distances(c)) <= 1e-9);
    }
    RayConfiguration bad{{0, 1}, {0, std::conj(cube_root(1))}, {0, 1}, {0, std::conj(cube_root(1))}};
    CHECK_THROWS_AS(cross_ratio_from_pairings(bad), DegenerateConfigurationError);
    CHECK_THROWS_AS(cross_ratio_from_distances(bad), DegenerateConfigurationError);
    CHECK_THROWS_AS(cross_ratio_from_distances(RayConfiguration{{0, 0}, {0, 1}, {0, 1}, {0, 1}}), ContractError);
}

TEST_CASE("cross ratio positivity on ordered corridors") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> L(0.01, 5), s(-4, 4);
    for (int i = 0; i < 200; ++i) {
        Complex rot = cube_root(int(rng() % 3));
        double l = L(rng);
        auto c = shifted_corridor(l, s(rng), s(rng), rot);
        double b = cross_ratio_from_pairings(c);
        CHECK(b >= 0);
        CHECK(b == doctest::Approx(2 * kSqrt3 * l));
    }
}
