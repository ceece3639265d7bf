#include "support.hpp"

#include <currentlab/errors.hpp>
#include <currentlab/tropical.hpp>

#include <doctest.h>

#include <numeric>

using namespace currentlab;
using namespace testsupport;

namespace {

TropicalMatrix random_matrix(std::mt19937& rng, size_t k, int neg_inf_percent, long range) {
    std::uniform_int_distribution<long> v(-range, range);
    std::uniform_int_distribution<int> pct(0, 99);
    TropicalMatrix m(k, std::vector<TropicalEntry>(k));
    for (auto& row : m)
        for (auto& e : row)
            if (pct(rng) >= neg_inf_percent) e = Rational(v(rng), 3);
    return m;
}

// Positions strictly increasing in cyclic order starting from the first.
bool cyclically_increasing(const std::vector<BoundaryPoint>& p) {
    for (size_t i = 1; i + 1 < p.size(); ++i)
        if (!(offset(p[0], p[i]) < offset(p[0], p[i + 1]))) return false;
    for (size_t i = 1; i < p.size(); ++i)
        if (p[i] == p[0]) return false;
    return true;
}

bool brute_forbidden(const DiscreteCurrent& mu, size_t n) {
    std::vector<size_t> idx(mu.size());
    std::iota(idx.begin(), idx.end(), 0);
    // ordered n-tuples of distinct chords
    std::vector<size_t> pick(n, 0);
    std::function<bool(size_t)> rec = [&](size_t depth) -> bool {
        if (depth == n) {
            std::vector<BoundaryPoint> seq;
            for (size_t i = 0; i < n; ++i) seq.push_back(mu.chord(pick[i]).src());
            for (size_t i = 0; i < n; ++i) seq.push_back(mu.chord(pick[i]).dst());
            return cyclically_increasing(seq);
        }
        for (size_t c = 0; c < mu.size(); ++c) {
            bool used = false;
            for (size_t d = 0; d < depth; ++d) used = used || pick[d] == c;
            if (used) continue;
            pick[depth] = c;
            if (rec(depth + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

}  // namespace

TEST_CASE("tropical_det examples") {
    TropicalMatrix diag{{Rational(0), std::nullopt}, {std::nullopt, Rational(0)}};
    auto d = tropical_det(diag);
    CHECK(d.value == Rational(0));
    CHECK(d.unique_argmax);
    TropicalMatrix ones{{Rational(1), Rational(1)}, {Rational(1), Rational(1)}};
    auto o = tropical_det(ones);
    CHECK(o.value == Rational(2));
    CHECK_FALSE(o.unique_argmax);
    TropicalMatrix none{{std::nullopt, std::nullopt}, {std::nullopt, std::nullopt}};
    CHECK_FALSE(tropical_det(none).value.has_value());
    CHECK_FALSE(tropical_det(none).unique_argmax);
}

TEST_CASE("tropical_det matches brute force on random 3x3") {
    std::mt19937 rng(1);
    for (int t = 0; t < 300; ++t) {
        auto m = random_matrix(rng, 3, 10, 4);
        std::vector<size_t> s{0, 1, 2};
        TropicalEntry best;
        int count = 0;
        do {
            bool fin = true;
            Rational v = 0;
            for (size_t i = 0; i < 3; ++i) {
                if (!m[i][s[i]]) fin = false;
                else v += *m[i][s[i]];
            }
            if (!fin) continue;
            if (!best || v > *best) best = v, count = 1;
            else if (v == *best) ++count;
        } while (std::next_permutation(s.begin(), s.end()));
        auto d = tropical_det(m);
        CHECK(d.value == best);
        CHECK(d.unique_argmax == (best.has_value() && count == 1));
    }
}

TEST_CASE("assignment backend agrees with exhaustive backend") {
    std::mt19937 rng(2);
    for (int t = 0; t < 150; ++t) {
        size_t k = 1 + t % 7;
        auto m = random_matrix(rng, k, t % 3 == 0 ? 40 : 5, t % 2 ? 2 : 50);
        auto a = tropical_det_exhaustive(m), b = tropical_det_assignment(m);
        CHECK(a.value == b.value);
        CHECK(a.unique_argmax == b.unique_argmax);
    }
    // larger sizes go through the assignment backend
    auto big = random_matrix(rng, 9, 0, 1000);
    auto d = tropical_det(big);
    CHECK(d.value.has_value());
}

TEST_CASE("tropical_det invariance under row and column shifts") {
    std::mt19937 rng(3);
    for (int t = 0; t < 200; ++t) {
        size_t k = 2 + t % 4;
        auto m = random_matrix(rng, k, 15, 3);
        std::uniform_int_distribution<long> v(-20, 20);
        std::vector<Rational> phi(k), psi(k);
        Rational shift = 0;
        for (size_t i = 0; i < k; ++i) phi[i] = Rational(v(rng), 7), psi[i] = Rational(v(rng), 5), shift += phi[i] + psi[i];
        auto s = m;
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j)
                if (s[i][j]) s[i][j] = *s[i][j] + phi[i] + psi[j];
        auto a = tropical_det(m), b = tropical_det(s);
        CHECK(a.unique_argmax == b.unique_argmax);
        if (a.value) CHECK(*b.value == *a.value + shift);
        else CHECK_FALSE(b.value.has_value());
    }
}

TEST_CASE("forbidden_scan examples") {
    DiscreteCurrent cross({{ch(0, 1, 1, 2), 1}, {ch(1, 4, 3, 4), 1}});
    auto w = forbidden_scan(cross, 2);
    REQUIRE(w.has_value());
    CHECK(*w == std::vector<Chord>{ch(0, 1, 1, 2), ch(1, 4, 3, 4)});
    CHECK_FALSE(forbidden_scan(cross, 3).has_value());
    DiscreteCurrent lam({{ch(0, 1, 1, 2), 1}, {ch(1, 2, 0, 1), 1}});
    CHECK_FALSE(forbidden_scan(lam, 2).has_value());
    CHECK_THROWS_AS(forbidden_scan(lam, 0), ContractError);
}

TEST_CASE("forbidden_scan agrees with brute force") {
    std::mt19937 rng(4);
    for (int t = 0; t < 300; ++t) {
        auto mu = random_current(rng, 3 + t % 5, t % 2 ? 14 : 40);
        for (int n = 1; n <= 4; ++n) {
            auto w = forbidden_scan(mu, n);
            CHECK(w.has_value() == brute_forbidden(mu, static_cast<size_t>(n)));
            if (w) {
                std::vector<BoundaryPoint> seq;
                for (auto& c : *w) seq.push_back(c.src());
                for (auto& c : *w) seq.push_back(c.dst());
                CHECK(w->size() == static_cast<size_t>(n));
                CHECK(cyclically_increasing(seq));
            }
        }
    }
}

TEST_CASE("certify examples") {
    DiscreteCurrent lam({{ch(0, 1, 1, 2), 1}, {ch(1, 2, 0, 1), 1}});
    auto a = certify_tropical_rank(HolonomyContext(lam, 1), 2);
    CHECK(a.certified);
    CHECK(a.vacuous);
    DiscreteCurrent cross({{ch(0, 1, 1, 2), 1}, {ch(1, 4, 3, 4), 1}});
    for (Rational T : {Rational(0), Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)}) {
        auto r = certify_tropical_rank(HolonomyContext(cross, T), 2);
        CHECK_FALSE(r.certified);
        REQUIRE(r.witness.has_value());
        // the witness tuple really has a unique maximizer
        HolonomyContext ctx(cross, T);
        TropicalMatrix sub(3, std::vector<TropicalEntry>(3));
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j)
                if (r.witness->xs[i] != r.witness->ys[j]) sub[i][j] = potential(ctx, r.witness->xs[i], r.witness->ys[j]);
        auto d = tropical_det(sub);
        CHECK(d.unique_argmax);
        CHECK(d.value == r.witness->value);
    }
    for (int n = 1; n <= 4; ++n) CHECK(certify_tropical_rank(HolonomyContext(DiscreteCurrent(), 0), n).certified);
}

TEST_CASE("potential is constant on gap cells") {
    std::mt19937 rng(5);
    for (int t = 0; t < 40; ++t) {
        auto mu = random_current(rng, 5, 32);
        HolonomyContext ctx(mu, mu.total_mass() / 2);
        auto pts = mu.endpoints();
        auto gaps = sample_gaps(mu);
        for (size_t i = 0; i < pts.size(); ++i)
            for (size_t j = 0; j < pts.size(); ++j) {
                if (i == j) continue;
                auto x = random_inside(rng, pts[i], pts[(i + 1) % pts.size()]);
                auto y = random_inside(rng, pts[j], pts[(j + 1) % pts.size()]);
                auto gx = random_inside(rng, pts[i], pts[(i + 1) % pts.size()]);
                auto gy = random_inside(rng, pts[j], pts[(j + 1) % pts.size()]);
                CHECK(potential(ctx, x, y) == potential(ctx, gx, gy));
            }
    }
}

TEST_CASE("forbidden configurations force violation at every level") {
    std::mt19937 rng(6);
    int hits = 0;
    for (int t = 0; t < 60; ++t) {
        auto mu = random_current(rng, 4, 24);
        for (int n = 2; n <= 3; ++n) {
            if (!forbidden_scan(mu, n)) continue;
            ++hits;
            for (int s = 0; s <= 4; ++s) {
                HolonomyContext ctx(mu, mu.total_mass() * Rational(s, 4));
                CHECK_FALSE(certify_tropical_rank(ctx, n).certified);
            }
        }
    }
    CHECK(hits > 10);
}

TEST_CASE("certified rank is monotone in n and threads agree") {
    std::mt19937 rng(7);
    for (int t = 0; t < 30; ++t) {
        auto mu = random_current(rng, 4, 24);
        HolonomyContext ctx(mu, mu.total_mass() * Rational(1, 3));
        bool prev = false;
        for (int n = 1; n <= 4; ++n) {
            auto r = certify_tropical_rank(ctx, n);
            if (prev) CHECK(r.certified);
            prev = r.certified;
            CertifyOptions par{4, true};
            auto p = certify_tropical_rank(ctx, n, par);
            CHECK(p.certified == r.certified);
            if (!r.certified) {
                CHECK(p.witness->xs == r.witness->xs);
                CHECK(p.witness->ys == r.witness->ys);
            }
            CHECK(certify_tropical_rank(ctx, n, CertifyOptions{3, false}).certified == r.certified);
        }
    }
}

TEST_CASE("reverse Bruhat monotonicity") {
    std::mt19937 rng(8);
    for (int t = 0; t < 60; ++t) {
        auto mu = random_current(rng, 6, 32);
        HolonomyContext ctx(mu, mu.total_mass() * Rational(t % 5, 4));
        const size_t k = 3 + t % 2;
        // 2k generic points in increasing order
        auto c = random_points(rng, 2 * k, 64);
        std::sort(c.begin(), c.end());
        std::vector<BoundaryPoint> q;
        for (auto& p : c) q.emplace_back(p.angle() + Rational(1, 128));
        std::vector<size_t> sigma(k);
        std::iota(sigma.begin(), sigma.end(), 0);
        auto score = [&](const std::vector<size_t>& s) {
            Rational v = 0;
            for (size_t i = 0; i < k; ++i) v += potential(ctx, q[i], q[k + s[i]]);
            return v;
        };
        do {
            for (size_t i = 0; i < k; ++i)
                for (size_t j = i + 1; j < k; ++j) {
                    if (sigma[i] < sigma[j]) continue;
                    auto up = sigma;
                    std::swap(up[i], up[j]);
                    CHECK(score(up) >= score(sigma));
                }
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
}
