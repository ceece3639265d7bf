#pragma once

#include <currentlab/current.hpp>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

namespace testsupport {

using currentlab::BoundaryPoint;
using currentlab::Chord;
using currentlab::DiscreteCurrent;
using currentlab::Rational;

inline BoundaryPoint pt(long p, long q) { return BoundaryPoint(Rational(p, q)); }
inline Chord ch(long p1, long q1, long p2, long q2) { return Chord(pt(p1, q1), pt(p2, q2)); }

// Distinct angles k/den for random k.
inline std::vector<BoundaryPoint> random_points(std::mt19937& rng, size_t count, long den) {
    if (static_cast<long>(count) > den) throw std::logic_error("random_points: grid too coarse");
    std::vector<long> ks(static_cast<size_t>(den));
    for (long i = 0; i < den; ++i) ks[static_cast<size_t>(i)] = i;
    std::shuffle(ks.begin(), ks.end(), rng);
    std::vector<BoundaryPoint> out;
    for (size_t i = 0; i < count; ++i) out.push_back(BoundaryPoint(Rational(ks[i], den)));
    return out;
}

inline Rational random_weight(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(1, 9), den(1, 4);
    return Rational(num(rng), den(rng));
}

// Random current on 2*chords endpoints drawn from a grid of 4*den points.
inline DiscreteCurrent random_current(std::mt19937& rng, size_t chords, long den = 64) {
    auto pts = random_points(rng, 2 * chords, den);
    std::vector<std::pair<Chord, Rational>> entries;
    std::uniform_int_distribution<size_t> pick(0, pts.size() - 1);
    for (size_t i = 0; i < chords; ++i) {
        size_t a = pick(rng), b = pick(rng);
        while (b == a) b = pick(rng);
        entries.emplace_back(Chord(pts[a], pts[b]), random_weight(rng));
    }
    return DiscreteCurrent(entries);
}

// Random point strictly inside the open arc (a, b), on a fine grid.
inline BoundaryPoint random_inside(std::mt19937& rng, const BoundaryPoint& a, const BoundaryPoint& b) {
    Rational len = currentlab::offset(a, b);
    if (len == 0) len = 1;
    std::uniform_int_distribution<long> k(1, 999);
    return BoundaryPoint(a.angle() + len * Rational(k(rng), 1000));
}

}  // namespace testsupport

namespace testsupport {

// Random measured lamination with the given number of leaves (non-crossing
// pairs of sorted grid points, built from a random balanced bracket word).
inline DiscreteCurrent random_lamination(std::mt19937& rng, size_t leaves, long den = 64) {
    auto pts = random_points(rng, 2 * leaves, den);
    std::sort(pts.begin(), pts.end());
    std::vector<size_t> stack;
    std::vector<std::pair<Chord, Rational>> entries;
    size_t opened = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        bool can_open = opened < leaves;
        bool can_close = !stack.empty();
        bool open = can_open && (!can_close || std::uniform_int_distribution<int>(0, 1)(rng) == 0);
        if (open) {
            stack.push_back(i);
            ++opened;
        } else {
            size_t j = stack.back();
            stack.pop_back();
            Rational w = random_weight(rng);
            entries.emplace_back(Chord(pts[j], pts[i]), w);
            entries.emplace_back(Chord(pts[i], pts[j]), w);
        }
    }
    return DiscreteCurrent(entries);
}

inline DiscreteCurrent random_symmetric(std::mt19937& rng, size_t leaves, long den = 64) {
    auto pts = random_points(rng, 2 * leaves, den);
    std::vector<std::pair<Chord, Rational>> e;
    for (size_t i = 0; i < leaves; ++i) {
        Rational w = random_weight(rng);
        e.emplace_back(Chord(pts[2 * i], pts[2 * i + 1]), w);
        e.emplace_back(Chord(pts[2 * i + 1], pts[2 * i]), w);
    }
    return DiscreteCurrent(e);
}

}  // namespace testsupport
