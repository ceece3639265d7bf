#pragma once

#include "rational.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace currentlab {

// Circle with the fixed points of one hyperbolic generator gamma. Counter-
// clockwise the order is: repelling point, North side, attracting point,
// South side. A side point has a height; gamma adds one to it, so heights
// tend to +infinity at the attracting point on both sides.
enum class Side { North, South };

struct PeriodicPoint {
    Side side = Side::North;
    std::size_t slot = 0;
    long power = 0;

    bool operator==(const PeriodicPoint&) const = default;
};

struct PeriodicLocus {
    enum class Kind { Repelling, North, Attracting, South };
    Kind kind = Kind::Repelling;
    Rational height;  // only for North and South

    static PeriodicLocus repelling() { return {Kind::Repelling, Rational(0)}; }
    static PeriodicLocus attracting() { return {Kind::Attracting, Rational(0)}; }
    static PeriodicLocus on(Side s, const Rational& h) { return {s == Side::North ? Kind::North : Kind::South, h}; }

    bool fixed() const { return kind == Kind::Repelling || kind == Kind::Attracting; }
    PeriodicLocus shifted(long k) const;
    bool operator==(const PeriodicLocus& o) const { return kind == o.kind && (fixed() || height == o.height); }
};

std::string to_string(const PeriodicLocus& p);

struct PeriodicBox {
    PeriodicLocus x1, x2, y1, y2;
    PeriodicBox(PeriodicLocus x1, PeriodicLocus x2, PeriodicLocus y1, PeriodicLocus y2);
};

struct PeriodicOrbit {
    PeriodicPoint src, dst;
    Rational weight;
};

enum class OrbitKind { Up, Down, Low, High };

class PeriodicCurrent {
public:
    PeriodicCurrent() = default;
    // Slot lists are base heights in [0,1), distinct per side. Orbit
    // representatives are normalized to src.power = 0 and merged.
    PeriodicCurrent(std::vector<Rational> north, std::vector<Rational> south, std::vector<PeriodicOrbit> orbits);

    const std::vector<Rational>& slots(Side s) const { return s == Side::North ? north_ : south_; }
    const std::vector<PeriodicOrbit>& orbits() const { return orbits_; }
    bool empty() const { return orbits_.empty(); }

    Rational height(const PeriodicPoint& p) const;
    PeriodicLocus locus(const PeriodicPoint& p) const { return PeriodicLocus::on(p.side, height(p)); }
    // Up: South to North, pushed upward by gamma. Down: North to South.
    // Low and High orbits stay inside one side, below or above its fixed chord.
    OrbitKind kind(const PeriodicOrbit& o) const;
    // Per-period weights of the Up and Down orbits.
    std::pair<Rational, Rational> crossing_weights() const;

    bool operator==(const PeriodicCurrent& o) const;

private:
    std::vector<Rational> north_, south_;
    std::vector<PeriodicOrbit> orbits_;
};

// Admissible lower submeasure: Low orbits full, High orbits empty, and an
// Up (Down) orbit element full when one endpoint lies below (above) the cut
// height on its side.
struct PeriodicReference {
    Rational north_cut, south_cut;
};

PeriodicReference default_reference(const PeriodicCurrent& mu);
bool reference_contains(const PeriodicCurrent& mu, const PeriodicReference& ref, const PeriodicOrbit& o,
                        const Rational& k);

// Height on the given side avoiding every endpoint height modulo 1.
Rational generic_height(const PeriodicCurrent& mu, Side side);

Rational periodic_box_measure(const PeriodicCurrent& mu, const PeriodicBox& r);
Rational periodic_potential(const PeriodicCurrent& mu, const PeriodicReference& ref, const PeriodicLocus& x,
                            const PeriodicLocus& y);
Rational periodic_cross_ratio(const PeriodicCurrent& mu, const PeriodicReference& ref, const PeriodicLocus& x1,
                              const PeriodicLocus& x2, const PeriodicLocus& y1, const PeriodicLocus& y2);

// Source-side jumps of gamma*nu - nu, as (locus, mass) sorted from the
// repelling point.
std::vector<std::pair<PeriodicLocus, Rational>> translation_difference(const PeriodicCurrent& mu,
                                                                         const PeriodicReference& ref);
// d(nu, gamma*nu) as sup - inf of the primitive of the difference.
Rational displacement(const PeriodicCurrent& mu, const PeriodicReference& ref);

Rational translation_length(const PeriodicCurrent& mu, long m);

struct SymmetrizedPeriod {
    Rational lhs, rhs;
};

SymmetrizedPeriod symmetrized_period_check(const PeriodicCurrent& mu);
SymmetrizedPeriod symmetrized_period_check(const PeriodicCurrent& mu, const PeriodicReference& ref,
                                           const Rational& south_height);

}  // namespace currentlab
