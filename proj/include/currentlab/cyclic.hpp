#pragma once

#include <currentlab/rational.hpp>

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace currentlab {

// A point of the circle R/Z, stored as its representative in [0,1).
class BoundaryPoint {
public:
    BoundaryPoint() = default;
    explicit BoundaryPoint(const Rational& a) : angle_(frac(a)) {}
    BoundaryPoint(long p, long q) : BoundaryPoint(Rational(p, q)) {}

    const Rational& angle() const { return angle_; }

    friend bool operator==(const BoundaryPoint& a, const BoundaryPoint& b) { return a.angle_ == b.angle_; }
    friend bool operator!=(const BoundaryPoint& a, const BoundaryPoint& b) { return !(a == b); }
    // Order of angles in [0,1); not the cyclic order.
    friend bool operator<(const BoundaryPoint& a, const BoundaryPoint& b) { return a.angle_ < b.angle_; }

private:
    Rational angle_{0};
};

// Oriented chord src -> dst. Throws ValidationError if src == dst.
class Chord {
public:
    Chord() = default;
    Chord(const BoundaryPoint& src, const BoundaryPoint& dst);

    const BoundaryPoint& src() const { return src_; }
    const BoundaryPoint& dst() const { return dst_; }
    Chord reversed() const { return Chord(dst_, src_); }

    friend bool operator==(const Chord& a, const Chord& b) { return a.src_ == b.src_ && a.dst_ == b.dst_; }
    friend bool operator!=(const Chord& a, const Chord& b) { return !(a == b); }
    friend bool operator<(const Chord& a, const Chord& b) {
        if (a.src_ != b.src_) return a.src_ < b.src_;
        return a.dst_ < b.dst_;
    }

private:
    BoundaryPoint src_{Rational(0)};
    BoundaryPoint dst_{Rational(1, 2)};
};

std::string to_string(const BoundaryPoint& p);
std::string to_string(const Chord& c);

// Positive displacement from a to p, in [0,1).
Rational offset(const BoundaryPoint& a, const BoundaryPoint& p);

bool ccw(const BoundaryPoint& a, const BoundaryPoint& b, const BoundaryPoint& c);

// p lies on the open positive arc from a to b. False when a == b.
bool in_open_arc(const BoundaryPoint& p, const BoundaryPoint& a, const BoundaryPoint& b);
// p lies on the closed positive arc [a,b]. When a == b the arc is the single point a.
bool in_closed_arc(const BoundaryPoint& p, const BoundaryPoint& a, const BoundaryPoint& b);

// arc(p) is contained in arc(q), closed arcs.
bool chord_leq(const Chord& p, const Chord& q);
bool chord_less(const Chord& p, const Chord& q);

int crossing_sign(const Chord& p, const Chord& q);

enum class SegmentKind { Horizontal, Vertical };

// Horizontal: (from, fixed) -> (to, fixed). Vertical: (fixed, from) -> (fixed, to).
// The moving coordinate runs along the arc from `from` to `to` that avoids `fixed`.
struct Segment {
    SegmentKind kind;
    BoundaryPoint fixed;
    BoundaryPoint from;
    BoundaryPoint to;

    using Vertex = std::pair<BoundaryPoint, BoundaryPoint>;
    Vertex tail() const;
    Vertex head() const;
    Segment reversed() const { return Segment{kind, fixed, to, from}; }
    // Signed displacement of the moving coordinate, in (-1,1).
    Rational displacement() const;
};

Segment horizontal(const BoundaryPoint& from, const BoundaryPoint& to, const BoundaryPoint& y);
Segment vertical(const BoundaryPoint& x, const BoundaryPoint& from, const BoundaryPoint& to);

// Requires x1 < x2 < y1 < y2 in strict cyclic order.
struct Box {
    BoundaryPoint x1, x2, y1, y2;
    Box(const BoundaryPoint& x1, const BoundaryPoint& x2, const BoundaryPoint& y1, const BoundaryPoint& y2);
};

class TaxiCycle {
public:
    explicit TaxiCycle(std::vector<Segment> segments);
    // Closed path through the given vertices; consecutive vertices share one
    // coordinate. The last vertex connects back to the first.
    static TaxiCycle through(const std::vector<Segment::Vertex>& vertices);

    const std::vector<Segment>& segments() const { return segments_; }
    TaxiCycle reversed() const;

private:
    std::vector<Segment> segments_;
};

// Cycle around (x1,y1) -> (x1,y2) -> (x2,y2) -> (x2,y1).
TaxiCycle boundary(const Box& r);

// Splice b into a at a shared vertex. Throws ValidationError if none is shared.
TaxiCycle concatenate(const TaxiCycle& a, const TaxiCycle& b);

long winding_number(const TaxiCycle& z);

}  // namespace currentlab

template <>
struct std::hash<currentlab::BoundaryPoint> {
    size_t operator()(const currentlab::BoundaryPoint& p) const {
        return std::hash<std::string>()(p.angle().get_str());
    }
};
