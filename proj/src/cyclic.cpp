#include <currentlab/cyclic.hpp>
#include <currentlab/errors.hpp>

#include <algorithm>

namespace currentlab {

Chord::Chord(const BoundaryPoint& src, const BoundaryPoint& dst) : src_(src), dst_(dst) {
    if (src == dst) throw ValidationError("chord endpoints coincide at " + to_string(src));
}

std::string to_string(const BoundaryPoint& p) { return to_string(p.angle()); }

std::string to_string(const Chord& c) { return "(" + to_string(c.src()) + "->" + to_string(c.dst()) + ")"; }

Rational offset(const BoundaryPoint& a, const BoundaryPoint& p) { return frac(p.angle() - a.angle()); }

bool ccw(const BoundaryPoint& a, const BoundaryPoint& b, const BoundaryPoint& c) {
    if (a == b || b == c || a == c) return false;
    return offset(a, b) < offset(a, c);
}

bool in_open_arc(const BoundaryPoint& p, const BoundaryPoint& a, const BoundaryPoint& b) { return ccw(a, p, b); }

bool in_closed_arc(const BoundaryPoint& p, const BoundaryPoint& a, const BoundaryPoint& b) {
    return p == a || p == b || ccw(a, p, b);
}

bool chord_leq(const Chord& p, const Chord& q) {
    const Rational s = offset(q.src(), p.src());
    const Rational d = offset(q.src(), p.dst());
    return s <= d && d <= offset(q.src(), q.dst());
}

bool chord_less(const Chord& p, const Chord& q) { return p != q && chord_leq(p, q); }

int crossing_sign(const Chord& p, const Chord& q) {
    if (p.src() == q.src() || p.src() == q.dst() || p.dst() == q.src() || p.dst() == q.dst()) return 0;
    const bool s_in = in_open_arc(q.src(), p.src(), p.dst());
    const bool d_in = in_open_arc(q.dst(), p.src(), p.dst());
    if (s_in == d_in) return 0;
    return s_in ? 1 : -1;
}

Segment::Vertex Segment::tail() const {
    return kind == SegmentKind::Horizontal ? Vertex{from, fixed} : Vertex{fixed, from};
}

Segment::Vertex Segment::head() const {
    return kind == SegmentKind::Horizontal ? Vertex{to, fixed} : Vertex{fixed, to};
}

Rational Segment::displacement() const {
    if (from == to) return Rational(0);
    Rational d = offset(from, to);
    if (in_open_arc(fixed, from, to)) d -= 1;
    return d;
}

Segment horizontal(const BoundaryPoint& from, const BoundaryPoint& to, const BoundaryPoint& y) {
    return Segment{SegmentKind::Horizontal, y, from, to};
}

Segment vertical(const BoundaryPoint& x, const BoundaryPoint& from, const BoundaryPoint& to) {
    return Segment{SegmentKind::Vertical, x, from, to};
}

Box::Box(const BoundaryPoint& a1, const BoundaryPoint& a2, const BoundaryPoint& b1, const BoundaryPoint& b2)
    : x1(a1), x2(a2), y1(b1), y2(b2) {
    if (!(ccw(x1, x2, y1) && ccw(x2, y1, y2) && ccw(y1, y2, x1)))
        throw ValidationError("box corners not in cyclic order x1<x2<y1<y2");
}

namespace {

void check_segment(const Segment& s) {
    if (s.from == s.fixed || s.to == s.fixed)
        throw ValidationError("segment touches the diagonal at " + to_string(s.fixed));
}

}  // namespace

TaxiCycle::TaxiCycle(std::vector<Segment> segments) : segments_(std::move(segments)) {
    if (segments_.empty()) throw ValidationError("empty taxi cycle");
    for (size_t i = 0; i < segments_.size(); ++i) {
        check_segment(segments_[i]);
        const auto& next = segments_[(i + 1) % segments_.size()];
        if (segments_[i].head() != next.tail())
            throw ValidationError("taxi cycle is not closed at segment " + std::to_string(i));
    }
}

TaxiCycle TaxiCycle::through(const std::vector<Segment::Vertex>& vertices) {
    std::vector<Segment> segs;
    const size_t n = vertices.size();
    for (size_t i = 0; i < n; ++i) {
        const auto& v = vertices[i];
        const auto& w = vertices[(i + 1) % n];
        if (v == w) continue;
        if (v.first == w.first)
            segs.push_back(vertical(v.first, v.second, w.second));
        else if (v.second == w.second)
            segs.push_back(horizontal(v.first, w.first, v.second));
        else
            throw ValidationError("consecutive vertices share no coordinate");
    }
    if (segs.empty() && n > 0) segs.push_back(horizontal(vertices[0].first, vertices[0].first, vertices[0].second));
    return TaxiCycle(std::move(segs));
}

TaxiCycle TaxiCycle::reversed() const {
    std::vector<Segment> out;
    out.reserve(segments_.size());
    for (auto it = segments_.rbegin(); it != segments_.rend(); ++it) out.push_back(it->reversed());
    return TaxiCycle(std::move(out));
}

TaxiCycle boundary(const Box& r) {
    return TaxiCycle::through({{r.x1, r.y1}, {r.x1, r.y2}, {r.x2, r.y2}, {r.x2, r.y1}});
}

TaxiCycle concatenate(const TaxiCycle& a, const TaxiCycle& b) {
    const auto& sa = a.segments();
    const auto& sb = b.segments();
    for (size_t i = 0; i < sa.size(); ++i) {
        for (size_t j = 0; j < sb.size(); ++j) {
            if (sa[i].tail() != sb[j].tail()) continue;
            std::vector<Segment> out(sa.begin(), sa.begin() + static_cast<long>(i));
            for (size_t k = 0; k < sb.size(); ++k) out.push_back(sb[(j + k) % sb.size()]);
            out.insert(out.end(), sa.begin() + static_cast<long>(i), sa.end());
            return TaxiCycle(std::move(out));
        }
    }
    throw ValidationError("cycles share no vertex");
}

long winding_number(const TaxiCycle& z) {
    Rational total = 0;
    for (const auto& s : z.segments())
        if (s.kind == SegmentKind::Horizontal) total += s.displacement();
    if (total.get_den() != 1) throw ValidationError("non-integral winding; cycle is not closed");
    return total.get_num().get_si();
}

}  // namespace currentlab
