#include <currentlab/current.hpp>
#include <currentlab/errors.hpp>

#include <algorithm>
#include <map>

namespace currentlab {

DiscreteCurrent::DiscreteCurrent(const std::vector<std::pair<Chord, Rational>>& entries) {
    std::map<Chord, Rational> merged;
    for (const auto& [c, w] : entries) {
        if (w <= 0) throw ValidationError("non-positive weight on chord " + to_string(c));
        merged[c] += w;
    }
    for (const auto& [c, w] : merged) {
        chords_.push_back(c);
        weights_.push_back(w);
    }
}

std::optional<size_t> DiscreteCurrent::index_of(const Chord& c) const {
    auto it = std::lower_bound(chords_.begin(), chords_.end(), c);
    if (it == chords_.end() || *it != c) return std::nullopt;
    return static_cast<size_t>(it - chords_.begin());
}

Rational DiscreteCurrent::weight_of(const Chord& c) const {
    auto i = index_of(c);
    return i ? weights_[*i] : Rational(0);
}

Rational DiscreteCurrent::total_mass() const {
    Rational t = 0;
    for (const auto& w : weights_) t += w;
    return t;
}

std::vector<BoundaryPoint> DiscreteCurrent::endpoints() const {
    std::vector<BoundaryPoint> pts;
    for (const auto& c : chords_) {
        pts.push_back(c.src());
        pts.push_back(c.dst());
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

bool DiscreteCurrent::has_endpoint(const BoundaryPoint& p) const {
    for (const auto& c : chords_)
        if (c.src() == p || c.dst() == p) return true;
    return false;
}

SignedChordMeasure::SignedChordMeasure(const std::vector<std::pair<Chord, Rational>>& entries) {
    std::map<Chord, Rational> merged;
    for (const auto& [c, w] : entries) merged[c] += w;
    for (const auto& [c, w] : merged)
        if (w != 0) entries_.emplace_back(c, w);
}

Rational SignedChordMeasure::total() const {
    Rational t = 0;
    for (const auto& e : entries_) t += e.second;
    return t;
}

Rational SignedChordMeasure::positive_mass() const {
    Rational t = 0;
    for (const auto& e : entries_)
        if (e.second > 0) t += e.second;
    return t;
}

void require_generic(const DiscreteCurrent& mu, const BoundaryPoint& p) {
    for (const auto& c : mu.chords())
        if (c.src() == p || c.dst() == p)
            throw GenericPositionError("point " + to_string(p) + " is an endpoint of chord " + to_string(c));
}

Rational box_measure(const DiscreteCurrent& mu, const Box& r) {
    for (const auto* corner : {&r.x1, &r.x2, &r.y1, &r.y2}) require_generic(mu, *corner);
    Rational total = 0;
    for (size_t i = 0; i < mu.size(); ++i) {
        const auto& c = mu.chord(i);
        if (in_closed_arc(c.src(), r.x1, r.x2) && in_closed_arc(c.dst(), r.y1, r.y2)) total += mu.weight(i);
    }
    return total;
}

Rational crossing_pairing(const DiscreteCurrent& mu1, const DiscreteCurrent& mu2, bool signed_pairing) {
    Rational total = 0;
    for (size_t i = 0; i < mu1.size(); ++i) {
        for (size_t j = 0; j < mu2.size(); ++j) {
            int s = crossing_sign(mu1.chord(i), mu2.chord(j));
            if (s == 0) continue;
            total += mu1.weight(i) * mu2.weight(j) * (signed_pairing ? s : 1);
        }
    }
    return total;
}

bool is_symmetric(const DiscreteCurrent& mu) {
    for (size_t i = 0; i < mu.size(); ++i)
        if (mu.weight_of(mu.chord(i).reversed()) != mu.weight(i)) return false;
    return true;
}

bool is_lamination(const DiscreteCurrent& mu) {
    if (!is_symmetric(mu)) return false;
    for (size_t i = 0; i < mu.size(); ++i)
        for (size_t j = i + 1; j < mu.size(); ++j)
            if (crossing_sign(mu.chord(i), mu.chord(j)) != 0) return false;
    return true;
}

std::vector<BoundaryPoint> sample_gaps(const DiscreteCurrent& mu) {
    if (mu.empty()) throw EmptyCurrentError("sample_gaps needs a nonempty current");
    const auto pts = mu.endpoints();
    std::vector<BoundaryPoint> out;
    out.reserve(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
        const auto& a = pts[i];
        const auto& b = pts[(i + 1) % pts.size()];
        Rational gap = offset(a, b);
        if (gap == 0) gap = 1;
        out.emplace_back(a.angle() + gap / 2);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace currentlab
