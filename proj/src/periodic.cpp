#include "currentlab/periodic.hpp"

#include "currentlab/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

namespace currentlab {

namespace {

// Linear position starting at the repelling point.
struct Key {
    int region;
    Rational v;

    bool operator<(const Key& o) const { return region != o.region ? region < o.region : v < o.v; }
    bool operator==(const Key& o) const { return region == o.region && v == o.v; }
    bool operator<=(const Key& o) const { return !(o < *this); }
};

Key key_of(const PeriodicLocus& p) {
    switch (p.kind) {
        case PeriodicLocus::Kind::Repelling: return {0, Rational(0)};
        case PeriodicLocus::Kind::North: return {1, p.height};
        case PeriodicLocus::Kind::Attracting: return {2, Rational(0)};
        case PeriodicLocus::Kind::South: return {3, Rational(-p.height)};
    }
    return {0, Rational(0)};
}

std::pair<bool, Key> rel(const Key& base, const Key& p) { return {p < base, p}; }

bool in_closed_arc(const Key& a, const Key& b, const Key& p) {
    if (a <= b) return a <= p && p <= b;
    return a <= p || p <= b;
}

bool ccw(const Key& a, const Key& b, const Key& c) {
    if (a == b || b == c || a == c) return false;
    return rel(a, b) < rel(a, c);
}

// (p_src, p_dst) lies below (q_src, q_dst).
bool chord_leq(const Key& ps, const Key& pd, const Key& qs, const Key& qd) {
    auto a = rel(qs, ps), b = rel(qs, pd), c = rel(qs, qd);
    return a <= b && b <= c;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Side side_of(const PeriodicLocus& p) { return p.kind == PeriodicLocus::Kind::North ? Side::North : Side::South; }

// Sum of f(k) over integer k. f must be constant between consecutive
// breakpoints and vanish on the unbounded ends.
Rational orbit_sum(std::vector<Rational> bps, const std::function<Rational(const Rational&)>& f) {
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
    for (const auto& b : bps)
        if (is_integer(b)) throw GenericPositionError("orbit element meets a corner or cut exactly");
    if (bps.empty()) {
        if (f(Rational(0)) != 0) throw FixedPointError("orbit sum diverges at a fixed point");
        return 0;
    }
    if (f(Rational(bps.front() - 1)) != 0 || f(Rational(bps.back() + 1)) != 0)
        throw FixedPointError("orbit sum diverges at a fixed point");
    Rational total = 0;
    for (size_t i = 0; i + 1 < bps.size(); ++i) {
        Rational count(floor_of(bps[i + 1]) - floor_of(bps[i]));
        if (count == 0) continue;
        total += count * f(Rational((bps[i] + bps[i + 1]) / 2));
    }
    return total;
}

struct Element {
    Key src, dst;
};

class OrbitView {
public:
    OrbitView(const PeriodicCurrent& mu, const PeriodicOrbit& o)
        : o_(o), hs_(mu.height(o.src)), hd_(mu.height(o.dst)) {}

    Element at(const Rational& k) const {
        return {key_of(PeriodicLocus::on(o_.src.side, Rational(hs_ + k))),
                key_of(PeriodicLocus::on(o_.dst.side, Rational(hd_ + k)))};
    }

    // Shifts at which an endpoint of the orbit element crosses p.
    void breakpoints(const PeriodicLocus& p, std::vector<Rational>& out) const {
        if (p.fixed()) return;
        if (side_of(p) == o_.src.side) out.push_back(p.height - hs_);
        if (side_of(p) == o_.dst.side) out.push_back(p.height - hd_);
    }

    void cut_breakpoints(const PeriodicReference& ref, std::vector<Rational>& out, long shift = 0) const {
        for (const PeriodicLocus& p : {PeriodicLocus::on(Side::North, ref.north_cut),
                                       PeriodicLocus::on(Side::South, ref.south_cut)}) {
            size_t before = out.size();
            breakpoints(p, out);
            for (size_t i = before; i < out.size(); ++i) out[i] += shift;
        }
    }

    const PeriodicOrbit& orbit() const { return o_; }
    const Rational& src_height() const { return hs_; }

private:
    const PeriodicOrbit& o_;
    Rational hs_, hd_;
};

void require_generic(const PeriodicCurrent& mu, const PeriodicLocus& p) {
    if (p.fixed()) return;
    for (const auto& o : mu.orbits())
        for (const auto* e : {&o.src, &o.dst})
            if (e->side == side_of(p) && is_integer(Rational(p.height - mu.height(*e))))
                throw GenericPositionError("corner " + to_string(p) + " lies on an orbit endpoint");
}

bool orbit_less(const PeriodicOrbit& a, const PeriodicOrbit& b) {
    return std::make_tuple(a.src.side, a.src.slot, a.dst.side, a.dst.slot, a.dst.power) <
           std::make_tuple(b.src.side, b.src.slot, b.dst.side, b.dst.slot, b.dst.power);
}

bool same_orbit(const PeriodicOrbit& a, const PeriodicOrbit& b) { return !orbit_less(a, b) && !orbit_less(b, a); }

}  // namespace

PeriodicLocus PeriodicLocus::shifted(long k) const {
    if (fixed()) return *this;
    return {kind, Rational(height + k)};
}

std::string to_string(const PeriodicLocus& p) {
    switch (p.kind) {
        case PeriodicLocus::Kind::Repelling: return "gamma-";
        case PeriodicLocus::Kind::Attracting: return "gamma+";
        case PeriodicLocus::Kind::North: return "N(" + to_string(p.height) + ")";
        case PeriodicLocus::Kind::South: return "S(" + to_string(p.height) + ")";
    }
    return "?";
}

PeriodicBox::PeriodicBox(PeriodicLocus a1, PeriodicLocus a2, PeriodicLocus b1, PeriodicLocus b2)
    : x1(std::move(a1)), x2(std::move(a2)), y1(std::move(b1)), y2(std::move(b2)) {
    Key k1 = key_of(x1), k2 = key_of(x2), k3 = key_of(y1), k4 = key_of(y2);
    if (!(ccw(k1, k2, k3) && ccw(k2, k3, k4) && ccw(k3, k4, k1)))
        throw ValidationError("box corners not in cyclic order x1<x2<y1<y2");
}

PeriodicCurrent::PeriodicCurrent(std::vector<Rational> north, std::vector<Rational> south,
                                 std::vector<PeriodicOrbit> orbits)
    : north_(std::move(north)), south_(std::move(south)) {
    for (const auto* list : {&north_, &south_}) {
        for (const auto& h : *list)
            if (h < 0 || h >= 1) throw ValidationError("slot height " + to_string(h) + " outside [0,1)");
        auto sorted = *list;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ValidationError("repeated slot height");
    }
    for (auto o : orbits) {
        for (const auto* e : {&o.src, &o.dst})
            if (e->slot >= slots(e->side).size()) throw ValidationError("slot index out of range");
        if (o.weight <= 0) throw ValidationError("orbit weight must be positive");
        o.dst.power -= o.src.power;
        o.src.power = 0;
        if (o.src == o.dst) throw ValidationError("orbit chord endpoints coincide");
        orbits_.push_back(o);
    }
    std::sort(orbits_.begin(), orbits_.end(), orbit_less);
    std::vector<PeriodicOrbit> merged;
    for (const auto& o : orbits_) {
        if (!merged.empty() && same_orbit(merged.back(), o))
            merged.back().weight += o.weight;
        else
            merged.push_back(o);
    }
    orbits_ = std::move(merged);
}

Rational PeriodicCurrent::height(const PeriodicPoint& p) const {
    const auto& s = slots(p.side);
    if (p.slot >= s.size()) throw ValidationError("slot index out of range");
    return Rational(s[p.slot] + p.power);
}

OrbitKind PeriodicCurrent::kind(const PeriodicOrbit& o) const {
    if (o.src.side != o.dst.side) return o.src.side == Side::South ? OrbitKind::Up : OrbitKind::Down;
    bool rising = height(o.src) < height(o.dst);
    return (o.src.side == Side::North) == rising ? OrbitKind::Low : OrbitKind::High;
}

std::pair<Rational, Rational> PeriodicCurrent::crossing_weights() const {
    Rational up = 0, down = 0;
    for (const auto& o : orbits_) {
        auto k = kind(o);
        if (k == OrbitKind::Up) up += o.weight;
        if (k == OrbitKind::Down) down += o.weight;
    }
    return {up, down};
}

bool PeriodicCurrent::operator==(const PeriodicCurrent& o) const {
    if (north_ != o.north_ || south_ != o.south_ || orbits_.size() != o.orbits_.size()) return false;
    for (size_t i = 0; i < orbits_.size(); ++i)
        if (!same_orbit(orbits_[i], o.orbits_[i]) || orbits_[i].weight != o.orbits_[i].weight) return false;
    return true;
}

Rational generic_height(const PeriodicCurrent& mu, Side side) {
    std::vector<Rational> fr;
    for (const auto& o : mu.orbits())
        for (const auto* e : {&o.src, &o.dst})
            if (e->side == side) fr.push_back(frac(mu.height(*e)));
    std::sort(fr.begin(), fr.end());
    fr.erase(std::unique(fr.begin(), fr.end()), fr.end());
    if (fr.empty()) return Rational(1, 2);
    Rational best_gap = fr.front() + 1 - fr.back(), best = frac(Rational(fr.back() + best_gap / 2));
    for (size_t i = 0; i + 1 < fr.size(); ++i) {
        Rational gap = fr[i + 1] - fr[i];
        if (gap > best_gap) best_gap = gap, best = Rational((fr[i] + fr[i + 1]) / 2);
    }
    return best;
}

PeriodicReference default_reference(const PeriodicCurrent& mu) {
    return {generic_height(mu, Side::North), generic_height(mu, Side::South)};
}

bool reference_contains(const PeriodicCurrent& mu, const PeriodicReference& ref, const PeriodicOrbit& o,
                        const Rational& k) {
    Rational hs = mu.height(o.src) + k, hd = mu.height(o.dst) + k;
    switch (mu.kind(o)) {
        case OrbitKind::Low: return true;
        case OrbitKind::High: return false;
        case OrbitKind::Up: return hs < ref.south_cut || hd < ref.north_cut;
        case OrbitKind::Down: return hs > ref.north_cut || hd > ref.south_cut;
    }
    return false;
}

Rational periodic_box_measure(const PeriodicCurrent& mu, const PeriodicBox& r) {
    for (const auto* c : {&r.x1, &r.x2, &r.y1, &r.y2}) require_generic(mu, *c);
    Key x1 = key_of(r.x1), x2 = key_of(r.x2), y1 = key_of(r.y1), y2 = key_of(r.y2);
    Rational total = 0;
    for (const auto& o : mu.orbits()) {
        OrbitView v(mu, o);
        std::vector<Rational> bps;
        for (const auto* c : {&r.x1, &r.x2, &r.y1, &r.y2}) v.breakpoints(*c, bps);
        total += orbit_sum(bps, [&](const Rational& k) {
            auto e = v.at(k);
            return in_closed_arc(x1, x2, e.src) && in_closed_arc(y1, y2, e.dst) ? o.weight : Rational(0);
        });
    }
    return total;
}

Rational periodic_potential(const PeriodicCurrent& mu, const PeriodicReference& ref, const PeriodicLocus& x,
                            const PeriodicLocus& y) {
    if (x == y) throw ContractError("potential needs two distinct points");
    require_generic(mu, x);
    require_generic(mu, y);
    Key kx = key_of(x), ky = key_of(y);
    Rational m = 0;
    for (const auto& o : mu.orbits()) {
        OrbitView v(mu, o);
        std::vector<Rational> bps;
        v.breakpoints(x, bps);
        v.breakpoints(y, bps);
        v.cut_breakpoints(ref, bps);
        m += orbit_sum(bps, [&](const Rational& k) {
            auto e = v.at(k);
            bool full = reference_contains(mu, ref, o, k);
            if (chord_leq(kx, ky, e.src, e.dst)) return full ? Rational(-o.weight) : Rational(0);
            if (chord_leq(e.src, e.dst, kx, ky)) return full ? Rational(0) : Rational(-o.weight);
            return Rational(0);
        });
    }
    return m;
}

Rational periodic_cross_ratio(const PeriodicCurrent& mu, const PeriodicReference& ref, const PeriodicLocus& x1,
                              const PeriodicLocus& x2, const PeriodicLocus& y1, const PeriodicLocus& y2) {
    return periodic_potential(mu, ref, x1, y1) + periodic_potential(mu, ref, x2, y2) -
           periodic_potential(mu, ref, x1, y2) - periodic_potential(mu, ref, x2, y1);
}

std::vector<std::pair<PeriodicLocus, Rational>> translation_difference(const PeriodicCurrent& mu,
                                                                         const PeriodicReference& ref) {
    std::map<Key, std::pair<PeriodicLocus, Rational>> atoms;
    for (const auto& o : mu.orbits()) {
        OrbitView v(mu, o);
        std::vector<Rational> bps;
        v.cut_breakpoints(ref, bps);
        v.cut_breakpoints(ref, bps, 1);
        auto eps = [&](const Rational& k) -> Rational {
            int d = int(reference_contains(mu, ref, o, Rational(k - 1))) - int(reference_contains(mu, ref, o, k));
            return Rational(d) * o.weight;
        };
        // validates genericity and the tails
        orbit_sum(bps, eps);
        std::sort(bps.begin(), bps.end());
        for (size_t i = 0; i + 1 < bps.size(); ++i) {
            Rational e = eps(Rational((bps[i] + bps[i + 1]) / 2));
            if (e == 0) continue;
            mpz_class lo = floor_of(bps[i]) + 1, hi = floor_of(bps[i + 1]);
            for (mpz_class k = lo; k <= hi; ++k) {
                auto p = PeriodicLocus::on(o.src.side, Rational(v.src_height() + Rational(k)));
                auto [it, fresh] = atoms.try_emplace(key_of(p), p, Rational(0));
                it->second.second += e;
            }
        }
    }
    std::vector<std::pair<PeriodicLocus, Rational>> out;
    for (auto& [k, a] : atoms)
        if (a.second != 0) out.push_back(a);
    return out;
}

Rational displacement(const PeriodicCurrent& mu, const PeriodicReference& ref) {
    Rational f = 0, hi = 0, lo = 0;
    for (const auto& [p, m] : translation_difference(mu, ref)) {
        f += m;
        hi = std::max<Rational>(hi, f);
        lo = std::min<Rational>(lo, f);
    }
    return hi - lo;
}

Rational translation_length(const PeriodicCurrent& mu, long m) {
    if (m == 0) throw ContractError("translation length needs a nonzero power");
    Rational h = generic_height(mu, Side::South);
    auto x = PeriodicLocus::on(Side::South, h), gx = x.shifted(m);
    auto lo = m > 0 ? gx : x, hi = m > 0 ? x : gx;
    return periodic_box_measure(mu, PeriodicBox(lo, hi, PeriodicLocus::repelling(), PeriodicLocus::attracting()));
}

SymmetrizedPeriod symmetrized_period_check(const PeriodicCurrent& mu, const PeriodicReference& ref,
                                           const Rational& south_height) {
    auto x = PeriodicLocus::on(Side::South, south_height), gx = x.shifted(1);
    auto minus = PeriodicLocus::repelling(), plus = PeriodicLocus::attracting();
    SymmetrizedPeriod out;
    out.lhs = displacement(mu, ref);
    // h(x, gamma x; gamma+, gamma-)
    out.rhs = periodic_potential(mu, ref, x, plus) + periodic_potential(mu, ref, gx, minus) -
              periodic_potential(mu, ref, x, minus) - periodic_potential(mu, ref, gx, plus);
    return out;
}

SymmetrizedPeriod symmetrized_period_check(const PeriodicCurrent& mu) {
    return symmetrized_period_check(mu, default_reference(mu), generic_height(mu, Side::South));
}

}  // namespace currentlab
