#pragma once

#include <currentlab/current.hpp>

#include <memory>
#include <vector>

namespace currentlab {

using CurrentPtr = std::shared_ptr<const DiscreteCurrent>;

CurrentPtr share(const DiscreteCurrent& mu);

// below[i] lists the support indices strictly chord_less than chord i.
std::vector<std::vector<size_t>> strictly_below(const DiscreteCurrent& mu);

// nu <= mu chordwise, and nu(p) > 0 forces nu(q) = mu(q) for q strictly below p.
class LowerSubmeasure {
public:
    LowerSubmeasure(CurrentPtr parent, std::vector<Rational> values);

    const DiscreteCurrent& parent() const { return *parent_; }
    const CurrentPtr& parent_ptr() const { return parent_; }
    const std::vector<Rational>& values() const { return values_; }
    const Rational& value(size_t i) const { return values_[i]; }
    Rational total() const;

    friend bool operator==(const LowerSubmeasure& a, const LowerSubmeasure& b) {
        return (a.parent_ == b.parent_ || *a.parent_ == *b.parent_) && a.values_ == b.values_;
    }
    friend bool operator!=(const LowerSubmeasure& a, const LowerSubmeasure& b) { return !(a == b); }

private:
    CurrentPtr parent_;
    std::vector<Rational> values_;
};

// Greedy fill in a linear extension of strict containment; among available
// chords the smallest priority goes first. Empty priority means sorted order.
LowerSubmeasure greedy_submeasure(CurrentPtr mu, const Rational& T, const std::vector<size_t>& priority = {});
LowerSubmeasure base_submeasure(CurrentPtr mu, const Rational& T);

class HolonomyContext {
public:
    HolonomyContext(CurrentPtr mu, const Rational& T);
    HolonomyContext(const DiscreteCurrent& mu, const Rational& T) : HolonomyContext(share(mu), T) {}
    HolonomyContext(CurrentPtr mu, const Rational& T, LowerSubmeasure base);

    const DiscreteCurrent& mu() const { return *mu_; }
    const CurrentPtr& mu_ptr() const { return mu_; }
    const Rational& T() const { return T_; }
    const LowerSubmeasure& base() const { return base_; }

private:
    CurrentPtr mu_;
    Rational T_;
    LowerSubmeasure base_;
};

// m_nu(x,y) for an arbitrary lower submeasure.
Rational potential_of(const LowerSubmeasure& nu, const BoundaryPoint& x, const BoundaryPoint& y);

Rational potential(const HolonomyContext& ctx, const BoundaryPoint& x, const BoundaryPoint& y);

Rational cross_ratio(const HolonomyContext& ctx, const BoundaryPoint& x1, const BoundaryPoint& x2,
                     const BoundaryPoint& y1, const BoundaryPoint& y2);

Rational cycle_holonomy(const HolonomyContext& ctx, const TaxiCycle& z);

// Six-segment cycle (x,y) -> (x,z) -> (y,z) -> (y,x) -> (z,x) -> (z,y).
TaxiCycle triple_cycle(const BoundaryPoint& x, const BoundaryPoint& y, const BoundaryPoint& z);

Rational triple_ratio(const HolonomyContext& ctx, const BoundaryPoint& x, const BoundaryPoint& y,
                      const BoundaryPoint& z);

Rational submeasure_holonomy(const HolonomyContext& ctx, const LowerSubmeasure& nu);

}  // namespace currentlab
