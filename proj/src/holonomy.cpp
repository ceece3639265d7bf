#include <currentlab/errors.hpp>
#include <currentlab/holonomy.hpp>

#include <queue>

namespace currentlab {

CurrentPtr share(const DiscreteCurrent& mu) { return std::make_shared<const DiscreteCurrent>(mu); }

std::vector<std::vector<size_t>> strictly_below(const DiscreteCurrent& mu) {
    std::vector<std::vector<size_t>> below(mu.size());
    for (size_t i = 0; i < mu.size(); ++i)
        for (size_t j = 0; j < mu.size(); ++j)
            if (i != j && chord_leq(mu.chord(j), mu.chord(i))) below[i].push_back(j);
    return below;
}

LowerSubmeasure::LowerSubmeasure(CurrentPtr parent, std::vector<Rational> values)
    : parent_(std::move(parent)), values_(std::move(values)) {
    const auto& mu = *parent_;
    if (values_.size() != mu.size()) throw NotLowerSubmeasureError("value count does not match support size");
    for (size_t i = 0; i < mu.size(); ++i)
        if (values_[i] < 0 || values_[i] > mu.weight(i))
            throw NotLowerSubmeasureError("value out of [0, weight] on chord " + to_string(mu.chord(i)));
    for (size_t p = 0; p < mu.size(); ++p) {
        if (values_[p] == 0) continue;
        for (size_t q = 0; q < mu.size(); ++q)
            if (q != p && values_[q] != mu.weight(q) && chord_leq(mu.chord(q), mu.chord(p)))
                throw NotLowerSubmeasureError("chord " + to_string(mu.chord(q)) + " lies below " +
                                              to_string(mu.chord(p)) + " but is not full");
    }
}

Rational LowerSubmeasure::total() const {
    Rational t = 0;
    for (const auto& v : values_) t += v;
    return t;
}

LowerSubmeasure greedy_submeasure(CurrentPtr mu, const Rational& T, const std::vector<size_t>& priority) {
    const Rational mass = mu->total_mass();
    if (T < 0 || T > mass)
        throw MassRangeError("mass level " + to_string(T) + " outside [0, " + to_string(mass) + "]");
    const size_t k = mu->size();
    auto below = strictly_below(*mu);
    std::vector<size_t> pending(k);
    std::vector<std::vector<size_t>> above(k);
    for (size_t i = 0; i < k; ++i) {
        pending[i] = below[i].size();
        for (size_t j : below[i]) above[j].push_back(i);
    }
    auto rank = [&](size_t i) { return priority.empty() ? i : priority[i]; };
    using Item = std::pair<size_t, size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
    for (size_t i = 0; i < k; ++i)
        if (pending[i] == 0) ready.emplace(rank(i), i);
    std::vector<Rational> values(k, Rational(0));
    Rational left = T;
    while (!ready.empty()) {
        size_t i = ready.top().second;
        ready.pop();
        Rational take = left < mu->weight(i) ? left : mu->weight(i);
        values[i] = take;
        left -= take;
        for (size_t a : above[i])
            if (--pending[a] == 0) ready.emplace(rank(a), a);
    }
    return LowerSubmeasure(std::move(mu), std::move(values));
}

LowerSubmeasure base_submeasure(CurrentPtr mu, const Rational& T) { return greedy_submeasure(std::move(mu), T); }

HolonomyContext::HolonomyContext(CurrentPtr mu, const Rational& T)
    : mu_(mu), T_(T), base_(base_submeasure(mu, T)) {}

HolonomyContext::HolonomyContext(CurrentPtr mu, const Rational& T, LowerSubmeasure base)
    : mu_(std::move(mu)), T_(T), base_(std::move(base)) {
    if (base_.parent() != *mu_) throw ContractError("base submeasure has a different parent current");
    if (base_.total() != T_) throw ContractError("base submeasure mass differs from the mass level");
}

Rational potential_of(const LowerSubmeasure& nu, const BoundaryPoint& x, const BoundaryPoint& y) {
    const auto& mu = nu.parent();
    require_generic(mu, x);
    require_generic(mu, y);
    const Chord xy(x, y);
    Rational m = 0;
    for (size_t i = 0; i < mu.size(); ++i) {
        const auto& c = mu.chord(i);
        if (chord_leq(xy, c))
            m -= nu.value(i);
        else if (chord_leq(c, xy))
            m -= mu.weight(i) - nu.value(i);
    }
    return m;
}

Rational potential(const HolonomyContext& ctx, const BoundaryPoint& x, const BoundaryPoint& y) {
    return potential_of(ctx.base(), x, y);
}

Rational cross_ratio(const HolonomyContext& ctx, const BoundaryPoint& x1, const BoundaryPoint& x2,
                     const BoundaryPoint& y1, const BoundaryPoint& y2) {
    return potential(ctx, x1, y1) + potential(ctx, x2, y2) - potential(ctx, x1, y2) - potential(ctx, x2, y1);
}

Rational cycle_holonomy(const HolonomyContext& ctx, const TaxiCycle& z) {
    Rational h = 0;
    for (const auto& s : z.segments()) {
        if (s.kind != SegmentKind::Horizontal || s.from == s.to) continue;
        h += potential(ctx, s.to, s.fixed) - potential(ctx, s.from, s.fixed);
    }
    return h;
}

TaxiCycle triple_cycle(const BoundaryPoint& x, const BoundaryPoint& y, const BoundaryPoint& z) {
    return TaxiCycle::through({{x, y}, {x, z}, {y, z}, {y, x}, {z, x}, {z, y}});
}

Rational triple_ratio(const HolonomyContext& ctx, const BoundaryPoint& x, const BoundaryPoint& y,
                      const BoundaryPoint& z) {
    if (x == y || y == z || x == z) throw ContractError("triple ratio needs three distinct points");
    return cycle_holonomy(ctx, triple_cycle(x, y, z));
}

Rational submeasure_holonomy(const HolonomyContext& ctx, const LowerSubmeasure& nu) {
    if (nu.parent() != ctx.mu()) throw NotLowerSubmeasureError("submeasure of a different current");
    return nu.total() - ctx.T();
}

}  // namespace currentlab
