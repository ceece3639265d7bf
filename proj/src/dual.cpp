#include <currentlab/dual.hpp>
#include <currentlab/errors.hpp>

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <map>
#include <queue>
#include <random>

namespace currentlab {

namespace {

using Mask = std::uint64_t;

Mask bit(size_t i) { return Mask(1) << i; }

struct Order {
    std::vector<Mask> below;  // strictly-below masks
    std::vector<size_t> topo;
};

Order containment_order(const DiscreteCurrent& mu) {
    Order o;
    auto below = strictly_below(mu);
    o.below.assign(mu.size(), 0);
    std::vector<size_t> pending(mu.size());
    std::vector<std::vector<size_t>> above(mu.size());
    for (size_t i = 0; i < mu.size(); ++i) {
        for (size_t j : below[i]) {
            o.below[i] |= bit(j);
            above[j].push_back(i);
        }
        pending[i] = below[i].size();
    }
    std::priority_queue<size_t, std::vector<size_t>, std::greater<>> ready;
    for (size_t i = 0; i < mu.size(); ++i)
        if (pending[i] == 0) ready.push(i);
    while (!ready.empty()) {
        size_t i = ready.top();
        ready.pop();
        o.topo.push_back(i);
        for (size_t a : above[i])
            if (--pending[a] == 0) ready.push(a);
    }
    return o;
}

Rational mass_of(const DiscreteCurrent& mu, Mask m) {
    Rational s = 0;
    for (size_t i = 0; i < mu.size(); ++i)
        if (m & bit(i)) s += mu.weight(i);
    return s;
}

Mask full_mask(size_t k) { return k == 64 ? ~Mask(0) : bit(k) - 1; }

int face_dim(const Face& f) {
    int n = std::popcount(f.F);
    return n == 0 ? 0 : n - 1;
}

// Point of a dimension-0 face.
LowerSubmeasure vertex_point(const CurrentPtr& mu, const Rational& T, const Face& f) {
    std::vector<Rational> v(mu->size(), Rational(0));
    Rational left = T;
    for (size_t i = 0; i < mu->size(); ++i)
        if (f.L & bit(i)) {
            v[i] = mu->weight(i);
            left -= v[i];
        }
    for (size_t i = 0; i < mu->size(); ++i)
        if (f.F & bit(i)) v[i] = left;
    return LowerSubmeasure(mu, std::move(v));
}

void require_same_parent(const LowerSubmeasure& a, const LowerSubmeasure& b) {
    if (a.parent_ptr() != b.parent_ptr() && a.parent() != b.parent())
        throw ContractError("points belong to different currents");
}

}  // namespace

std::optional<size_t> DualComplex::find(const Face& f) const {
    auto it = lookup.find({f.L, f.F});
    if (it == lookup.end()) return std::nullopt;
    return it->second;
}

size_t enumeration_budget() {
    const char* env = std::getenv("CURRENTLAB_BUDGET");
    if (!env || !*env) return 24;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v <= 0) throw ParseError(std::string("CURRENTLAB_BUDGET must be a positive integer, got '") + env + "'");
    return static_cast<size_t>(v);
}

DualComplex enumerate_complex(const HolonomyContext& ctx) { return enumerate_complex(ctx, enumeration_budget()); }

DualComplex enumerate_complex(const HolonomyContext& ctx, size_t budget) {
    const auto& mu = ctx.mu();
    const size_t k = mu.size();
    if (k > budget)
        throw ComplexityBudgetError("support has " + std::to_string(k) + " chords, budget is " + std::to_string(budget));
    if (k > 64) throw ComplexityBudgetError("full enumeration supports at most 64 chords");
    const Order order = containment_order(mu);
    const Rational& T = ctx.T();
    DualComplex cx;
    cx.mu = ctx.mu_ptr();
    cx.T = T;
    std::map<std::pair<Mask, Mask>, size_t> index;
    auto add = [&](Mask L, Mask F) {
        Face f{L, F, full_mask(k) & ~(L | F)};
        index[{L, F}] = cx.faces.size();
        cx.faces.push_back(f);
        cx.dims.push_back(face_dim(f));
    };

    std::function<void(size_t, Mask, const Rational&)> downsets = [&](size_t pos, Mask L, const Rational& sum) {
        if (pos == k) {
            const Rational r = T - sum;
            if (r == 0) {
                add(L, 0);
                return;
            }
            std::vector<size_t> mins;
            for (size_t i = 0; i < k; ++i)
                if (!(L & bit(i)) && (order.below[i] & ~L) == 0) mins.push_back(i);
            std::vector<Rational> suffix(mins.size() + 1, Rational(0));
            for (size_t i = mins.size(); i-- > 0;) suffix[i] = suffix[i + 1] + mu.weight(mins[i]);
            std::function<void(size_t, Mask, const Rational&)> subsets = [&](size_t i, Mask F, const Rational& fs) {
                if (fs + suffix[i] <= r) return;
                if (i == mins.size()) {
                    add(L, F);
                    return;
                }
                subsets(i + 1, F | bit(mins[i]), fs + mu.weight(mins[i]));
                subsets(i + 1, F, fs);
            };
            subsets(0, 0, Rational(0));
            return;
        }
        const size_t c = order.topo[pos];
        downsets(pos + 1, L, sum);
        if ((order.below[c] & ~L) == 0 && sum + mu.weight(c) <= T) downsets(pos + 1, L | bit(c), sum + mu.weight(c));
    };
    downsets(0, 0, Rational(0));

    // Faces in a canonical order: by dimension, then masks.
    std::vector<size_t> perm(cx.faces.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
        const Face &fa = cx.faces[a], &fb = cx.faces[b];
        if (cx.dims[a] != cx.dims[b]) return cx.dims[a] < cx.dims[b];
        if (std::popcount(fa.F) != std::popcount(fb.F)) return std::popcount(fa.F) < std::popcount(fb.F);
        if (fa.L != fb.L) return fa.L < fb.L;
        return fa.F < fb.F;
    });
    std::vector<Face> faces;
    std::vector<int> dims;
    for (size_t i : perm) {
        faces.push_back(cx.faces[i]);
        dims.push_back(cx.dims[i]);
    }
    cx.faces = std::move(faces);
    cx.dims = std::move(dims);
    index.clear();
    for (size_t i = 0; i < cx.faces.size(); ++i) index[{cx.faces[i].L, cx.faces[i].F}] = i;
    cx.lookup = index;

    cx.maximal.assign(cx.faces.size(), true);
    std::map<size_t, size_t> vertex_of_face;
    for (size_t i = 0; i < cx.faces.size(); ++i) {
        cx.dimension = std::max(cx.dimension, cx.dims[i]);
        if (cx.dims[i] == 0) {
            vertex_of_face[i] = cx.vertex_faces.size();
            cx.vertex_faces.push_back(i);
            cx.vertices.push_back(vertex_point(cx.mu, T, cx.faces[i]));
        }
    }
    for (size_t i = 0; i < cx.faces.size(); ++i)
        for (size_t j : facets(cx, i)) cx.maximal[j] = false;

    for (size_t i = 0; i < cx.faces.size(); ++i) {
        if (cx.dims[i] != 1) continue;
        const Face& f = cx.faces[i];
        std::vector<size_t> in_f;
        for (size_t c = 0; c < k; ++c)
            if (f.F & bit(c)) in_f.push_back(c);
        const Rational r = T - mass_of(mu, f.L);
        auto endpoint = [&](size_t p, size_t q) {
            // nu(p) as large as possible
            const Rational& wp = mu.weight(p);
            Face v;
            if (wp < r) v = Face{f.L | bit(p), bit(q), 0};
            else if (wp > r) v = Face{f.L, bit(p), 0};
            else v = Face{f.L | bit(p), 0, 0};
            return vertex_of_face.at(index.at({v.L, v.F}));
        };
        auto a = endpoint(in_f[0], in_f[1]), b = endpoint(in_f[1], in_f[0]);
        cx.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(cx.edges.begin(), cx.edges.end());
    return cx;
}

std::vector<size_t> facets(const DualComplex& cx, size_t face) {
    const Face& f = cx.faces[face];
    std::vector<size_t> out;
    for (size_t c = 0; c < cx.mu->size(); ++c) {
        if (!(f.F & bit(c))) continue;
        for (const Face& g : {Face{f.L | bit(c), f.F & ~bit(c), 0}, Face{f.L, f.F & ~bit(c), 0}}) {
            if (auto j = cx.find(g)) out.push_back(*j);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<size_t> face_vertices(const DualComplex& cx, size_t face) {
    const Face& f = cx.faces[face];
    std::vector<size_t> out;
    for (size_t v = 0; v < cx.vertex_faces.size(); ++v) {
        const Face& g = cx.faces[cx.vertex_faces[v]];
        if ((f.L & ~g.L) == 0 && (f.U & ~g.U) == 0) out.push_back(v);
    }
    return out;
}

bool face_contains_point(const Face& f, const LowerSubmeasure& nu) {
    const auto& mu = nu.parent();
    for (size_t i = 0; i < mu.size(); ++i) {
        if ((f.L & bit(i)) && nu.value(i) != mu.weight(i)) return false;
        if ((f.U & bit(i)) && nu.value(i) != 0) return false;
    }
    return true;
}

DimensionSample sample_dimension(const HolonomyContext& ctx, size_t samples, unsigned seed) {
    const auto& mu = ctx.mu();
    const size_t k = mu.size();
    if (k > 64) throw ComplexityBudgetError("sampling supports at most 64 chords");
    const Order order = containment_order(mu);
    std::mt19937 rng(seed);
    DimensionSample out;
    out.samples = samples;
    for (size_t s = 0; s < samples; ++s) {
        Mask L = 0;
        Rational sum = 0;
        while (true) {
            std::vector<size_t> avail;
            for (size_t i = 0; i < k; ++i)
                if (!(L & bit(i)) && (order.below[i] & ~L) == 0 && sum + mu.weight(i) <= ctx.T()) avail.push_back(i);
            if (avail.empty()) break;
            std::uniform_int_distribution<size_t> pick(0, avail.size());
            size_t choice = pick(rng);
            if (choice == avail.size() && L != 0) break;  // stop early sometimes
            size_t c = avail[choice % avail.size()];
            L |= bit(c);
            sum += mu.weight(c);
        }
        if (sum == ctx.T()) continue;
        Rational fs = 0;
        int count = 0;
        for (size_t i = 0; i < k; ++i)
            if (!(L & bit(i)) && (order.below[i] & ~L) == 0) fs += mu.weight(i), ++count;
        if (count > 0 && sum + fs > ctx.T()) out.dimension_lower_bound = std::max(out.dimension_lower_bound, count - 1);
    }
    return out;
}

Rational metric_d(const LowerSubmeasure& nu1, const LowerSubmeasure& nu2) {
    require_same_parent(nu1, nu2);
    if (nu1.total() != nu2.total()) throw ContractError("points have different holonomy");
    const auto& mu = nu1.parent();
    // chords are sorted by source angle
    Rational f = 0, hi = 0, lo = 0;
    for (size_t i = 0; i < mu.size(); ++i) {
        f += nu2.value(i) - nu1.value(i);
        if (i + 1 < mu.size() && mu.chord(i + 1).src() == mu.chord(i).src()) continue;
        if (f > hi) hi = f;
        if (f < lo) lo = f;
    }
    return hi - lo;
}

Rational metric_d(const HolonomyContext& ctx, const LowerSubmeasure& nu1, const LowerSubmeasure& nu2) {
    if (nu1.parent() != ctx.mu()) throw ContractError("point does not belong to the context current");
    if (submeasure_holonomy(ctx, nu1) != 0 || submeasure_holonomy(ctx, nu2) != 0)
        throw ContractError("point is not holonomy zero");
    return metric_d(nu1, nu2);
}

namespace {

void require_lamination_points(const LowerSubmeasure& a, const LowerSubmeasure& b) {
    require_same_parent(a, b);
    const auto& mu = a.parent();
    if (!is_lamination(mu)) throw NotLaminationError("parent current is not a measured lamination");
    for (const auto* nu : {&a, &b})
        for (size_t i = 0; i < mu.size(); ++i) {
            size_t j = mu.index_of(mu.chord(i).reversed()).value();
            if (nu->value(i) + nu->value(j) != mu.weight(i))
                throw NotLaminationError("point is not symmetric on chord " + to_string(mu.chord(i)));
        }
}

}  // namespace

Rational rank2_distance(const LowerSubmeasure& nu1, const LowerSubmeasure& nu2) {
    require_lamination_points(nu1, nu2);
    Rational d = 0;
    for (size_t i = 0; i < nu1.parent().size(); ++i) {
        Rational e = nu2.value(i) - nu1.value(i);
        if (e > 0) d += e;
    }
    return d;
}

LowerSubmeasure median(const LowerSubmeasure& nu1, const LowerSubmeasure& nu2, const LowerSubmeasure& nu3) {
    require_lamination_points(nu1, nu2);
    require_lamination_points(nu1, nu3);
    std::vector<Rational> v;
    for (size_t i = 0; i < nu1.parent().size(); ++i) {
        std::array<Rational, 3> t{nu1.value(i), nu2.value(i), nu3.value(i)};
        std::sort(t.begin(), t.end());
        v.push_back(t[1]);
    }
    return LowerSubmeasure(nu1.parent_ptr(), std::move(v));
}

std::vector<SymmetricFace> symmetric_members(const DualComplex& cx) {
    const auto& mu = *cx.mu;
    if (!is_symmetric(mu)) throw ContractError("symmetric dual space needs a symmetric current");
    if (cx.T * 2 != mu.total_mass()) throw ContractError("symmetric dual space needs T = |mu|/2");
    std::vector<size_t> tau(mu.size());
    for (size_t i = 0; i < mu.size(); ++i) tau[i] = mu.index_of(mu.chord(i).reversed()).value();
    auto image = [&](Mask m) {
        Mask out = 0;
        for (size_t i = 0; i < mu.size(); ++i)
            if (m & bit(i)) out |= bit(tau[i]);
        return out;
    };
    std::vector<SymmetricFace> out;
    for (size_t f = 0; f < cx.faces.size(); ++f) {
        const Face& face = cx.faces[f];
        if (image(face.L) != face.U || image(face.F) != face.F) continue;
        SymmetricFace s{f, {}, 0};
        for (size_t i = 0; i < mu.size(); ++i)
            if ((face.F & bit(i)) && i < tau[i]) s.pairs.emplace_back(i, tau[i]);
        s.dim = static_cast<int>(s.pairs.size());
        out.push_back(std::move(s));
    }
    return out;
}

Rational relative_distance(const LPoint& a, const LPoint& b) {
    require_same_parent(a.nu, b.nu);
    if (a.nu.total() != b.nu.total()) throw ContractError("points have different holonomy");
    const auto& mu = a.nu.parent();
    const Rational base = b.offset - a.offset;
    if (mu.empty()) return base;
    const auto pts = mu.endpoints();
    const size_t g = pts.size();
    auto inside = [&](size_t gap, const Rational& t) {
        const auto& s = pts[gap];
        Rational len = offset(s, pts[(gap + 1) % g]);
        if (len == 0) len = 1;
        return BoundaryPoint(s.angle() + len * t);
    };
    // Gap i runs from pts[i] to pts[i+1]; the gap through angle 0 is the last one.
    std::vector<Rational> f(g);
    f[g - 1] = base;
    Rational run = base;
    for (size_t i = 0; i < g; ++i) {
        const size_t prev = (i + g - 1) % g;
        const auto x1 = inside(prev, Rational(1, 2));
        const auto x2 = inside(i, Rational(1, 3));
        const auto y = inside(i, Rational(2, 3));
        run += potential_of(b.nu, x1, y) - potential_of(b.nu, x2, y) - potential_of(a.nu, x1, y) +
               potential_of(a.nu, x2, y);
        if (i < g - 1) f[i] = run;
    }
    if (run != base) throw ContractError("section difference does not close up around the circle");
    return *std::max_element(f.begin(), f.end());
}

bool shared_point_bound_check(const DualComplex& cx, int n) {
    for (const auto& f : cx.faces)
        if (std::popcount(f.F) > n) return false;
    return true;
}

}  // namespace currentlab
