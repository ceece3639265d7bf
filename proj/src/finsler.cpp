#include "currentlab/finsler.hpp"

#include "currentlab/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace currentlab {

namespace {

constexpr double kTieTol = 1e-12;
constexpr double kLpTol = 1e-12;
constexpr int kMaxDoublings = 60;

double root_value(int k, const Complex& v) { return 2 * (cube_root(k) * v).real(); }

double cross(const Complex& a, const Complex& b) { return a.real() * b.imag() - a.imag() * b.real(); }

Complex unit_speed(const Complex& dir) {
    double n = finsler_norm(dir);
    if (!(n > 0) || !std::isfinite(n)) throw ContractError("ray direction must be nonzero and finite");
    return dir / n;
}

}  // namespace

Complex cube_root(int k) {
    static const std::array<Complex, 3> roots{Complex(1, 0), Complex(-0.5, std::sqrt(3.0) / 2),
                                              Complex(-0.5, -std::sqrt(3.0) / 2)};
    return roots[size_t(((k % 3) + 3) % 3)];
}

double finsler_norm(const Complex& v) {
    return std::max({root_value(0, v), root_value(1, v), root_value(2, v)});
}

double distance(const Complex& p, const Complex& q) { return finsler_norm(q - p); }

std::vector<int> maximizing_roots(const Complex& v) {
    if (v == Complex(0, 0)) throw ContractError("maximizing roots of the zero vector");
    double n = finsler_norm(v);
    std::vector<int> out;
    for (int k = 0; k < 3; ++k)
        if (root_value(k, v) >= n - kTieTol) out.push_back(k);
    return out;
}

void validate_polyline(const Polyline& path) {
    if (path.size() < 2) throw ValidationError("polyline needs at least two points");
    for (const auto& p : path)
        if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) throw ValidationError("polyline point not finite");
    for (size_t i = 0; i + 1 < path.size(); ++i)
        if (path[i] == path[i + 1]) throw ValidationError("consecutive polyline points coincide");
}

double finsler_length(const Polyline& path) {
    validate_polyline(path);
    double len = 0;
    for (size_t i = 0; i + 1 < path.size(); ++i) len += distance(path[i], path[i + 1]);
    return len;
}

bool is_geodesic(const Polyline& path) {
    validate_polyline(path);
    std::vector<int> common{0, 1, 2};
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        auto m = maximizing_roots(path[i + 1] - path[i]);
        std::vector<int> next;
        std::set_intersection(common.begin(), common.end(), m.begin(), m.end(), std::back_inserter(next));
        common = std::move(next);
    }
    return !common.empty();
}

double Horofunction::operator()(const Complex& x) const {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& f : forms) {
        double lin = root_value(f.root, x);
        best = std::max(best, (sign == HoroSign::Minus ? lin : -lin) + f.offset);
    }
    return best;
}

Horofunction Horofunction::shifted(double r) const {
    Horofunction h = *this;
    for (auto& f : h.forms) f.offset += r;
    return h;
}

Horofunction busemann(const Complex& base, const Complex& dir, HoroSign sign) {
    Complex u = unit_speed(dir);
    Horofunction h{sign, {}};
    for (int k : maximizing_roots(u)) {
        double at_base = root_value(k, base);
        h.forms.push_back({k, sign == HoroSign::Minus ? -at_base : at_base});
    }
    return h;
}

bool same_horofunction(const Horofunction& a, const Horofunction& b, double tol) {
    if (a.sign != b.sign || a.forms.size() != b.forms.size()) return false;
    for (size_t i = 0; i < a.forms.size(); ++i)
        if (a.forms[i].root != b.forms[i].root || std::fabs(a.forms[i].offset - b.forms[i].offset) > tol) return false;
    return true;
}

double pairing(const Horofunction& g, const Horofunction& h) {
    if (g.sign != HoroSign::Minus || h.sign != HoroSign::Plus)
        throw ContractError("pairing takes a minus and a plus horofunction");
    // g + h = max over pieces of <grad, x> + c; its infimum is the LP dual
    // max sum(lambda c) over convex combinations of gradients equal to 0.
    std::vector<Complex> grad;
    std::vector<double> c;
    for (const auto& a : g.forms)
        for (const auto& b : h.forms) {
            grad.push_back(2.0 * std::conj(cube_root(a.root) - cube_root(b.root)));
            c.push_back(a.offset + b.offset);
        }
    const size_t n = grad.size();
    double best = -std::numeric_limits<double>::infinity();
    for (size_t p = 0; p < n; ++p)
        if (std::abs(grad[p]) <= kLpTol) best = std::max(best, c[p]);
    for (size_t p = 0; p < n; ++p)
        for (size_t q = p + 1; q < n; ++q) {
            double lp = std::abs(grad[p]), lq = std::abs(grad[q]);
            if (lp <= kLpTol || lq <= kLpTol) continue;
            if (std::fabs(cross(grad[p], grad[q])) > kLpTol * lp * lq) continue;
            if ((grad[p] * std::conj(grad[q])).real() >= 0) continue;
            best = std::max(best, (lq * c[p] + lp * c[q]) / (lp + lq));
        }
    for (size_t p = 0; p < n; ++p)
        for (size_t q = p + 1; q < n; ++q)
            for (size_t r = q + 1; r < n; ++r) {
                double wp = cross(grad[q], grad[r]), wq = cross(grad[r], grad[p]), wr = cross(grad[p], grad[q]);
                double s = wp + wq + wr;
                if (std::fabs(s) <= kLpTol) continue;
                wp /= s, wq /= s, wr /= s;
                if (wp <= kLpTol || wq <= kLpTol || wr <= kLpTol) continue;
                best = std::max(best, wp * c[p] + wq * c[q] + wr * c[r]);
            }
    return best;
}

double cross_ratio_b(const Horofunction& g1, const Horofunction& g2, const Horofunction& h1,
                     const Horofunction& h2) {
    const std::array<double, 4> p{pairing(g1, h1), pairing(g2, h2), pairing(g1, h2), pairing(g2, h1)};
    for (double v : p)
        if (!std::isfinite(v)) throw DegenerateConfigurationError("a pairing of the cross ratio is -infinity");
    return p[0] + p[1] - p[2] - p[3];
}

double cross_ratio_from_pairings(const RayConfiguration& c) {
    return cross_ratio_b(busemann(c.g1.base, c.g1.dir, HoroSign::Minus),
                         busemann(c.g2.base, c.g2.dir, HoroSign::Minus),
                         busemann(c.h1.base, c.h1.dir, HoroSign::Plus), busemann(c.h2.base, c.h2.dir, HoroSign::Plus));
}

double cross_ratio_from_distances(const RayConfiguration& c) {
    struct Term {
        const Ray *g, *h;
        double sign;
    };
    const std::array<Term, 4> terms{Term{&c.g1, &c.h1, 1}, Term{&c.g2, &c.h2, 1}, Term{&c.g1, &c.h2, -1},
                                    Term{&c.g2, &c.h1, -1}};
    // d(base_g - R u, base_h + R v) = max over roots of A + R B
    std::array<std::array<double, 3>, 4> A, B;
    double scale = 1;
    for (size_t t = 0; t < 4; ++t) {
        Complex u = unit_speed(terms[t].g->dir), v = unit_speed(terms[t].h->dir);
        Complex db = terms[t].h->base - terms[t].g->base;
        scale = std::max(scale, std::abs(db));
        double top = -std::numeric_limits<double>::infinity();
        for (int k = 0; k < 3; ++k) {
            A[t][size_t(k)] = root_value(k, db);
            B[t][size_t(k)] = root_value(k, u + v);
            top = std::max(top, B[t][size_t(k)]);
        }
        // slopes equal up to rounding are the same slope
        for (auto& b : B[t])
            if (top - b <= kTieTol) b = top;
    }
    std::array<int, 4> prev{-1, -1, -1, -1};
    double R = 1 + scale;
    for (int iter = 0; iter < kMaxDoublings; ++iter, R *= 2) {
        std::array<int, 4> active;
        double constant = 0, slope = 0;
        for (size_t t = 0; t < 4; ++t) {
            int best = 0;
            for (int k = 1; k < 3; ++k) {
                double vk = A[t][size_t(k)] + R * B[t][size_t(k)], vb = A[t][size_t(best)] + R * B[t][size_t(best)];
                if (vk > vb) best = k;
            }
            active[t] = best;
            constant += terms[t].sign * A[t][size_t(best)];
            slope += terms[t].sign * B[t][size_t(best)];
        }
        if (active == prev && std::fabs(slope) <= kTieTol) return constant;
        prev = active;
    }
    throw DegenerateConfigurationError("cross distances did not stabilize");
}

Complex descending_direction(int missing) { return -std::conj(cube_root(missing)); }

RayConfiguration corridor(double L) {
    Complex d(-1, 0);
    Ray r0{Complex(0, 0), d}, r1{Complex(0, L), d};
    return {r0, r1, r1, r0};
}

double corridor_cross_ratio(double L) { return cross_ratio_from_pairings(corridor(L)); }

RayConfiguration random_configuration(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> pos(-3, 3), turn(-0.9, 0.9);
    const int shared = int(rng() % 3);
    auto ray = [&]() {
        Ray r{Complex(pos(rng), pos(rng)), {}};
        if (rng() % 2) {
            // tie between `shared` and one other root
            int other = (shared + 1 + int(rng() % 2)) % 3;
            r.dir = descending_direction(3 - shared - other);
        } else {
            r.dir = std::conj(cube_root(shared)) * std::polar(1.0, turn(rng));
        }
        r.dir /= finsler_norm(r.dir);
        return r;
    };
    RayConfiguration c{ray(), ray(), ray(), ray()};
    return c;
}

}  // namespace currentlab
