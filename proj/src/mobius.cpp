#include "currentlab/mobius.hpp"

#include "currentlab/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>

namespace currentlab {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTraceSlack = 1e-12;

void require_hyperbolic(const MobiusMap& g) {
    if (!g.hyperbolic())
        throw NotHyperbolicError("map with trace " + std::to_string(g.trace()) + " is not hyperbolic");
}

double angle_of(const ProjectivePoint& p) { return p.infinite ? 0.0 : std::atan(p.x) / kPi + 0.5; }

}  // namespace

std::string to_string(const ProjectivePoint& p) {
    if (p.infinite) return "inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", p.x);
    return buf;
}

MobiusMap::MobiusMap(double a, double b, double c, double d) {
    double det = a * d - b * c;
    if (!(det > 0) || !std::isfinite(det)) throw ValidationError("Mobius matrix needs positive finite determinant");
    double s = std::sqrt(det);
    m_ = {a / s, b / s, c / s, d / s};
}

bool MobiusMap::hyperbolic() const { return std::fabs(trace()) > 2 + kTraceSlack; }

MobiusMap MobiusMap::operator*(const MobiusMap& o) const {
    MobiusMap r;
    r.m_ = {a() * o.a() + b() * o.c(), a() * o.b() + b() * o.d(), c() * o.a() + d() * o.c(),
            c() * o.b() + d() * o.d()};
    return r;
}

MobiusMap MobiusMap::inverse() const {
    MobiusMap r;
    r.m_ = {d(), -b(), -c(), a()};
    return r;
}

ProjectivePoint MobiusMap::operator()(const ProjectivePoint& p) const {
    if (p.infinite) return c() == 0 ? ProjectivePoint::inf() : ProjectivePoint::at(a() / c());
    double den = c() * p.x + d();
    if (den == 0) return ProjectivePoint::inf();
    return ProjectivePoint::at((a() * p.x + b()) / den);
}

MobiusMap MobiusMap::rotation(double theta) {
    return MobiusMap(std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta));
}

FixedPoints fixed_points(const MobiusMap& g) {
    require_hyperbolic(g);
    double t = g.trace();
    double l1 = (t + std::copysign(std::sqrt(t * t - 4), t)) / 2;
    auto eigen_point = [&](double l) {
        double u1 = g.b(), v1 = l - g.a(), u2 = l - g.d(), v2 = g.c();
        bool first = std::hypot(u1, v1) >= std::hypot(u2, v2);
        double u = first ? u1 : u2, v = first ? v1 : v2;
        return v == 0 ? ProjectivePoint::inf() : ProjectivePoint::at(u / v);
    };
    return {eigen_point(l1), eigen_point(1 / l1)};
}

double period(const MobiusMap& g) {
    require_hyperbolic(g);
    double t = std::fabs(g.trace());
    return std::log((t + std::sqrt(t * t - 4)) / 2);
}

double log_cross_ratio(const ProjectivePoint& x1, const ProjectivePoint& x2, const ProjectivePoint& y1,
                       const ProjectivePoint& y2) {
    for (const auto* x : {&x1, &x2})
        for (const auto* y : {&y1, &y2})
            if (*x == *y) throw DiagonalError("cross ratio point " + to_string(*x) + " on the diagonal");
    // factors containing infinity cancel in pairs
    auto term = [](const ProjectivePoint& u, const ProjectivePoint& v) {
        return u.infinite || v.infinite ? 0.0 : std::log(std::fabs(u.x - v.x));
    };
    return term(x1, y1) + term(x2, y2) - term(x1, y2) - term(x2, y1);
}

SchottkyPair SchottkyPair::make(const MobiusMap& a, const MobiusMap& b) {
    require_hyperbolic(a);
    require_hyperbolic(b);
    SchottkyPair p{a, b, {}, AxisConfiguration::Crossing};
    size_t slot = 0;
    for (const auto* g : {&a, &b}) {
        if (g->c() == 0) throw ValidationError("isometric circle undefined for c = 0");
        double r = 1 / std::fabs(g->c());
        for (double center : {-g->d() / g->c(), g->a() / g->c()}) p.certificate[slot++] = {center - r, center + r};
    }
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j) {
            const auto &u = p.certificate[i], &v = p.certificate[j];
            if (!(u.hi < v.lo || v.hi < u.lo)) throw ValidationError("isometric intervals overlap");
        }
    auto fa = fixed_points(a), fb = fixed_points(b);
    double am = angle_of(fa.repelling), ap = angle_of(fa.attracting);
    auto in_arc = [&](double t) {
        double len = std::fmod(ap - am + 1, 1.0), off = std::fmod(t - am + 1, 1.0);
        return off < len;
    };
    double bm = angle_of(fb.repelling), bp = angle_of(fb.attracting);
    if (in_arc(bm) != in_arc(bp)) {
        p.configuration = AxisConfiguration::Crossing;
    } else {
        // cyclic order a-, a+, b-, b+ from a-
        auto off = [&](double t) { return std::fmod(t - am + 1, 1.0); };
        bool ordered = off(ap) < off(bm) && off(bm) < off(bp);
        p.configuration = ordered ? AxisConfiguration::DisjointCoherent : AxisConfiguration::DisjointOpposed;
    }
    return p;
}

MobiusMap random_hyperbolic(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> ang(0, 2 * kPi), len(0.2, 3.0), stretch(-1.0, 1.0);
    MobiusMap h = MobiusMap::rotation(ang(rng)) * MobiusMap::diagonal(std::exp(stretch(rng))) *
                  MobiusMap::rotation(ang(rng));
    MobiusMap g = h * MobiusMap::diagonal(std::exp(len(rng) / 2)) * h.inverse();
    if (rng() % 2) g = g * MobiusMap(-1, 0, 0, -1);
    return g;
}

SchottkyPair random_schottky_pair(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> pos(-5, 5), shrink(0.2, 0.45);
    for (;;) {
        std::array<double, 4> c;
        for (auto& v : c) v = pos(rng);
        std::sort(c.begin(), c.end());
        double gap = std::min({c[1] - c[0], c[2] - c[1], c[3] - c[2]});
        if (gap < 0.5) continue;
        std::shuffle(c.begin(), c.end(), rng);
        auto build = [&](double p, double q) {
            double r = shrink(rng) * gap, s = rng() % 2 ? 1.0 : -1.0;
            double gc = s / r, d = -p * gc, a = q * gc;
            return MobiusMap(a, (a * d - 1) / gc, gc, d);
        };
        MobiusMap a = build(c[0], c[1]), b = build(c[2], c[3]);
        return SchottkyPair::make(a, b);
    }
}

bool IdentityCheck::agrees(double rel_tol) const { return std::fabs(lhs - rhs) <= rel_tol * (1 + std::fabs(lhs)); }

IdentityCheck verify_abc(const MobiusMap& a, const MobiusMap& b) {
    MobiusMap ba = b * a;
    auto fa = fixed_points(a), fb = fixed_points(b), fba = fixed_points(ba);
    IdentityCheck out;
    out.lhs = period(a) + period(b) - period(ba);
    out.rhs = log_cross_ratio(fba.repelling, fb.repelling, fa.attracting, b(fa.attracting));
    return out;
}

IdentityCheck verify_abc(const SchottkyPair& pair) { return verify_abc(pair.a, pair.b); }

IdentityCheck hilbert_length_check(const MobiusMap& g, const ProjectivePoint& x) {
    auto f = fixed_points(g);
    IdentityCheck out;
    out.lhs = period(g) + period(g.inverse());
    out.rhs = log_cross_ratio(x, g(x), f.attracting, f.repelling);
    return out;
}

double veronese_potential(int n, double x, double y) { return std::pow(x - y, n - 1); }

VeroneseReport veronese_rank_check(int n, const std::vector<double>& xs, const std::vector<double>& ys) {
    if (n < 2 || n > 8) throw ContractError("Veronese check needs 2 <= n <= 8");
    if (xs.size() != size_t(n + 1) || ys.size() != size_t(n + 1)) throw ContractError("need n+1 points per side");
    for (const auto* v : {&xs, &ys}) {
        auto s = *v;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw ContractError("repeated coordinate");
    }
    const int m = n + 1;
    Eigen::MatrixXd M(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) M(i, j) = veronese_potential(n, xs[i], ys[j]);
    auto hadamard = [](const Eigen::MatrixXd& A) {
        double h = 1;
        for (int i = 0; i < A.rows(); ++i) h *= A.row(i).norm();
        return h;
    };
    VeroneseReport r;
    r.max_abs_top_minor = std::fabs(M.fullPivLu().determinant());
    double h = hadamard(M);
    r.max_rel_top_minor = h > 0 ? r.max_abs_top_minor / h : 0;
    r.min_abs_minor = std::numeric_limits<double>::infinity();
    r.min_rel_minor = std::numeric_limits<double>::infinity();
    for (int di = 0; di < m; ++di)
        for (int dj = 0; dj < m; ++dj) {
            Eigen::MatrixXd S(n, n);
            for (int i = 0, si = 0; i < m; ++i) {
                if (i == di) continue;
                for (int j = 0, sj = 0; j < m; ++j)
                    if (j != dj) S(si, sj++) = M(i, j);
                ++si;
            }
            double det = std::fabs(S.fullPivLu().determinant()), hs = hadamard(S);
            r.min_abs_minor = std::min(r.min_abs_minor, det);
            r.min_rel_minor = std::min(r.min_rel_minor, hs > 0 ? det / hs : 0.0);
        }
    return r;
}

std::pair<std::vector<double>, std::vector<double>> random_veronese_tuple(std::mt19937_64& rng, int n) {
    if (n < 2 || n > 8) throw ContractError("Veronese check needs 2 <= n <= 8");
    std::uniform_real_distribution<double> u(-1, 1);
    const double sep = 0.3 / (n + 1);
    std::vector<double> pts(size_t(2 * n + 2));
    for (;;) {
        for (auto& p : pts) p = u(rng);
        std::sort(pts.begin(), pts.end());
        bool ok = true;
        for (size_t i = 0; i + 1 < pts.size(); ++i) ok = ok && pts[i + 1] - pts[i] >= sep;
        if (ok) break;
    }
    std::pair<std::vector<double>, std::vector<double>> out;
    for (size_t i = 0; i < pts.size(); ++i) (i % 2 ? out.second : out.first).push_back(pts[i]);
    return out;
}

BoundaryPoint to_boundary(const ProjectivePoint& p) {
    constexpr long kScale = 1L << 32;
    long k = std::lround(angle_of(p) * double(kScale));
    if (k >= kScale) k -= kScale;
    return BoundaryPoint(Rational(k, kScale));
}

namespace {

using Word = std::vector<int>;  // 0 a, 1 a^-1, 2 b, 3 b^-1

int inv(int l) { return l ^ 1; }

Word inverse_word(const Word& w) {
    Word r(w.rbegin(), w.rend());
    for (auto& l : r) l = inv(l);
    return r;
}

bool primitive(const Word& w) {
    const size_t n = w.size();
    for (size_t d = 1; d < n; ++d) {
        if (n % d) continue;
        bool power = true;
        for (size_t i = d; i < n && power; ++i) power = w[i] == w[i - d];
        if (power) return false;
    }
    return true;
}

void words_of_length(size_t n, Word& cur, std::vector<Word>& out) {
    if (cur.size() == n) {
        if (inv(cur.back()) != cur.front() && (n == 1 || primitive(cur))) out.push_back(cur);
        return;
    }
    for (int l = 0; l < 4; ++l) {
        if (!cur.empty() && l == inv(cur.back())) continue;
        cur.push_back(l);
        words_of_length(n, cur, out);
        cur.pop_back();
    }
}

}  // namespace

DiscreteCurrent export_delta_current(const SchottkyPair& pair, int word_length) {
    if (word_length < 0 || word_length > 8) throw ContractError("word length must be in [0, 8]");
    const std::array<MobiusMap, 4> letters{pair.a, pair.a.inverse(), pair.b, pair.b.inverse()};
    std::map<Word, FixedPoints> fps;
    std::vector<std::pair<Chord, Rational>> chords;
    // rounded angle -> (canonical word, attracting?) of the point it came from
    std::map<BoundaryPoint, std::pair<Word, bool>> owner;
    auto claim = [&](const BoundaryPoint& p, const Word& canon, bool attracting) {
        auto [it, fresh] = owner.try_emplace(p, canon, attracting);
        if (!fresh && it->second != std::make_pair(canon, attracting))
            throw RoundingCollisionError("distinct fixed points round to " + to_string(p));
    };
    for (int n = 1; n <= word_length; ++n) {
        std::vector<Word> words;
        Word cur;
        words_of_length(size_t(n), cur, words);
        for (const auto& w : words) {
            Word wi = inverse_word(w);
            const bool canonical = w <= wi;
            const Word& canon = canonical ? w : wi;
            auto it = fps.find(canon);
            if (it == fps.end()) {
                MobiusMap g;
                for (int l : canon) g = g * letters[size_t(l)];
                it = fps.emplace(canon, fixed_points(g)).first;
            }
            // the inverse swaps attracting and repelling
            FixedPoints f = canonical ? it->second : FixedPoints{it->second.repelling, it->second.attracting};
            BoundaryPoint src = to_boundary(f.repelling), dst = to_boundary(f.attracting);
            claim(src, canon, !canonical);
            claim(dst, canon, canonical);
            chords.emplace_back(Chord(src, dst), Rational(1));
        }
    }
    return DiscreteCurrent(chords);
}

}  // namespace currentlab
