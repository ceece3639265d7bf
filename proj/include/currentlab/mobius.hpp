#pragma once

#include "current.hpp"

#include <array>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace currentlab {

// Point of the real projective line.
struct ProjectivePoint {
    double x = 0;
    bool infinite = false;

    static ProjectivePoint at(double v) { return {v, false}; }
    static ProjectivePoint inf() { return {0, true}; }
    bool operator==(const ProjectivePoint& o) const { return infinite ? o.infinite : (!o.infinite && x == o.x); }
};

std::string to_string(const ProjectivePoint& p);

// z -> (a z + b) / (c z + d) with a d - b c = 1.
class MobiusMap {
public:
    MobiusMap() = default;
    // Rescales to determinant 1; throws ValidationError when det <= 0.
    MobiusMap(double a, double b, double c, double d);

    double a() const { return m_[0]; }
    double b() const { return m_[1]; }
    double c() const { return m_[2]; }
    double d() const { return m_[3]; }
    double trace() const { return m_[0] + m_[3]; }
    bool hyperbolic() const;

    MobiusMap operator*(const MobiusMap& o) const;
    MobiusMap inverse() const;
    ProjectivePoint operator()(const ProjectivePoint& p) const;

    static MobiusMap diagonal(double lambda) { return MobiusMap(lambda, 0, 0, 1 / lambda); }
    static MobiusMap rotation(double theta);

private:
    std::array<double, 4> m_{1, 0, 0, 1};
};

struct FixedPoints {
    ProjectivePoint attracting, repelling;
};

FixedPoints fixed_points(const MobiusMap& g);
double period(const MobiusMap& g);
double log_cross_ratio(const ProjectivePoint& x1, const ProjectivePoint& x2, const ProjectivePoint& y1,
                       const ProjectivePoint& y2);

struct Interval {
    double lo, hi;
};

// Relative position of the two axes.
enum class AxisConfiguration { Crossing, DisjointCoherent, DisjointOpposed };

struct SchottkyPair {
    MobiusMap a, b;
    // Isometric-circle traces of a, a^-1, b, b^-1 on the real line, pairwise
    // disjoint.
    std::array<Interval, 4> certificate;
    AxisConfiguration configuration;

    // Throws NotHyperbolicError or ValidationError when the certificate fails.
    static SchottkyPair make(const MobiusMap& a, const MobiusMap& b);
};

// Random pair with four disjoint isometric intervals in [-5, 5].
SchottkyPair random_schottky_pair(std::mt19937_64& rng);
MobiusMap random_hyperbolic(std::mt19937_64& rng);

struct IdentityCheck {
    double lhs, rhs;
    bool agrees(double rel_tol) const;
};

IdentityCheck verify_abc(const MobiusMap& a, const MobiusMap& b);
IdentityCheck verify_abc(const SchottkyPair& pair);
// l(g) + l(g^-1) against h(x, g x; g+, g-).
IdentityCheck hilbert_length_check(const MobiusMap& g, const ProjectivePoint& x);

struct VeroneseReport {
    double max_abs_top_minor;  // |det| over (n+1)x(n+1) minors
    double min_abs_minor;      // over n x n minors
    double max_rel_top_minor;  // divided by the Hadamard bound of the minor
    double min_rel_minor;
};

double veronese_potential(int n, double x, double y);
VeroneseReport veronese_rank_check(int n, const std::vector<double>& xs, const std::vector<double>& ys);
// n+1 points per side in [-1, 1], alternating xs and ys, neighbors at least
// 0.3/(n+1) apart.
std::pair<std::vector<double>, std::vector<double>> random_veronese_tuple(std::mt19937_64& rng, int n);

// Unit-weight axes (repelling -> attracting) of every primitive cyclically
// reduced word of length 1..word_length in a, b and their inverses.
// Endpoints map to angle atan(x)/pi + 1/2 (infinity to 0), rounded to
// multiples of 2^-32.
DiscreteCurrent export_delta_current(const SchottkyPair& pair, int word_length);
BoundaryPoint to_boundary(const ProjectivePoint& p);

}  // namespace currentlab
