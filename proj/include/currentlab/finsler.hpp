#pragma once

#include <complex>
#include <random>
#include <vector>

namespace currentlab {

using Complex = std::complex<double>;

// Cube root of unity omega^k.
Complex cube_root(int k);

// max over cube roots zeta of 2 Re(zeta v).
double finsler_norm(const Complex& v);
double distance(const Complex& p, const Complex& q);
// Indices k with 2 Re(omega^k v) within 1e-12 of the norm.
std::vector<int> maximizing_roots(const Complex& v);

using Polyline = std::vector<Complex>;

void validate_polyline(const Polyline& path);
double finsler_length(const Polyline& path);
bool is_geodesic(const Polyline& path);

enum class HoroSign { Plus, Minus };

struct AffineForm {
    int root;  // zeta = omega^root
    double offset;
};

// Minus: x -> max 2 Re(zeta x) + offset. Plus: x -> max -2 Re(zeta x) + offset.
struct Horofunction {
    HoroSign sign;
    std::vector<AffineForm> forms;

    double operator()(const Complex& x) const;
    Horofunction shifted(double r) const;
};

// Plus: lim d(x, base + t dir) - t. Minus: lim d(base - t dir, x) - t.
// dir is rescaled to unit Finsler speed.
Horofunction busemann(const Complex& base, const Complex& dir, HoroSign sign);
bool same_horofunction(const Horofunction& a, const Horofunction& b, double tol = 1e-12);

// inf over the plane of g + h; -infinity when unbounded below.
double pairing(const Horofunction& g, const Horofunction& h);
double cross_ratio_b(const Horofunction& g1, const Horofunction& g2, const Horofunction& h1,
                     const Horofunction& h2);

struct Ray {
    Complex base, dir;
};

// g rays end at minus horofunctions (their backward ends), h rays at plus ones.
struct RayConfiguration {
    Ray g1, g2, h1, h2;
};

double cross_ratio_from_pairings(const RayConfiguration& c);
// d(x1,y1) + d(x2,y2) - d(x1,y2) - d(x2,y1) with x = base - R dir on the g
// rays and y = base + R dir on the h rays, R doubled until the active linear
// pieces stop changing.
double cross_ratio_from_distances(const RayConfiguration& c);

// Unit-speed direction along which roots other than `missing` tie.
Complex descending_direction(int missing);
// Two horizontal descending trajectories through 0 and i L, direction -1;
// b(g1, g2; h2, h1) = 2 sqrt(3) L.
RayConfiguration corridor(double L);
double corridor_cross_ratio(double L);

// Four rays whose maximizing-root sets all meet, so every pairing is finite.
RayConfiguration random_configuration(std::mt19937_64& rng);

}  // namespace currentlab
