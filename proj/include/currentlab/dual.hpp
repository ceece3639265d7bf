#pragma once

#include <currentlab/holonomy.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace currentlab {

// Partition of the support into bitmasks over chord indices.
struct Face {
    std::uint64_t L = 0, F = 0, U = 0;
    friend bool operator==(const Face& a, const Face& b) { return a.L == b.L && a.F == b.F; }
};

struct DualComplex {
    CurrentPtr mu;
    Rational T;
    std::vector<Face> faces;
    std::vector<int> dims;
    std::vector<bool> maximal;
    // Indices into `faces` of the dimension-0 faces, and their exact coordinates.
    std::vector<size_t> vertex_faces;
    std::vector<LowerSubmeasure> vertices;
    // Pairs of vertex indices joined by a dimension-1 face.
    std::vector<std::pair<size_t, size_t>> edges;
    int dimension = 0;
    std::map<std::pair<std::uint64_t, std::uint64_t>, size_t> lookup;

    std::optional<size_t> find(const Face& f) const;
};

// Support-size limit for full enumeration; CURRENTLAB_BUDGET overrides 24.
size_t enumeration_budget();

DualComplex enumerate_complex(const HolonomyContext& ctx, size_t budget);
DualComplex enumerate_complex(const HolonomyContext& ctx);

// Faces obtained by moving one F-chord to L or to U.
std::vector<size_t> facets(const DualComplex& cx, size_t face);
// Vertex indices lying in the closure of a face.
std::vector<size_t> face_vertices(const DualComplex& cx, size_t face);
bool face_contains_point(const Face& f, const LowerSubmeasure& nu);

struct DimensionSample {
    int dimension_lower_bound = 0;
    size_t samples = 0;
};
// Random down-set search; a lower bound on the dimension without full enumeration.
DimensionSample sample_dimension(const HolonomyContext& ctx, size_t samples, unsigned seed);

Rational metric_d(const LowerSubmeasure& nu1, const LowerSubmeasure& nu2);
// Also checks that both points are holonomy zero for ctx.
Rational metric_d(const HolonomyContext& ctx, const LowerSubmeasure& nu1, const LowerSubmeasure& nu2);

Rational rank2_distance(const LowerSubmeasure& nu1, const LowerSubmeasure& nu2);
LowerSubmeasure median(const LowerSubmeasure& nu1, const LowerSubmeasure& nu2, const LowerSubmeasure& nu3);

struct SymmetricFace {
    size_t face;
    // Chord index pairs (c, reverse of c) in F; each carries nu(c) + nu(rev c) = w(c).
    std::vector<std::pair<size_t, size_t>> pairs;
    int dim;
};

std::vector<SymmetricFace> symmetric_members(const DualComplex& cx);

struct LPoint {
    LowerSubmeasure nu;
    Rational offset;
};

Rational relative_distance(const LPoint& a, const LPoint& b);

bool shared_point_bound_check(const DualComplex& cx, int n);

}  // namespace currentlab
