#pragma once

#include <currentlab/holonomy.hpp>

#include <optional>
#include <vector>

namespace currentlab {

// nullopt stands for -infinity.
using TropicalEntry = std::optional<Rational>;
using TropicalMatrix = std::vector<std::vector<TropicalEntry>>;

struct TropicalDet {
    TropicalEntry value;
    bool unique_argmax = false;
    // One maximizing permutation, plus a second one when the maximum is shared.
    std::vector<std::vector<size_t>> argmax;
};

TropicalDet tropical_det(const TropicalMatrix& m);
// Both backends, exposed for cross-checking.
TropicalDet tropical_det_exhaustive(const TropicalMatrix& m);
TropicalDet tropical_det_assignment(const TropicalMatrix& m);

// n chords with x1 < ... < xn < y1 < ... < yn, if any.
std::optional<std::vector<Chord>> forbidden_scan(const DiscreteCurrent& mu, int n);

struct RankWitness {
    std::vector<BoundaryPoint> xs, ys;
    std::vector<size_t> permutation;
    Rational value;
};

struct RankReport {
    bool certified = true;
    bool vacuous = false;
    std::optional<RankWitness> witness;
    unsigned long long tuples_checked = 0;
};

struct CertifyOptions {
    unsigned threads = 1;
    // With several threads, report the lexicographically first violation.
    bool deterministic = true;
};

// Potential on gap representatives, -infinity when row gap equals column gap.
TropicalMatrix gap_potential_matrix(const HolonomyContext& ctx);

RankReport certify_tropical_rank(const HolonomyContext& ctx, int n, const CertifyOptions& opts = {});

}  // namespace currentlab
