#pragma once

#include <currentlab/dual.hpp>
#include <currentlab/finsler.hpp>
#include <currentlab/io.hpp>

#include <string>
#include <vector>

namespace currentlab {

// Seeded spring layout of the complex's 1-skeleton; edge rest lengths are
// the metric lengths. Coordinates lie in [0,1]^2.
std::vector<Complex> layout_skeleton(const DualComplex& cx, unsigned seed);

// Chord diagram (circle, oriented chords with weight labels) and, when given,
// the complex's 1-skeleton in a second panel. Same inputs give the same bytes.
std::string render_current_svg(const NamedCurrent& mu, const DualComplex* cx = nullptr, unsigned seed = 0);

// Unit ball of the triangular norm, ray trajectories and an optional path.
std::string render_finsler_svg(const std::vector<Ray>& rays, const Polyline* path = nullptr);

}  // namespace currentlab
