#pragma once

#include <currentlab/cyclic.hpp>
#include <currentlab/rational.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace currentlab {

// Finite weighted set of oriented chords. Chords are kept sorted; duplicate
// entries are merged by adding weights.
class DiscreteCurrent {
public:
    DiscreteCurrent() = default;
    explicit DiscreteCurrent(const std::vector<std::pair<Chord, Rational>>& entries);

    size_t size() const { return chords_.size(); }
    bool empty() const { return chords_.empty(); }
    const Chord& chord(size_t i) const { return chords_[i]; }
    const Rational& weight(size_t i) const { return weights_[i]; }
    const std::vector<Chord>& chords() const { return chords_; }
    const std::vector<Rational>& weights() const { return weights_; }

    std::optional<size_t> index_of(const Chord& c) const;
    Rational weight_of(const Chord& c) const;
    Rational total_mass() const;
    // Distinct chord endpoints, sorted by angle.
    std::vector<BoundaryPoint> endpoints() const;
    bool has_endpoint(const BoundaryPoint& p) const;

    friend bool operator==(const DiscreteCurrent& a, const DiscreteCurrent& b) {
        return a.chords_ == b.chords_ && a.weights_ == b.weights_;
    }
    friend bool operator!=(const DiscreteCurrent& a, const DiscreteCurrent& b) { return !(a == b); }

private:
    std::vector<Chord> chords_;
    std::vector<Rational> weights_;
};

// Finitely supported signed measure; zero entries are dropped.
class SignedChordMeasure {
public:
    SignedChordMeasure() = default;
    explicit SignedChordMeasure(const std::vector<std::pair<Chord, Rational>>& entries);

    const std::vector<std::pair<Chord, Rational>>& entries() const { return entries_; }
    Rational total() const;
    Rational positive_mass() const;

private:
    std::vector<std::pair<Chord, Rational>> entries_;
};

Rational box_measure(const DiscreteCurrent& mu, const Box& r);

Rational crossing_pairing(const DiscreteCurrent& mu1, const DiscreteCurrent& mu2, bool signed_pairing);

bool is_symmetric(const DiscreteCurrent& mu);

// Symmetric and without crossing pairs.
bool is_lamination(const DiscreteCurrent& mu);

// Midpoint of every open arc between consecutive endpoints, sorted by angle.
std::vector<BoundaryPoint> sample_gaps(const DiscreteCurrent& mu);

// Throws GenericPositionError if p is an endpoint of a chord of mu.
void require_generic(const DiscreteCurrent& mu, const BoundaryPoint& p);

}  // namespace currentlab
