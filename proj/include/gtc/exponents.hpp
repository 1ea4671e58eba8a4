#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "gtc/errors.hpp"

namespace gtc {

// A point of the exponent grid H = {0..q-2}^r (or an arbitrary integer vector
// before reduction).  Coordinate 0 is the most significant one in the
// lexicographic order used throughout.
using Point = std::vector<int>;

// The (q, r) context shared by exponent vectors, codewords and matrices.
struct Grid {
    int q = 0;
    int r = 0;

    int period() const { return q - 1; }

    bool operator==(const Grid&) const = default;
};

inline constexpr long long kDefaultMaxPoints = 1ll << 20;

// (q-1)^r, or -1 if it exceeds `cap`.
long long grid_size(const Grid& g, long long cap = kDefaultMaxPoints);

// Componentwise v mod (q-1) into H; negatives allowed, idempotent on H.
Point reduce(const Grid& g, const Point& v);

// The involution u -> (-u) mod (q-1) componentwise.
Point sigma(const Grid& g, const Point& u);

bool in_grid(const Grid& g, const Point& u);

// Rank of u in the lexicographic enumeration of H.
long long linear_index(const Grid& g, const Point& u);
Point point_at(const Grid& g, long long index);

// H listed in the canonical sigma-paired order: all fixed points of sigma
// first, lexicographically; then a lexicographic scan of the rest where each
// yet-unplaced u is emitted immediately followed by sigma(u).  With this
// ordering the matrix of sigma is the identity on the leading block and 2x2
// swap blocks on the pairs.
struct OrderedH {
    Grid grid;
    std::vector<Point> points;
    std::vector<int> pos;  // linear index -> position in `points`

    long long n() const { return static_cast<long long>(points.size()); }

    int position_of(const Point& u) const { return pos[linear_index(grid, u)]; }
};

OrderedH enumerate_H(int q, int r, long long max_points = kDefaultMaxPoints);

// A deduplicated subset of H, members kept in lexicographic order.
struct ExponentSet {
    Grid grid;
    std::vector<Point> members;

    long long size() const { return static_cast<long long>(members.size()); }
    bool contains(const Point& u) const;

    bool operator==(const ExponentSet&) const = default;
};

// Sorts, deduplicates and validates membership in H.
ExponentSet make_set(const Grid& g, std::vector<Point> pts);

// Reduction of an arbitrary integer point list into H, duplicates collapsed.
ExponentSet reduce_set(const std::vector<Point>& raw, const Grid& g);

// H \ sigma(U): the exponent set of the dual code.
ExponentSet dual_set(const ExponentSet& U);

// Number of u in H with sigma(u) = u, by enumeration.
long long sigma_fixed_count(int q, int r);

// Convex polytope given as a system a.x <= b plus a finite bounding box used
// for enumeration.  Vertex descriptions are not needed anywhere.
struct Polytope {
    struct Ineq {
        std::vector<long long> a;
        long long b = 0;
    };

    int r = 0;
    std::vector<Ineq> ineqs;
    std::vector<std::pair<long long, long long>> bounds;  // [lo, hi] per axis
};

// All integer points of the bounding box satisfying every inequality, in
// lexicographic order.  An empty result is fine.
std::vector<Point> lattice_points(const Polytope& P, long long max_points = kDefaultMaxPoints);

}  // namespace gtc
