#include "gtc/exponents.hpp"

#include <algorithm>
#include <string>

#include "gtc/field.hpp"

namespace gtc {

namespace {

void check_grid(const Grid& g) {
    if (g.q < 3 || !is_prime_power(g.q))
        throw NotPrimePower("q = " + std::to_string(g.q) + " is not a prime power >= 3");
    if (g.r < 1 || g.r > 8)
        throw DimensionTooLarge("r = " + std::to_string(g.r) + " outside the supported range 1..8");
}

}  // namespace

long long grid_size(const Grid& g, long long cap) {
    long long n = 1;
    for (int i = 0; i < g.r; ++i) {
        n *= g.period();
        if (n > cap) return -1;
    }
    return n;
}

Point reduce(const Grid& g, const Point& v) {
    const int per = g.period();
    Point out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = (v[i] % per + per) % per;
    return out;
}

Point sigma(const Grid& g, const Point& u) {
    const int per = g.period();
    Point out(u.size());
    for (size_t i = 0; i < u.size(); ++i) out[i] = (per - u[i]) % per;
    return out;
}

bool in_grid(const Grid& g, const Point& u) {
    if (static_cast<int>(u.size()) != g.r) return false;
    for (int x : u)
        if (x < 0 || x > g.period() - 1) return false;
    return true;
}

long long linear_index(const Grid& g, const Point& u) {
    long long idx = 0;
    for (int i = 0; i < g.r; ++i) idx = idx * g.period() + u[i];
    return idx;
}

Point point_at(const Grid& g, long long index) {
    Point u(g.r);
    for (int i = g.r - 1; i >= 0; --i) {
        u[i] = static_cast<int>(index % g.period());
        index /= g.period();
    }
    return u;
}

OrderedH enumerate_H(int q, int r, long long max_points) {
    Grid g{q, r};
    check_grid(g);
    const long long n = grid_size(g, max_points);
    if (n < 0)
        throw DimensionTooLarge("(q-1)^r exceeds the size budget of " + std::to_string(max_points) +
                                " points");

    OrderedH H;
    H.grid = g;
    H.points.reserve(n);
    H.pos.assign(n, -1);

    // Fixed points of sigma first, in lexicographic order.
    for (long long idx = 0; idx < n; ++idx) {
        Point u = point_at(g, idx);
        if (sigma(g, u) == u) {
            H.pos[idx] = static_cast<int>(H.points.size());
            H.points.push_back(std::move(u));
        }
    }
    // Then a lexicographic scan pairing each new u with sigma(u).
    for (long long idx = 0; idx < n; ++idx) {
        if (H.pos[idx] >= 0) continue;
        Point u = point_at(g, idx);
        Point v = sigma(g, u);
        H.pos[idx] = static_cast<int>(H.points.size());
        H.points.push_back(std::move(u));
        H.pos[linear_index(g, v)] = static_cast<int>(H.points.size());
        H.points.push_back(std::move(v));
    }
    return H;
}

bool ExponentSet::contains(const Point& u) const {
    return std::binary_search(members.begin(), members.end(), u);
}

ExponentSet make_set(const Grid& g, std::vector<Point> pts) {
    check_grid(g);
    for (const Point& u : pts)
        if (!in_grid(g, u))
            throw ContextMismatch("exponent vector outside H for q = " + std::to_string(g.q) +
                                  ", r = " + std::to_string(g.r));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return ExponentSet{g, std::move(pts)};
}

ExponentSet reduce_set(const std::vector<Point>& raw, const Grid& g) {
    check_grid(g);
    std::vector<Point> reduced;
    reduced.reserve(raw.size());
    for (const Point& v : raw) {
        if (static_cast<int>(v.size()) != g.r)
            throw ContextMismatch("point arity does not match r = " + std::to_string(g.r));
        reduced.push_back(reduce(g, v));
    }
    return make_set(g, std::move(reduced));
}

ExponentSet dual_set(const ExponentSet& U) {
    const Grid& g = U.grid;
    std::vector<Point> image;
    image.reserve(U.members.size());
    for (const Point& u : U.members) image.push_back(sigma(g, u));
    std::sort(image.begin(), image.end());

    const long long n = grid_size(g, kDefaultMaxPoints);
    if (n < 0) throw DimensionTooLarge("H too large to complement");
    std::vector<Point> out;
    out.reserve(n - static_cast<long long>(image.size()));
    for (long long idx = 0; idx < n; ++idx) {
        Point u = point_at(g, idx);
        if (!std::binary_search(image.begin(), image.end(), u)) out.push_back(std::move(u));
    }
    return ExponentSet{g, std::move(out)};
}

long long sigma_fixed_count(int q, int r) {
    Grid g{q, r};
    check_grid(g);
    const long long n = grid_size(g, kDefaultMaxPoints);
    if (n < 0) throw DimensionTooLarge("H too large to enumerate");
    long long count = 0;
    for (long long idx = 0; idx < n; ++idx) {
        Point u = point_at(g, idx);
        if (sigma(g, u) == u) ++count;
    }
    return count;
}

std::vector<Point> lattice_points(const Polytope& P, long long max_points) {
    if (P.r < 1) throw DimensionTooLarge("polytope dimension must be >= 1");
    if (static_cast<int>(P.bounds.size()) != P.r)
        throw LengthMismatch("polytope needs one bound interval per axis");
    long long box = 1;
    for (const auto& [lo, hi] : P.bounds) {
        if (lo > hi) throw LengthMismatch("empty bound interval lo > hi");
        box *= hi - lo + 1;
        if (box > max_points)
            throw DimensionTooLarge("bounding box exceeds the size budget of " +
                                    std::to_string(max_points) + " points");
    }
    for (const auto& iq : P.ineqs)
        if (static_cast<int>(iq.a.size()) != P.r)
            throw LengthMismatch("inequality arity does not match the polytope dimension");

    std::vector<Point> out;
    Point x(P.r);
    for (int i = 0; i < P.r; ++i) x[i] = static_cast<int>(P.bounds[i].first);
    for (;;) {
        bool ok = true;
        for (const auto& iq : P.ineqs) {
            long long dot = 0;
            for (int i = 0; i < P.r; ++i) dot += iq.a[i] * x[i];
            if (dot > iq.b) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(x);
        int i = P.r - 1;
        while (i >= 0 && x[i] == static_cast<int>(P.bounds[i].second)) {
            x[i] = static_cast<int>(P.bounds[i].first);
            --i;
        }
        if (i < 0) break;
        ++x[i];
    }
    return out;
}

}  // namespace gtc
