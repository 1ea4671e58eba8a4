#include "gtc/codes.hpp"

#include <algorithm>
#include <string>

namespace gtc {

namespace {

long long dot(const Point& u, const Point& v) {
    long long s = 0;
    for (size_t i = 0; i < u.size(); ++i) s += static_cast<long long>(u[i]) * v[i];
    return s;
}

void check_context(const OrderedH& order, const Codeword& c) {
    if (c.grid != order.grid || static_cast<long long>(c.values.size()) != order.n())
        throw ContextMismatch("codeword does not belong to this (q, r) context");
}

// Positions of the members of U in the canonical order, ascending.
std::vector<int> member_positions(const OrderedH& order, const ExponentSet& U) {
    std::vector<int> pos;
    pos.reserve(U.members.size());
    for (const Point& u : U.members) pos.push_back(order.position_of(u));
    std::sort(pos.begin(), pos.end());
    return pos;
}

FqMatrix rows_for_set(const CodeSpec& spec, const ExponentSet& S) {
    const long long n = spec.n();
    FqMatrix G(static_cast<int>(S.size()), static_cast<int>(n));
    const std::vector<int> pos = member_positions(spec.order, S);
    for (size_t t = 0; t < pos.size(); ++t) {
        const Point& u = spec.order.points[pos[t]];
        for (long long l = 0; l < n; ++l)
            G.at(static_cast<int>(t), static_cast<int>(l)) =
                spec.field.exp(dot(u, spec.order.points[l]));
    }
    return G;
}

}  // namespace

CodeSpec make_code_spec(const Field& field, int r, ExponentSet U, long long max_points) {
    OrderedH order = enumerate_H(field.q(), r, max_points);
    if (U.grid != order.grid)
        throw ContextMismatch("exponent set context does not match (q, r)");
    return CodeSpec{field, std::move(order), std::move(U)};
}

Codeword zero_codeword(const OrderedH& order) {
    return Codeword{order.grid, std::vector<Elem>(order.n(), 0)};
}

bool is_zero(const Codeword& c) {
    return std::all_of(c.values.begin(), c.values.end(), [](Elem x) { return x == 0; });
}

int hamming_weight(const Codeword& c) {
    int w = 0;
    for (Elem x : c.values) w += x != 0;
    return w;
}

Codeword basis_codeword(const Field& F, const OrderedH& order, const Point& u) {
    Codeword c = zero_codeword(order);
    for (long long l = 0; l < order.n(); ++l) c.values[l] = F.exp(dot(u, order.points[l]));
    return c;
}

Codeword delta_codeword(const OrderedH& order, const Point& i) {
    Codeword c = zero_codeword(order);
    c.values[order.position_of(reduce(order.grid, i))] = 1;
    return c;
}

FqMatrix evaluation_matrix(const Field& F, int r, long long max_dim) {
    OrderedH order = enumerate_H(F.q(), r, max_dim);
    const long long n = order.n();
    FqMatrix M(static_cast<int>(n), static_cast<int>(n));
    for (long long j = 0; j < n; ++j)
        for (long long l = j; l < n; ++l) {
            const Elem e = F.exp(dot(order.points[j], order.points[l]));
            M.at(static_cast<int>(j), static_cast<int>(l)) = e;
            M.at(static_cast<int>(l), static_cast<int>(j)) = e;
        }
    return M;
}

FqMatrix sigma_permutation_matrix(const OrderedH& order) {
    const long long n = order.n();
    FqMatrix P(static_cast<int>(n), static_cast<int>(n));
    for (long long j = 0; j < n; ++j) {
        const int l = order.position_of(sigma(order.grid, order.points[j]));
        P.at(static_cast<int>(j), l) = 1;
    }
    return P;
}

FqMatrix generator_matrix(const CodeSpec& spec) {
    if (spec.U.members.empty()) throw EmptyU("generator matrix of an empty exponent set");
    return rows_for_set(spec, spec.U);
}

FqMatrix control_matrix(const CodeSpec& spec) {
    return rows_for_set(spec, dual_set(spec.U));
}

Codeword encode(const CodeSpec& spec, const std::vector<Elem>& message) {
    if (static_cast<long long>(message.size()) != spec.k())
        throw LengthMismatch("message length " + std::to_string(message.size()) +
                             " != k = " + std::to_string(spec.k()));
    const std::vector<int> pos = member_positions(spec.order, spec.U);
    Codeword c = zero_codeword(spec.order);
    for (long long j = 0; j < spec.n(); ++j) {
        Elem acc = 0;
        for (size_t t = 0; t < pos.size(); ++t) {
            const Point& u = spec.order.points[pos[t]];
            acc = spec.field.add(acc,
                                 spec.field.mul(message[t], spec.field.exp(dot(u, spec.order.points[j]))));
        }
        c.values[j] = acc;
    }
    return c;
}

Codeword evaluate_polynomial(const Field& F, const OrderedH& order,
                             const std::vector<std::pair<Point, Elem>>& terms) {
    Codeword c = zero_codeword(order);
    for (long long j = 0; j < order.n(); ++j) {
        const Point& i = order.points[j];
        Elem acc = 0;
        for (const auto& [v, coef] : terms) {
            if (static_cast<int>(v.size()) != order.grid.r)
                throw ContextMismatch("term arity does not match r");
            Elem term = coef;
            for (int axis = 0; axis < order.grid.r; ++axis)
                term = F.mul(term, F.pow(F.exp(i[axis]), v[axis]));
            acc = F.add(acc, term);
        }
        c.values[j] = acc;
    }
    return c;
}

Codeword shift(const OrderedH& order, const Codeword& c, const Point& a) {
    check_context(order, c);
    if (static_cast<int>(a.size()) != order.grid.r)
        throw ContextMismatch("shift vector arity does not match r");
    Codeword out = zero_codeword(order);
    Point diff(order.grid.r);
    for (long long l = 0; l < order.n(); ++l) {
        const Point& i = order.points[l];
        for (int axis = 0; axis < order.grid.r; ++axis) diff[axis] = i[axis] - a[axis];
        out.values[l] = c.values[order.position_of(reduce(order.grid, diff))];
    }
    return out;
}

Codeword convolve(const Field& F, const OrderedH& order, const Codeword& c1, const Codeword& c2) {
    check_context(order, c1);
    check_context(order, c2);
    const long long n = order.n();
    Codeword out = zero_codeword(order);
    Point sum(order.grid.r);
    for (long long a = 0; a < n; ++a) {
        if (c1.values[a] == 0) continue;
        const Point& i = order.points[a];
        for (long long b = 0; b < n; ++b) {
            if (c2.values[b] == 0) continue;
            const Point& j = order.points[b];
            for (int axis = 0; axis < order.grid.r; ++axis) sum[axis] = i[axis] + j[axis];
            const int t = order.position_of(reduce(order.grid, sum));
            out.values[t] = F.add(out.values[t], F.mul(c1.values[a], c2.values[b]));
        }
    }
    return out;
}

bool is_codeword(const CodeSpec& spec, const Codeword& c) {
    check_context(spec.order, c);
    const ExponentSet perp = dual_set(spec.U);
    for (const Point& u : perp.members) {
        Elem acc = 0;
        for (long long l = 0; l < spec.n(); ++l)
            acc = spec.field.add(
                acc, spec.field.mul(spec.field.exp(dot(u, spec.order.points[l])), c.values[l]));
        if (acc != 0) return false;
    }
    return true;
}

PolytopeCodeResult polytope_code(const Field& F, const Polytope& P, long long max_points) {
    const std::vector<Point> pts = lattice_points(P, max_points);
    ExponentSet U = reduce_set(pts, Grid{F.q(), P.r});
    CodeSpec spec = make_code_spec(F, P.r, std::move(U), max_points);
    return PolytopeCodeResult{std::move(spec), static_cast<long long>(pts.size())};
}

}  // namespace gtc
