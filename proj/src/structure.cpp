#include "gtc/structure.hpp"

#include <algorithm>

namespace gtc {

Elem inner_product_basis(const Field& F, int r, const Point& u, const Point& v) {
    const Grid g{F.q(), r};
    Point sum(u.size());
    for (size_t i = 0; i < u.size(); ++i) sum[i] = u[i] + v[i];
    const Point red = reduce(g, sum);
    if (!std::all_of(red.begin(), red.end(), [](int x) { return x == 0; })) return 0;
    // sum over H of 1 = (q-1)^r = (-1)^r in F_q
    return r % 2 == 0 ? F.one() : F.neg(F.one());
}

CodeSpec dual_code(const CodeSpec& spec) {
    return CodeSpec{spec.field, spec.order, dual_set(spec.U)};
}

ExponentSet ideal_to_U(const Field& F, const OrderedH& order,
                       const std::vector<Codeword>& generators) {
    if (generators.empty()) throw LengthMismatch("ideal recovery needs at least one generator");
    for (const Codeword& g : generators)
        if (g.grid != order.grid)
            throw ContextMismatch("generator does not belong to this (q, r) context");

    std::vector<Point> members;
    for (long long idx = 0; idx < order.n(); ++idx) {
        const Point& u = order.points[idx];
        const Codeword proj = basis_codeword(F, order, u);
        for (const Codeword& g : generators) {
            // ev(Y^u) * g = (-1)^r lambda_u ev(Y^u): nonzero exactly when the
            // coordinate of g at Y^u is nonzero.
            if (!is_zero(convolve(F, order, proj, g))) {
                members.push_back(u);
                break;
            }
        }
    }
    return make_set(order.grid, std::move(members));
}

DualityReport duality_report(const CodeSpec& spec) {
    DualityReport rep;
    rep.U = spec.U;
    rep.U_perp = dual_set(spec.U);
    rep.dims_ok = rep.U.size() + rep.U_perp.size() == spec.n();
    rep.self_dual = rep.U == rep.U_perp;

    if (spec.k() == 0) {
        // The zero code: orthogonal to everything, contained in everything.
        rep.gram_ok = true;
        rep.self_orthogonal = true;
        return rep;
    }

    const FqMatrix G = generator_matrix(spec);
    const FqMatrix H = control_matrix(spec);
    rep.gram_ok = H.rows == 0 || is_zero(mat_mul(spec.field, G, transpose(H)));
    // C contained in its dual iff the generator rows are pairwise orthogonal.
    rep.self_orthogonal = is_zero(mat_mul(spec.field, G, transpose(G)));
    return rep;
}

}  // namespace gtc
