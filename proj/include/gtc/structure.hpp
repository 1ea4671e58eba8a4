#pragma once

#include <vector>

#include "gtc/codes.hpp"

namespace gtc {

// Everything a duality check produces.  gram_ok and self_orthogonal are
// computed from the actual matrices, not assumed from the theory, so the
// report doubles as a numerical witness that the dual construction is right.
struct DualityReport {
    ExponentSet U;
    ExponentSet U_perp;
    bool gram_ok = false;         // G_U * G_{U_perp}^t == 0
    bool dims_ok = false;         // |U| + |U_perp| == n
    bool self_dual = false;       // U == U_perp (the ev(Y^u) form a basis, so
                                  // set equality decides code equality)
    bool self_orthogonal = false; // C_U contained in its dual
};

// The bilinear form on the monomial basis: <ev(Y^u), ev(Y^v)> is 0 unless
// u + v reduces to 0, in which case it is (-1)^r.  Closed form; the literal
// n-term dot product is kept to the tests.
Elem inner_product_basis(const Field& F, int r, const Point& u, const Point& v);

// Spec of the dual code, over dual_set(U).
CodeSpec dual_code(const CodeSpec& spec);

// Recovers the exponent set of the ideal generated by `generators` under the
// convolution product: u belongs to the result iff some generator has a
// nonzero projection ev(Y^u) * g.  All-zero generators yield the empty set.
ExponentSet ideal_to_U(const Field& F, const OrderedH& order, const std::vector<Codeword>& generators);

DualityReport duality_report(const CodeSpec& spec);

}  // namespace gtc
