#pragma once

#include <utility>
#include <vector>

#include "gtc/exponents.hpp"
#include "gtc/field.hpp"
#include "gtc/matrix.hpp"

namespace gtc {

// A code C_U is spanned by the evaluations of the monomials Y^u, u in U, at
// every torus point alpha^i = (alpha^{i_1}, ..., alpha^{i_r}), i in H.  The
// evaluation of Y^u at alpha^i is alpha^{<u,i>}, so everything reduces to
// exponent arithmetic mod q-1 plus the canonical ordering of H.
struct CodeSpec {
    Field field;
    OrderedH order;
    ExponentSet U;

    int r() const { return order.grid.r; }
    long long n() const { return order.n(); }
    long long k() const { return U.size(); }
};

CodeSpec make_code_spec(const Field& field, int r, ExponentSet U,
                        long long max_points = kDefaultMaxPoints);

// Length-n vector over F_q; position j holds the value at the torus point of
// order.points[j].
struct Codeword {
    Grid grid;
    std::vector<Elem> values;

    bool operator==(const Codeword&) const = default;
};

Codeword zero_codeword(const OrderedH& order);
bool is_zero(const Codeword& c);
int hamming_weight(const Codeword& c);

// ev(Y^u): values alpha^{<u, i>} over the ordered H.
Codeword basis_codeword(const Field& F, const OrderedH& order, const Point& u);

// The codeword with 1 at the position of grid point `i` and 0 elsewhere; the
// X^i basis of the ambient algebra A.  delta at i = 0 is the unit of A.
Codeword delta_codeword(const OrderedH& order, const Point& i);

// Dense n x n matrix M with entries alpha^{<u_j, i_l>}, rows and columns both
// in the canonical order (so M is symmetric and M * M^t = (-1)^r I_sigma).
// n x n storage is the reason for the tighter default budget.
inline constexpr long long kDefaultMaxMatrixDim = 1ll << 12;
FqMatrix evaluation_matrix(const Field& F, int r, long long max_dim = kDefaultMaxMatrixDim);

// Permutation matrix of sigma in the canonical order: identity block on the
// fixed points followed by 2x2 swap blocks.
FqMatrix sigma_permutation_matrix(const OrderedH& order);

// Rows of the evaluation matrix at the positions of U, in canonical order.
FqMatrix generator_matrix(const CodeSpec& spec);

// Generator matrix of the dual exponent set; empty (0 x n) when U = H.
FqMatrix control_matrix(const CodeSpec& spec);

// Message coordinates are keyed by U in the canonical-position order used by
// generator_matrix.
Codeword encode(const CodeSpec& spec, const std::vector<Elem>& message);

// Brute-force evaluation of an arbitrary Laurent polynomial (exponents in Z^r,
// negatives allowed) at every torus point, term by term, with no exponent
// reduction shortcuts.  Serves as the independent oracle for encode together
// with reduce_set.
Codeword evaluate_polynomial(const Field& F, const OrderedH& order,
                             const std::vector<std::pair<Point, Elem>>& terms);

// Multiplication by X^a in A: the value at X^i moves to X^{i+a}.  Pure index
// permutation, no field arithmetic.
Codeword shift(const OrderedH& order, const Codeword& c, const Point& a);

// The product of A in codeword coordinates: r-dimensional cyclic convolution,
// each axis modulo q-1.
Codeword convolve(const Field& F, const OrderedH& order, const Codeword& c1, const Codeword& c2);

// Syndrome test: control_matrix(spec) annihilates c.
bool is_codeword(const CodeSpec& spec, const Codeword& c);

// Lattice points of P, reduced into H; lattice_count records the size before
// reduction so collapses are visible.
struct PolytopeCodeResult {
    CodeSpec spec;
    long long lattice_count = 0;
};

PolytopeCodeResult polytope_code(const Field& F, const Polytope& P,
                                 long long max_points = kDefaultMaxPoints);

}  // namespace gtc
