#include <doctest.h>

#include <random>
#include <set>

#include "gtc/codes.hpp"
#include "gtc/errors.hpp"
#include "gtc/matrix.hpp"
#include "testutil.hpp"

using namespace gtc;

namespace {

// (-1)^r * A, computed entry-wise.
FqMatrix sign_scaled(const Field& F, int r, FqMatrix A) {
    if (r % 2 == 0) return A;
    for (Elem& x : A.a) x = F.neg(x);
    return A;
}

Codeword scaled(const Field& F, Codeword c, Elem lambda) {
    for (Elem& x : c.values) x = F.mul(lambda, x);
    return c;
}

long long dot(const Point& u, const Point& v) {
    long long acc = 0;
    for (size_t i = 0; i < u.size(); ++i) acc += static_cast<long long>(u[i]) * v[i];
    return acc;
}

FqMatrix lit(int rows, int cols, std::initializer_list<int> vals) {
    FqMatrix A(rows, cols);
    auto it = vals.begin();
    for (Elem& x : A.a) x = static_cast<Elem>(*it++);
    return A;
}

}  // namespace

TEST_SUITE("codes") {

TEST_CASE("evaluation matrix against direct power computation") {
    for (auto [q, r] : {std::pair{3, 1}, {4, 1}, {5, 1}, {7, 1}, {8, 2}, {9, 2}, {4, 2}, {5, 2}}) {
        CAPTURE(q);
        CAPTURE(r);
        Field F(q);
        OrderedH order = enumerate_H(q, r);
        FqMatrix M = evaluation_matrix(F, r);
        REQUIRE(M.rows == order.n());
        for (int i = 0; i < M.rows; ++i)
            for (int j = 0; j < M.cols; ++j)
                CHECK(M.at(i, j) == F.exp(dot(order.points[i], order.points[j])));
        CHECK(M == transpose(M));
        // Gram identity M M^t = (-1)^r I_sigma, and the inverse formula
        FqMatrix Is = sigma_permutation_matrix(order);
        CHECK(mat_mul(F, M, transpose(M)) == sign_scaled(F, r, Is));
        FqMatrix Minv = sign_scaled(F, r, mat_mul(F, Is, M));
        FqMatrix I(M.rows, M.cols);
        for (int i = 0; i < M.rows; ++i) I.at(i, i) = 1;
        CHECK(mat_mul(F, Minv, M) == I);
    }
}

TEST_CASE("small pinned matrices") {
    Field F3(3);
    FqMatrix M = evaluation_matrix(F3, 1);
    CHECK(M == lit(2, 2, {1, 1, 1, 2}));
    // q=5, r=2: row of u=(0,1) has entry 2 at column (0,1) and 3 at column (0,3)
    Field F5(5);
    OrderedH order = enumerate_H(5, 2);
    FqMatrix M5 = evaluation_matrix(F5, 2);
    int row = order.position_of({0, 1});
    CHECK(M5.at(row, order.position_of({0, 1})) == 2);
    CHECK(M5.at(row, order.position_of({0, 3})) == 3);
    for (int j = 0; j < 16; ++j) CHECK(M5.at(order.position_of({0, 0}), j) == 1);
}

TEST_CASE("generator and control rows of the q=5 rectangle code") {
    Field F(5);
    Grid g{5, 2};
    CodeSpec spec = make_code_spec(F, 2, make_set(g, {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}}));
    FqMatrix M = evaluation_matrix(F, 2);
    FqMatrix G = generator_matrix(spec);
    FqMatrix H = control_matrix(spec);
    REQUIRE(G.rows == 6);
    REQUIRE(H.rows == 10);
    const int gen_rows[] = {0, 2, 4, 6, 8, 14};  // canonical positions of U
    const int ctl_rows[] = {1, 3, 4, 6, 8, 10, 11, 12, 13, 14};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 16; ++j) CHECK(G.at(i, j) == M.at(gen_rows[i], j));
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 16; ++j) CHECK(H.at(i, j) == M.at(ctl_rows[i], j));
    CHECK(is_zero(mat_mul(F, G, transpose(H))));
}

TEST_CASE("generator matrix edge shapes") {
    Field F(5);
    Grid g{5, 1};
    CodeSpec just_one = make_code_spec(F, 1, make_set(g, {{0}}));
    FqMatrix G = generator_matrix(just_one);
    CHECK(G == lit(1, 4, {1, 1, 1, 1}));

    OrderedH order = enumerate_H(5, 1);
    CodeSpec full = make_code_spec(F, 1, make_set(g, order.points));
    CHECK(generator_matrix(full) == evaluation_matrix(F, 1));
    CHECK(control_matrix(full).rows == 0);  // dual code is zero

    CodeSpec empty = make_code_spec(F, 1, make_set(g, {}));
    CHECK_THROWS_AS(generator_matrix(empty), EmptyU);
    CHECK(control_matrix(empty) == evaluation_matrix(F, 1));

    Field F3(3);
    Grid g3{3, 1};
    CodeSpec u0 = make_code_spec(F3, 1, make_set(g3, {{0}}));
    CHECK(control_matrix(u0) == lit(1, 2, {1, 2}));  // dual set {1}
}

TEST_CASE("encode examples and oracle equivalence") {
    Field F3(3);
    Grid g3{3, 1};
    CodeSpec c3 = make_code_spec(F3, 1, make_set(g3, {{1}}));
    CHECK(encode(c3, {1}).values == std::vector<Elem>{1, 2});
    CHECK(evaluate_polynomial(F3, c3.order, {{{1}, 1}}).values == std::vector<Elem>{1, 2});

    Field F5(5);
    Grid g5{5, 2};
    CodeSpec c5 = make_code_spec(F5, 2, make_set(g5, {{0, 0}}));
    Codeword ones = encode(c5, {1});
    CHECK(ones.values == std::vector<Elem>(16, 1));
    CHECK(is_zero(encode(c5, {0})));
    CHECK_THROWS_AS(encode(c5, {1, 2}), LengthMismatch);

    // random polynomials supported on U: encode and brute-force evaluation agree
    std::mt19937_64 rng(7);
    for (auto [q, r] : {std::pair{5, 1}, {5, 2}, {8, 1}, {9, 1}, {4, 2}}) {
        Field F(q);
        OrderedH order = enumerate_H(q, r);
        for (int t = 0; t < 6; ++t) {
            long long k = 1 + tu::uniform_below(rng, order.n());
            CodeSpec spec = make_code_spec(F, r, make_set(order.grid, tu::random_points(rng, order, k)));
            std::vector<Elem> msg = tu::random_message(rng, q, spec.k(), false);
            // terms listed in the generator-row (canonical position) order
            std::vector<std::pair<Point, Elem>> terms;
            std::vector<Point> members = spec.U.members;
            std::sort(members.begin(), members.end(), [&](const Point& a, const Point& b) {
                return order.position_of(a) < order.position_of(b);
            });
            for (size_t i = 0; i < members.size(); ++i) terms.push_back({members[i], msg[i]});
            CHECK(encode(spec, msg) == evaluate_polynomial(F, order, terms));
        }
    }
}

TEST_CASE("laurent evaluation reduces exponents implicitly") {
    Field F(5);
    OrderedH order = enumerate_H(5, 2);
    // Y1^4 Y2^4 = 1 on the torus
    CHECK(evaluate_polynomial(F, order, {{{4, 4}, 1}}).values == std::vector<Elem>(16, 1));
    // Y - Y^q = 0 on the torus (r = 1)
    OrderedH line = enumerate_H(5, 1);
    Codeword frob = evaluate_polynomial(F, line, {{{1}, 1}, {{5}, F.neg(1)}});
    CHECK(is_zero(frob));
    // negative exponents match their reductions
    std::mt19937_64 rng(19);
    for (int t = 0; t < 20; ++t) {
        Point raw{static_cast<int>(tu::uniform_below(rng, 19)) - 9,
                  static_cast<int>(tu::uniform_below(rng, 19)) - 9};
        Elem coeff = static_cast<Elem>(1 + tu::uniform_below(rng, 4));
        Codeword direct = evaluate_polynomial(F, order, {{raw, coeff}});
        Codeword reduced = scaled(F, basis_codeword(F, order, reduce(order.grid, raw)), coeff);
        CHECK(direct == reduced);
    }
}

TEST_CASE("shift identities") {
    Field F(5);
    OrderedH order = enumerate_H(5, 2);
    std::mt19937_64 rng(3);
    Codeword c = basis_codeword(F, order, {2, 3});
    CHECK(shift(order, c, {0, 0}) == c);

    // the pinned example: shifting ev(Y^(0,1)) by (0,1) scales by alpha^{-1} = 3
    Codeword e01 = basis_codeword(F, order, {0, 1});
    CHECK(shift(order, e01, {0, 1}) == scaled(F, e01, 3));
    CHECK(F.mul(2, 3) == 1);  // 3 really is the inverse of alpha = 2

    for (auto [q, r] : {std::pair{4, 1}, {5, 2}, {9, 1}, {4, 3}}) {
        Field Fq(q);
        OrderedH ord = enumerate_H(q, r);
        for (int t = 0; t < 10; ++t) {
            Point u = tu::random_point(rng, ord.grid);
            Point a = tu::random_point(rng, ord.grid);
            Codeword ev = basis_codeword(Fq, ord, u);
            // eigenvalue identity for shifts of basis codewords
            CHECK(shift(ord, ev, a) == scaled(Fq, ev, Fq.exp(-dot(u, a))));
            // full cycle: shifting by a then by its complement is the identity
            Point comp(a.size());
            for (size_t i = 0; i < a.size(); ++i) comp[i] = ord.grid.period() - a[i];
            Codeword w = zero_codeword(ord);
            for (long long i = 0; i < ord.n(); ++i)
                w.values[i] = static_cast<Elem>(tu::uniform_below(rng, q));
            CHECK(shift(ord, shift(ord, w, a), comp) == w);
        }
    }
}

TEST_CASE("convolution is the algebra product") {
    std::mt19937_64 rng(5);
    for (auto [q, r] : {std::pair{3, 2}, {7, 1}}) {
        Field F(q);
        OrderedH order = enumerate_H(q, r);
        // all basis pairs: annihilation off the diagonal, (-1)^r scaling on it
        for (long long i = 0; i < order.n(); ++i) {
            Codeword ci = basis_codeword(F, order, order.points[i]);
            for (long long j = 0; j < order.n(); ++j) {
                Codeword cj = basis_codeword(F, order, order.points[j]);
                Codeword prod = convolve(F, order, ci, cj);
                if (i == j)
                    CHECK(prod == scaled(F, ci, r % 2 == 0 ? F.one() : F.neg(F.one())));
                else
                    CHECK(is_zero(prod));
            }
        }
        // delta at the origin is the unit; delta at a shifts
        Codeword w = zero_codeword(order);
        for (long long i = 0; i < order.n(); ++i)
            w.values[i] = static_cast<Elem>(tu::uniform_below(rng, q));
        Point origin(r, 0);
        CHECK(convolve(F, order, delta_codeword(order, origin), w) == w);
        for (int t = 0; t < 5; ++t) {
            Point a = tu::random_point(rng, order.grid);
            CHECK(convolve(F, order, delta_codeword(order, a), w) == shift(order, w, a));
        }
        // commutative and bilinear
        Codeword v = zero_codeword(order);
        for (long long i = 0; i < order.n(); ++i)
            v.values[i] = static_cast<Elem>(tu::uniform_below(rng, q));
        CHECK(convolve(F, order, w, v) == convolve(F, order, v, w));
        Codeword sum = zero_codeword(order);
        for (long long i = 0; i < order.n(); ++i) sum.values[i] = F.add(w.values[i], v.values[i]);
        Codeword u = basis_codeword(F, order, tu::random_point(rng, order.grid));
        Codeword lhs = convolve(F, order, u, sum);
        Codeword rhs = convolve(F, order, u, w);
        Codeword rhs2 = convolve(F, order, u, v);
        for (long long i = 0; i < order.n(); ++i)
            CHECK(lhs.values[i] == F.add(rhs.values[i], rhs2.values[i]));
        // associative on a random triple
        CHECK(convolve(F, order, convolve(F, order, u, w), v) ==
              convolve(F, order, u, convolve(F, order, w, v)));
    }
}

TEST_CASE("context mismatches are rejected") {
    Field F5(5);
    Field F7(7);
    OrderedH o5 = enumerate_H(5, 1);
    OrderedH o7 = enumerate_H(7, 1);
    Codeword a = basis_codeword(F5, o5, {1});
    Codeword b = basis_codeword(F7, o7, {1});
    CHECK_THROWS_AS(convolve(F5, o5, a, b), ContextMismatch);
    Grid g5{5, 1};
    CodeSpec spec = make_code_spec(F5, 1, make_set(g5, {{1}}));
    CHECK_THROWS_AS(is_codeword(spec, b), ContextMismatch);
}

TEST_CASE("membership: syndrome test against the control matrix") {
    std::mt19937_64 rng(13);
    for (auto [q, r] : {std::pair{5, 2}, {4, 2}, {9, 1}}) {
        Field F(q);
        OrderedH order = enumerate_H(q, r);
        for (int t = 0; t < 8; ++t) {
            long long k = 1 + tu::uniform_below(rng, order.n() - 1);  // proper nonzero subcode
            CodeSpec spec = make_code_spec(F, r, make_set(order.grid, tu::random_points(rng, order, k)));
            CHECK(is_codeword(spec, zero_codeword(order)));
            Codeword c = encode(spec, tu::random_message(rng, q, spec.k(), false));
            CHECK(is_codeword(spec, c));
            // a basis codeword off U is never in the code
            for (long long i = 0; i < order.n(); ++i) {
                const Point& v = order.points[i];
                if (!spec.U.contains(v)) {
                    CHECK(!is_codeword(spec, basis_codeword(F, order, v)));
                    break;
                }
            }
        }
    }
}

TEST_CASE("multicyclicity: shifted codewords stay in the code") {
    std::mt19937_64 rng(17);
    for (auto [q, r] : {std::pair{5, 2}, {4, 3}}) {
        Field F(q);
        OrderedH order = enumerate_H(q, r);
        for (int t = 0; t < 10; ++t) {
            long long k = 1 + tu::uniform_below(rng, order.n());
            CodeSpec spec = make_code_spec(F, r, make_set(order.grid, tu::random_points(rng, order, k)));
            Codeword c = encode(spec, tu::random_message(rng, q, spec.k(), false));
            Point a = tu::random_point(rng, order.grid);
            CHECK(is_codeword(spec, shift(order, c, a)));
        }
    }
}

TEST_CASE("ideal closure under convolution by arbitrary vectors") {
    std::mt19937_64 rng(29);
    Field F(5);
    OrderedH order = enumerate_H(5, 2);
    for (int t = 0; t < 10; ++t) {
        long long k = 1 + tu::uniform_below(rng, order.n());
        CodeSpec spec = make_code_spec(F, 2, make_set(order.grid, tu::random_points(rng, order, k)));
        Codeword c = encode(spec, tu::random_message(rng, 5, spec.k(), false));
        Codeword v = zero_codeword(order);
        for (long long i = 0; i < order.n(); ++i)
            v.values[i] = static_cast<Elem>(tu::uniform_below(rng, 5));
        CHECK(is_codeword(spec, convolve(F, order, c, v)));
    }
}

TEST_CASE("generator rank equals k") {
    // exhaustive over all subsets on every grid with n <= 16
    for (auto [q, r] :
         {std::pair{3, 1}, {4, 1}, {5, 1}, {7, 1}, {8, 1}, {9, 1}, {11, 1}, {13, 1}, {16, 1},
          {17, 1}, {3, 2}, {4, 2}, {5, 2}, {3, 3}, {3, 4}}) {
        CAPTURE(q);
        CAPTURE(r);
        Field F(q);
        OrderedH order = enumerate_H(q, r);
        const long long n = order.n();
        REQUIRE(n <= 16);
        for (long long mask = 1; mask < (1ll << n); ++mask) {
            std::vector<Point> pts;
            for (long long i = 0; i < n; ++i)
                if (mask >> i & 1) pts.push_back(order.points[i]);
            CodeSpec spec = make_code_spec(F, r, make_set(order.grid, std::move(pts)));
            CHECK(rank(F, generator_matrix(spec)) == spec.k());
        }
    }
    // random subsets on a larger grid
    std::mt19937_64 rng(31);
    Field F(7);
    OrderedH order = enumerate_H(7, 2);
    for (int t = 0; t < 10; ++t) {
        long long k = 1 + tu::uniform_below(rng, order.n());
        CodeSpec spec = make_code_spec(F, 2, make_set(order.grid, tu::random_points(rng, order, k)));
        CHECK(rank(F, generator_matrix(spec)) == spec.k());
    }
}

TEST_CASE("encode injectivity on a small code") {
    Field F(4);
    Grid g{4, 1};
    CodeSpec spec = make_code_spec(F, 1, make_set(g, {{0}, {1}}));
    std::set<std::vector<Elem>> images;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            images.insert(encode(spec, {static_cast<Elem>(a), static_cast<Elem>(b)}).values);
    CHECK(images.size() == 16);
}

TEST_CASE("polytope codes") {
    Field F(5);
    PolytopeCodeResult rect = polytope_code(F, Polytope{2, {}, {{0, 2}, {0, 1}}});
    CHECK(rect.lattice_count == 6);
    CHECK(rect.spec.k() == 6);
    CHECK(rect.spec.n() == 16);

    PolytopeCodeResult seg = polytope_code(F, Polytope{1, {}, {{0, 4}}});
    CHECK(seg.lattice_count == 5);
    CHECK(seg.spec.k() == 4);  // the endpoint collapses onto 0

    PolytopeCodeResult simplex = polytope_code(F, Polytope{2, {{{1, 1}, 1}}, {{0, 1}, {0, 1}}});
    CHECK(simplex.spec.k() == 3);

    PolytopeCodeResult none = polytope_code(F, Polytope{1, {{{1}, -1}}, {{0, 3}}});
    CHECK(none.lattice_count == 0);
    CHECK(none.spec.k() == 0);
}

}  // TEST_SUITE
