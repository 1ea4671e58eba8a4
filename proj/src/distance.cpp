#include "gtc/distance.hpp"

#include <climits>
#include <numeric>
#include <vector>

#include "gtc/matrix.hpp"

namespace gtc {

namespace {

// q^k clamped to LLONG_MAX.
long long pow_clamped(long long q, long long k) {
    __int128 v = 1;
    for (long long i = 0; i < k; ++i) {
        v *= q;
        if (v > LLONG_MAX) return LLONG_MAX;
    }
    return static_cast<long long>(v);
}

// C(n, w) clamped to LLONG_MAX.
long long binom_clamped(long long n, long long w) {
    if (w < 0 || w > n) return 0;
    if (w > n - w) w = n - w;
    __int128 v = 1;
    for (long long i = 1; i <= w; ++i) {
        v = v * (n - w + i) / i;  // exact: product of i consecutive integers
        if (v > LLONG_MAX) return LLONG_MAX;
    }
    return static_cast<long long>(v);
}

// Walks all q^k - 1 nonzero messages in odometer order (last coordinate
// fastest), maintaining the encoded codeword and its Hamming weight with one
// scaled generator-row addition per message coordinate that changes.
// visit(weight) returns false to stop early.
template <class Visit>
void for_each_nonzero_weight(const Field& F, const FqMatrix& G, Visit visit) {
    const Elem top = static_cast<Elem>(F.q() - 1);  // largest element index
    const int k = G.rows;
    const int n = G.cols;
    std::vector<Elem> msg(k, 0);
    std::vector<Elem> cw(n, 0);
    int weight = 0;
    auto add_scaled_row = [&](int t, Elem delta) {
        for (int i = 0; i < n; ++i) {
            Elem nv = F.add(cw[i], F.mul(delta, G.at(t, i)));
            weight += (nv != 0) - (cw[i] != 0);
            cw[i] = nv;
        }
    };
    const Elem carry_delta = F.neg(top);  // element change on a q-1 -> 0 wrap
    for (;;) {
        int t = k - 1;
        while (t >= 0 && msg[t] == top) --t;
        if (t < 0) return;
        Elem old = msg[t];
        msg[t] = static_cast<Elem>(old + 1);
        add_scaled_row(t, F.sub(msg[t], old));
        for (int j = t + 1; j < k; ++j) {
            msg[j] = 0;
            add_scaled_row(j, carry_delta);
        }
        if (!visit(weight)) return;
    }
}

// rank of the w columns of H selected by comb, == w iff they are independent.
bool columns_independent(const Field& F, const FqMatrix& H, const std::vector<int>& comb) {
    const int w = static_cast<int>(comb.size());
    if (H.rows < w) return false;
    FqMatrix S(H.rows, w);
    for (int i = 0; i < H.rows; ++i)
        for (int j = 0; j < w; ++j) S.at(i, j) = H.at(i, comb[j]);
    return row_echelon(F, S) == w;
}

// Advances comb to the next w-combination of {0..n-1} in lexicographic order;
// false once exhausted.
bool next_combination(std::vector<int>& comb, long long n) {
    const int w = static_cast<int>(comb.size());
    int i = w - 1;
    while (i >= 0 && comb[i] == n - w + i) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int j = i + 1; j < w; ++j) comb[j] = comb[j - 1] + 1;
    return true;
}

}  // namespace

std::string method_name(DistanceMethod m) {
    switch (m) {
        case DistanceMethod::Exhaustive: return "exhaustive";
        case DistanceMethod::ColumnRank: return "column-rank";
    }
    return "unknown";
}

DistanceResult min_distance_exhaustive(const CodeSpec& spec, long long budget) {
    FqMatrix G = generator_matrix(spec);  // rejects the zero code
    const long long messages = pow_clamped(spec.field.q(), spec.k()) - 1;
    if (messages > budget)
        throw BudgetExceeded("exhaustive distance needs " + std::to_string(messages) +
                                 " messages, budget " + std::to_string(budget),
                             messages);
    DistanceResult res;
    res.method = DistanceMethod::Exhaustive;
    long long best = spec.n() + 1;
    for_each_nonzero_weight(spec.field, G, [&](int w) {
        ++res.work.codewords;
        if (w < best) best = w;
        return best > 1;  // weight 1 cannot be beaten: no nonzero message encodes to zero
    });
    res.d = best;
    res.certified_lower_bound = best;
    return res;
}

DistanceResult min_distance_column_rank(const CodeSpec& spec, long long budget) {
    if (spec.U.size() == 0) throw EmptyU("minimum distance of the zero code is undefined");
    const FqMatrix H = control_matrix(spec);
    const long long n = spec.n();
    DistanceResult res;
    res.method = DistanceMethod::ColumnRank;
    if (H.rows == 0) {  // U is all of the exponent grid: the code is the whole space
        res.d = 1;
        res.certified_lower_bound = 1;
        return res;
    }
    // d is the smallest w with some w control columns dependent; completing
    // size w with every subset independent certifies d >= w + 1.  Dependence
    // must appear by w = n - k + 1, where subsets outnumber the control rows.
    for (long long w = 1; w <= n; ++w) {
        res.certified_lower_bound = w;
        std::vector<int> comb(static_cast<size_t>(w));
        std::iota(comb.begin(), comb.end(), 0);
        do {
            if (res.work.subsets == budget) {
                res.d = w;  // only a lower bound
                res.partial = true;
                return res;
            }
            ++res.work.subsets;
            if (!columns_independent(spec.field, H, comb)) {
                res.d = w;
                return res;
            }
        } while (next_combination(comb, n));
    }
    // unreachable for a nonzero code, kept as a hard stop
    res.d = n + 1;
    res.partial = true;
    return res;
}

bool certify_lower_bound(const CodeSpec& spec, long long d, long long budget, WorkCounters* work) {
    if (d <= 1) return true;  // no nonzero codeword has weight below 1
    const long long w = d - 1;
    const long long n = spec.n();
    if (w > n) return true;  // no w-subsets of columns exist
    const FqMatrix H = control_matrix(spec);
    if (H.rows < w) return false;  // every w columns of fewer rows are dependent
    const long long total = binom_clamped(n, w);
    if (total > budget)
        throw BudgetExceeded("certificate needs " + std::to_string(total) +
                                 " subset checks, budget " + std::to_string(budget),
                             total);
    std::vector<int> comb(static_cast<size_t>(w));
    std::iota(comb.begin(), comb.end(), 0);
    do {
        if (work) ++work->subsets;
        if (!columns_independent(spec.field, H, comb)) return false;
    } while (next_combination(comb, n));
    return true;
}

std::map<int, long long> weight_distribution(const CodeSpec& spec, long long budget) {
    std::map<int, long long> dist;
    dist[0] = 1;  // the zero codeword
    if (spec.U.size() == 0) return dist;
    const long long messages = pow_clamped(spec.field.q(), spec.k()) - 1;
    if (messages > budget)
        throw BudgetExceeded("weight distribution needs " + std::to_string(messages) +
                                 " messages, budget " + std::to_string(budget),
                             messages);
    const FqMatrix G = generator_matrix(spec);
    for_each_nonzero_weight(spec.field, G, [&](int w) {
        ++dist[w];
        return true;
    });
    return dist;
}

namespace {

__int128 checked_mul(__int128 a, __int128 b) {
    if (a == 0 || b == 0) return 0;
    __int128 r = a * b;
    if (r / b != a) throw TooLarge("integer overflow in MacWilliams transform");
    return r;
}

}  // namespace

std::map<int, long long> macwilliams_dual_distribution(const std::map<int, long long>& dist,
                                                       long long n, int q) {
    if (n < 1) throw ParseError("length must be positive");
    __int128 size = 0;
    for (const auto& [w, cnt] : dist) {
        if (w < 0 || w > n) throw ParseError("weight " + std::to_string(w) + " outside 0.." + std::to_string(n));
        if (cnt < 0) throw ParseError("negative count at weight " + std::to_string(w));
        size += cnt;
    }
    if (size == 0) throw ParseError("empty weight distribution");
    if (n > 512) throw TooLarge("MacWilliams transform limited to length 512");

    // Pascal's triangle and powers of q-1, exact.
    std::vector<std::vector<__int128>> C(n + 1, std::vector<__int128>(n + 1, 0));
    for (long long a = 0; a <= n; ++a) {
        C[a][0] = 1;
        for (long long b = 1; b <= a; ++b)
            C[a][b] = C[a - 1][b - 1] + (b <= a - 1 ? C[a - 1][b] : 0);
    }
    std::vector<__int128> pw(n + 1);
    pw[0] = 1;
    for (long long j = 1; j <= n; ++j) pw[j] = checked_mul(pw[j - 1], q - 1);

    std::map<int, long long> out;
    for (long long j = 0; j <= n; ++j) {
        __int128 acc = 0;
        for (const auto& [w, cnt] : dist) {
            // Krawtchouk value K_j(w) = sum_i (-1)^i (q-1)^{j-i} C(w,i) C(n-w,j-i)
            __int128 kj = 0;
            for (long long i = 0; i <= j && i <= w; ++i) {
                if (j - i > n - w) continue;
                __int128 term = checked_mul(checked_mul(pw[j - i], C[w][i]), C[n - w][j - i]);
                kj += (i % 2 == 0) ? term : -term;
            }
            acc += checked_mul(cnt, kj);
        }
        if (acc % size != 0 || acc < 0)
            throw Error("non_integral_transform",
                        "MacWilliams transform is not integral; input is not a linear code distribution");
        __int128 b = acc / size;
        if (b > LLONG_MAX) throw TooLarge("integer overflow in MacWilliams transform");
        if (b != 0) out[static_cast<int>(j)] = static_cast<long long>(b);
    }
    return out;
}

}  // namespace gtc
