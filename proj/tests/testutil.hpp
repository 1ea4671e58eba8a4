#pragma once

// Shared helpers for the test suites: deterministic sampling and small
// independent oracles the library code must agree with.

#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "gtc/codes.hpp"
#include "gtc/exponents.hpp"
#include "gtc/field.hpp"
#include "gtc/matrix.hpp"

namespace tu {

inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

// k distinct points of H, drawn by partial Fisher-Yates over positions.
inline std::vector<gtc::Point> random_points(std::mt19937_64& rng, const gtc::OrderedH& order,
                                             long long k) {
    const long long n = order.n();
    std::vector<long long> idx(n);
    for (long long i = 0; i < n; ++i) idx[i] = i;
    for (long long i = 0; i < k; ++i) {
        long long j = i + static_cast<long long>(uniform_below(rng, n - i));
        std::swap(idx[i], idx[j]);
    }
    std::vector<gtc::Point> pts;
    pts.reserve(k);
    for (long long i = 0; i < k; ++i) pts.push_back(order.points[idx[i]]);
    return pts;
}

inline std::vector<gtc::Elem> random_message(std::mt19937_64& rng, int q, long long k,
                                             bool full_support) {
    std::vector<gtc::Elem> msg(k);
    for (auto& m : msg)
        m = static_cast<gtc::Elem>(full_support ? 1 + uniform_below(rng, q - 1)
                                                : uniform_below(rng, q));
    return msg;
}

inline gtc::Point random_point(std::mt19937_64& rng, const gtc::Grid& g) {
    gtc::Point p(g.r);
    for (int& c : p) c = static_cast<int>(uniform_below(rng, g.period()));
    return p;
}

// Literal n-term dot product of two codewords.
inline gtc::Elem naive_inner(const gtc::Field& F, const gtc::Codeword& a, const gtc::Codeword& b) {
    gtc::Elem acc = 0;
    for (size_t i = 0; i < a.values.size(); ++i) acc = F.add(acc, F.mul(a.values[i], b.values[i]));
    return acc;
}

// Solves A x = b by Gaussian elimination; A must be square and invertible.
// Used as the linear-solve oracle for the convolution-projection recovery.
inline std::vector<gtc::Elem> solve_linear(const gtc::Field& F, gtc::FqMatrix A,
                                           std::vector<gtc::Elem> b) {
    const int n = A.rows;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && A.at(piv, col) == 0) ++piv;
        if (piv == n) throw std::runtime_error("singular system in test oracle");
        for (int j = 0; j < n; ++j) std::swap(A.at(piv, j), A.at(col, j));
        std::swap(b[piv], b[col]);
        gtc::Elem inv = F.inv(A.at(col, col));
        for (int j = 0; j < n; ++j) A.at(col, j) = F.mul(inv, A.at(col, j));
        b[col] = F.mul(inv, b[col]);
        for (int i = 0; i < n; ++i) {
            if (i == col || A.at(i, col) == 0) continue;
            gtc::Elem f = A.at(i, col);
            for (int j = 0; j < n; ++j) A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(col, j)));
            b[i] = F.sub(b[i], F.mul(f, b[col]));
        }
    }
    return b;
}

#ifdef GTC_BIN_PATH
struct CliResult {
    int exit_code = -1;
    std::string out;
};

// Runs the gtc binary through the shell, capturing stdout; stderr is dropped.
// `prefix` may carry environment assignments like "GTC_BUDGET=3 ".
inline CliResult run_cli(const std::string& args, const std::string& prefix = "") {
    CliResult res;
    std::string cmd = prefix + std::string(GTC_BIN_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}
#endif

}  // namespace tu
