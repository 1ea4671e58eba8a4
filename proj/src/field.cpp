#include "gtc/field.hpp"

#include <string>

namespace gtc {

namespace {

constexpr int kMaxQ = 1 << 16;

bool is_prime(int n) {
    if (n < 2) return false;
    for (int i = 2; i * i <= n; ++i)
        if (n % i == 0) return false;
    return true;
}

// --- polynomial helpers over F_p, coefficients low degree first ---

std::vector<int> index_to_digits(int idx, int p, int m) {
    std::vector<int> d(m, 0);
    for (int j = 0; j < m && idx != 0; ++j) {
        d[j] = idx % p;
        idx /= p;
    }
    return d;
}

int digits_to_index(const std::vector<int>& d, int p) {
    int idx = 0;
    for (size_t j = d.size(); j-- > 0;) idx = idx * p + d[j];
    return idx;
}

// a *= x mod f, where f is monic of degree m and a has degree < m.
void mul_by_x(std::vector<int>& a, const std::vector<int>& f, int p) {
    const int m = static_cast<int>(f.size()) - 1;
    int lead = a[m - 1];
    for (int j = m - 1; j > 0; --j) a[j] = a[j - 1];
    a[0] = 0;
    if (lead != 0)
        for (int j = 0; j < m; ++j) a[j] = ((a[j] - lead * f[j]) % p + p) % p;
}

// Schoolbook a*b mod f; only used during construction and in the fallback
// primitive-element scan, never on the hot path.
std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& f, int p) {
    const int m = static_cast<int>(f.size()) - 1;
    std::vector<int> acc(m, 0);
    for (int j = m - 1; j >= 0; --j) {
        // acc = acc*x + b[j]*a
        if (j != m - 1) mul_by_x(acc, f, p);
        if (b[j] != 0)
            for (int t = 0; t < m; ++t) acc[t] = (acc[t] + b[j] * a[t]) % p;
    }
    return acc;
}

bool is_one(const std::vector<int>& a) {
    if (a.empty() || a[0] != 1) return false;
    for (size_t j = 1; j < a.size(); ++j)
        if (a[j] != 0) return false;
    return true;
}

// Remainder of f by a monic divisor g, both low degree first.
bool divides(const std::vector<int>& g, std::vector<int> f, int p) {
    const int dg = static_cast<int>(g.size()) - 1;
    int df = static_cast<int>(f.size()) - 1;
    while (df >= 0 && f[df] == 0) --df;
    while (df >= dg) {
        int c = f[df];
        if (c != 0)
            for (int j = 0; j <= dg; ++j) f[df - dg + j] = ((f[df - dg + j] - c * g[j]) % p + p) % p;
        --df;
        while (df >= 0 && f[df] == 0) --df;
    }
    return df < 0;
}

// Monic f of degree m irreducible over F_p, by trial division with every monic
// polynomial of degree 1..m/2.
bool is_irreducible(const std::vector<int>& f, int p) {
    const int m = static_cast<int>(f.size()) - 1;
    for (int dd = 1; 2 * dd <= m; ++dd) {
        std::vector<int> g(dd + 1, 0);
        g[dd] = 1;
        for (;;) {
            if (divides(g, f, p)) return false;
            int j = 0;
            while (j < dd && g[j] == p - 1) g[j++] = 0;
            if (j == dd) break;
            ++g[j];
        }
    }
    return true;
}

}  // namespace

bool is_prime_power(int q, int* p_out, int* m_out) {
    if (q < 2) return false;
    int p = 2;
    while (q % p != 0) ++p;
    int m = 0, t = q;
    while (t % p == 0) {
        t /= p;
        ++m;
    }
    if (t != 1 || !is_prime(p)) return false;
    if (p_out) *p_out = p;
    if (m_out) *m_out = m;
    return true;
}

Field::Field(int q) : q_(q) {
    if (q > kMaxQ) throw TooLarge("q = " + std::to_string(q) + " exceeds the 2^16 table budget");
    if (q < 3 || !is_prime_power(q, &p_, &m_))
        throw NotPrimePower("q = " + std::to_string(q) + " is not a prime power >= 3");

    if (m_ == 1) {
        for (int g = 2; g < p_; ++g) {
            int x = g, ord = 1;
            while (x != 1) {
                x = x * g % p_;
                ++ord;
            }
            if (ord == p_ - 1) {
                alpha_ = static_cast<Elem>(g);
                break;
            }
        }
        build_tables_from_alpha();
        return;
    }

    // Scan monic moduli in lex order of (c_0, ..., c_{m-1}).
    std::vector<int> first_irreducible;
    std::vector<int> c(m_, 0);
    for (;;) {
        std::vector<int> f = c;
        f.push_back(1);
        if (is_irreducible(f, p_)) {
            if (first_irreducible.empty()) first_irreducible = f;
            // Order of x mod f: walk x, x^2, ... until 1.
            std::vector<int> cur(m_, 0);
            cur[1] = 1;
            int ord = 1;
            while (!is_one(cur)) {
                mul_by_x(cur, f, p_);
                ++ord;
            }
            if (ord == q_ - 1) {
                modulus_ = f;
                alpha_ = static_cast<Elem>(p_);  // digits (0,1,0,...) = x
                build_tables_from_alpha();
                return;
            }
        }
        int j = m_ - 1;
        while (j >= 0 && c[j] == p_ - 1) c[j--] = 0;
        if (j < 0) break;
        ++c[j];
    }

    // No modulus makes x primitive (does not occur for any p^m, but the rule
    // is total): keep the first irreducible modulus and take the smallest
    // primitive element index under it.
    modulus_ = first_irreducible;
    for (int idx = 2; idx < q_; ++idx) {
        std::vector<int> a = index_to_digits(idx, p_, m_);
        std::vector<int> cur = a;
        int ord = 1;
        while (!is_one(cur)) {
            cur = poly_mul_mod(cur, a, modulus_, p_);
            ++ord;
        }
        if (ord == q_ - 1) {
            alpha_ = static_cast<Elem>(idx);
            break;
        }
    }
    build_tables_from_alpha();
}

void Field::build_tables_from_alpha() {
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, -1);
    if (m_ == 1) {
        int x = 1;
        for (int e = 0; e < q_ - 1; ++e) {
            exp_[e] = static_cast<Elem>(x);
            log_[x] = e;
            x = x * alpha_ % p_;
        }
    } else {
        std::vector<int> a = index_to_digits(alpha_, p_, m_);
        std::vector<int> cur(m_, 0);
        cur[0] = 1;
        for (int e = 0; e < q_ - 1; ++e) {
            int idx = digits_to_index(cur, p_);
            exp_[e] = static_cast<Elem>(idx);
            log_[idx] = e;
            cur = poly_mul_mod(cur, a, modulus_, p_);
        }
    }
}

Elem Field::pow(Elem a, long long e) const {
    if (a == 0) {
        if (e < 0) throw DivisionByZero("zero to a negative power");
        return e == 0 ? one() : zero();
    }
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    Elem acc = 1;
    while (e > 0) {
        if (e & 1) acc = mul(acc, a);
        a = mul(a, a);
        e >>= 1;
    }
    return acc;
}

}  // namespace gtc
