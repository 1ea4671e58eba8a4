#pragma once

#include <cstdint>
#include <vector>

#include "gtc/errors.hpp"

namespace gtc {

// A field element is encoded as an integer index in 0..q-1.  For prime fields
// the index is the residue itself.  For extension fields F_{p^m} the index is
// the base-p digit string of the polynomial coefficients, constant term in the
// least significant digit, so index 0 is the additive and index 1 the
// multiplicative identity in every field.
using Elem = std::uint16_t;

// Arithmetic context for F_q, q = p^m a prime power with 3 <= q <= 2^16.
//
// A fixed primitive element alpha is chosen deterministically so that the same
// q always produces the same exp/log tables:
//   m == 1: alpha is the smallest integer generator of F_p*.
//   m  > 1: moduli are scanned in lexicographic order of their coefficient
//           tuple (low degree first) and the first monic irreducible one whose
//           residue class x is primitive is taken, with alpha = x.  If no
//           modulus has x primitive, the first irreducible modulus is kept and
//           alpha is the smallest primitive element index under it.
//
// Multiplication and inversion of nonzero elements go through the exp/log
// tables; addition is digitwise mod p.  Instances are immutable after
// construction and safe for unrestricted concurrent reads.
class Field {
public:
    explicit Field(int q);

    int q() const { return q_; }
    int p() const { return p_; }
    int m() const { return m_; }
    Elem alpha() const { return alpha_; }

    // Modulus polynomial coefficients, low degree first, size m+1, monic.
    // Empty for prime fields (no modulus involved).
    const std::vector<int>& modulus() const { return modulus_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem add(Elem a, Elem b) const {
        if (m_ == 1) return static_cast<Elem>((a + b) % p_);
        if (p_ == 2) return static_cast<Elem>(a ^ b);
        int x = a, y = b, out = 0, scale = 1;
        while (x != 0 || y != 0) {
            out += (x % p_ + y % p_) % p_ * scale;
            scale *= p_;
            x /= p_;
            y /= p_;
        }
        return static_cast<Elem>(out);
    }

    Elem neg(Elem a) const {
        if (m_ == 1) return static_cast<Elem>((p_ - a) % p_);
        if (p_ == 2) return a;
        int x = a, out = 0, scale = 1;
        while (x != 0) {
            int d = x % p_;
            out += (d == 0 ? 0 : p_ - d) * scale;
            scale *= p_;
            x /= p_;
        }
        return static_cast<Elem>(out);
    }

    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(log_[a] + log_[b]) % (q_ - 1)];
    }

    Elem inv(Elem a) const {
        if (a == 0) throw DivisionByZero("inverse of zero");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    // alpha^e with e taken mod q-1; negative e allowed.
    Elem exp(long long e) const {
        long long r = e % (q_ - 1);
        if (r < 0) r += q_ - 1;
        return exp_[r];
    }

    // Discrete log base alpha of a nonzero element.
    int log(Elem a) const {
        if (a == 0) throw DivisionByZero("log of zero");
        return log_[a];
    }

    // Generic a^e by square-and-multiply on the element itself; does not touch
    // the exponent arithmetic of exp().  Negative e inverts first.
    Elem pow(Elem a, long long e) const;

    const std::vector<Elem>& exp_table() const { return exp_; }

    // Fields of equal order are identical by the deterministic construction.
    bool operator==(const Field& other) const { return q_ == other.q_; }

private:
    int q_ = 0, p_ = 0, m_ = 0;
    Elem alpha_ = 0;
    std::vector<int> modulus_;
    std::vector<Elem> exp_;  // exp_[e] = alpha^e, length q-1
    std::vector<int> log_;   // log_[exp_[e]] = e, log_[0] = -1

    void build_tables_from_alpha();
};

// True iff q = p^m for a prime p; outputs p and m when requested.
bool is_prime_power(int q, int* p_out = nullptr, int* m_out = nullptr);

}  // namespace gtc
