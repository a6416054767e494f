#pragma once

#include <cstdint>
#include <vector>

#include "fpr/errors.hpp"
#include "fpr/numeric.hpp"

namespace fpr {

// F_q with full arithmetic tables. Elements are indices 0..q-1; the index is
// the base-p encoding of the coefficient vector modulo a deterministic
// (lexicographically least) irreducible polynomial.
class FiniteField {
public:
    explicit FiniteField(long q, long cap = 4096);

    long q() const { return q_; }
    long characteristic() const { return p_; }
    int degree() const { return k_; }
    const std::vector<uint16_t>& modulus() const { return modulus_; }  // size k+1, monic

    uint16_t add(uint16_t a, uint16_t b) const { return add_[a * q_ + b]; }
    uint16_t mul(uint16_t a, uint16_t b) const { return mul_[a * q_ + b]; }
    uint16_t neg(uint16_t a) const { return neg_[a]; }
    uint16_t inv(uint16_t a) const;
    uint16_t sub(uint16_t a, uint16_t b) const { return add(a, neg(b)); }

    uint16_t zero() const { return 0; }
    uint16_t one() const { return 1; }
    uint16_t from_int(long n) const;

    // Multiplicative order; 0 has no order.
    long mult_order(uint16_t a) const;

private:
    long p_, q_;
    int k_;
    std::vector<uint16_t> modulus_;
    std::vector<uint16_t> add_, mul_, neg_, inv_;
};

// Embedding of F_q into F_{q^2} (the smallest-index root of the subfield
// modulus). Index-to-index map of size q.
std::vector<uint16_t> embed_into_square(const FiniteField& base, const FiniteField& ext);

}  // namespace fpr
