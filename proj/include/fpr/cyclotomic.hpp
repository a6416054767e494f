#pragma once

#include <string>
#include <vector>

#include "fpr/errors.hpp"
#include "fpr/numeric.hpp"

namespace fpr {

// An exact element of Q(zeta_N), stored as the unique representative in the
// power basis {zeta_N^i : 0 <= i < phi(N)} modulo the N-th cyclotomic
// polynomial. Binary operations lift both operands to the lcm of conductors.
class CycNumber {
public:
    CycNumber();  // zero at conductor 1
    static CycNumber from_rat(const Rat& r);
    static CycNumber root_of_unity(long n, long k);  // zeta_n^k
    static CycNumber two_cos(long j, long m);        // zeta_{2m}^j + zeta_{2m}^{-j}

    long conductor() const { return n_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    CycNumber lifted_to(long m) const;  // requires conductor() | m

    CycNumber operator+(const CycNumber& rhs) const;
    CycNumber operator-(const CycNumber& rhs) const;
    CycNumber operator*(const CycNumber& rhs) const;
    CycNumber operator-() const;
    CycNumber inverse() const;  // DivisionByZero on zero

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_part() const;  // the coefficient of zeta^0

    // zeta_N -> zeta_N^t; requires gcd(t, conductor()) = 1.
    CycNumber galois(long t) const;

    friend bool operator==(const CycNumber& a, const CycNumber& b);
    friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }
    // Total order on (conductor-lifted) coefficient vectors; used for
    // canonical sign choices and map keys.
    friend bool operator<(const CycNumber& a, const CycNumber& b);

    std::string to_string() const;  // cyc(N;c0,c1,...)
    static CycNumber parse(const std::string& text);

private:
    long n_;
    std::vector<Rat> c_;
    CycNumber(long n, std::vector<Rat> c) : n_(n), c_(std::move(c)) {}
};

inline CycNumber two_cos(long j, long m) { return CycNumber::two_cos(j, m); }

struct GaloisElement {
    long t;
    long modulus;  // 1 <= t < modulus, gcd(t, modulus) = 1
};

// Extends sigma_t to the (lifted) conductor of x and applies it.
CycNumber galois_apply(const GaloisElement& sigma, const CycNumber& x);

// Degree over Q of the field generated by xs: the index in (Z/N)^* of the
// joint stabilizer, N the common conductor.
long subfield_degree(const std::vector<CycNumber>& xs);

// Monic cyclotomic polynomial Phi_n, ascending coefficients.
std::vector<Int> cyclotomic_polynomial(long n);

}  // namespace fpr
