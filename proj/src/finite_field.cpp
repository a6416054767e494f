#include "fpr/finite_field.hpp"

#include <algorithm>

namespace fpr {

namespace {

using Poly = std::vector<uint16_t>;  // coefficients in F_p, ascending

Poly poly_mod(Poly a, const Poly& m, long p) {
    while (a.size() >= m.size()) {
        uint16_t lead = a.back();
        if (lead != 0) {
            // m is monic
            std::size_t shift = a.size() - m.size();
            for (std::size_t i = 0; i < m.size(); ++i) {
                long v = (static_cast<long>(a[shift + i]) - static_cast<long>(lead) * m[i]) % p;
                if (v < 0) v += p;
                a[shift + i] = static_cast<uint16_t>(v);
            }
        }
        a.pop_back();
    }
    return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, long p) {
    Poly conv(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            conv[i + j] = static_cast<uint16_t>((conv[i + j] + static_cast<long>(a[i]) * b[j]) % p);
    return poly_mod(std::move(conv), m, p);
}

long encode(const Poly& a, long p) {
    long v = 0;
    for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
    return v;
}

Poly decode(long v, long p, int k) {
    Poly a(k, 0);
    for (int i = 0; i < k; ++i) {
        a[i] = static_cast<uint16_t>(v % p);
        v /= p;
    }
    return a;
}

bool is_irreducible(const Poly& f, long p) {
    // Trial division by every monic polynomial of degree <= deg(f)/2.
    int deg = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long v = 0; v < count; ++v) {
            Poly g = decode(v, p, d);
            g.push_back(1);  // monic
            Poly r = f;
            // remainder of f by g
            while (r.size() >= g.size()) {
                uint16_t lead = r.back();
                if (lead != 0) {
                    // multiply g by lead (g monic)
                    std::size_t shift = r.size() - g.size();
                    for (std::size_t i = 0; i < g.size(); ++i) {
                        long x = (static_cast<long>(r[shift + i]) -
                                  static_cast<long>(lead) * g[i]) % p;
                        if (x < 0) x += p;
                        r[shift + i] = static_cast<uint16_t>(x);
                    }
                }
                r.pop_back();
            }
            bool zero = std::all_of(r.begin(), r.end(), [](uint16_t x) { return x == 0; });
            if (zero) return false;
        }
    }
    return true;
}

}  // namespace

FiniteField::FiniteField(long q, long cap) {
    auto pk = prime_power(q);
    if (!pk) throw NotPrimePower(std::to_string(q) + " is not a prime power");
    if (q > cap)
        throw CapExceeded("field size " + std::to_string(q) + " exceeds cap " +
                          std::to_string(cap));
    p_ = pk->first;
    k_ = pk->second;
    q_ = q;

    if (k_ == 1) {
        modulus_ = {0, 1};  // x, unused
    } else {
        long count = 1;
        for (int i = 0; i < k_; ++i) count *= p_;
        for (long v = 0; v < count; ++v) {
            Poly f = decode(v, p_, k_);
            f.push_back(1);
            if (is_irreducible(f, p_)) {
                modulus_ = f;
                break;
            }
        }
    }

    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (long a = 0; a < q_; ++a) {
        Poly pa = decode(a, p_, k_);
        for (long b = 0; b < q_; ++b) {
            Poly pb = decode(b, p_, k_);
            Poly sum(k_);
            for (int i = 0; i < k_; ++i)
                sum[i] = static_cast<uint16_t>((pa[i] + pb[i]) % p_);
            add_[a * q_ + b] = static_cast<uint16_t>(encode(sum, p_));
            Poly prod = k_ == 1 ? Poly{static_cast<uint16_t>((a * b) % p_)}
                                : poly_mul_mod(pa, pb, modulus_, p_);
            prod.resize(k_, 0);
            mul_[a * q_ + b] = static_cast<uint16_t>(encode(prod, p_));
        }
        Poly na(k_);
        for (int i = 0; i < k_; ++i) na[i] = static_cast<uint16_t>((p_ - pa[i]) % p_);
        neg_[a] = static_cast<uint16_t>(encode(na, p_));
    }
    for (long a = 1; a < q_; ++a) {
        for (long b = 1; b < q_; ++b) {
            if (mul_[a * q_ + b] == 1) {
                inv_[a] = static_cast<uint16_t>(b);
                break;
            }
        }
        if (inv_[a] == 0) throw Error("field construction: missing inverse");
    }
}

uint16_t FiniteField::inv(uint16_t a) const {
    if (a == 0) throw DivisionByZero("field inverse of zero");
    return inv_[a];
}

uint16_t FiniteField::from_int(long n) const {
    long v = n % p_;
    if (v < 0) v += p_;
    return static_cast<uint16_t>(v);
}

long FiniteField::mult_order(uint16_t a) const {
    if (a == 0) throw Error("zero has no multiplicative order");
    long o = 1;
    uint16_t x = a;
    while (x != 1) {
        x = mul(x, a);
        ++o;
    }
    return o;
}

std::vector<uint16_t> embed_into_square(const FiniteField& base, const FiniteField& ext) {
    if (ext.characteristic() != base.characteristic() ||
        ext.q() != base.q() * base.q())
        throw Error("embed_into_square: extension must be the square field");
    // Find the smallest root of the base modulus inside ext.
    long p = base.characteristic();
    int k = base.degree();
    const auto& mod = base.modulus();
    uint16_t root = 0;
    bool found = false;
    if (k == 1) {
        root = 1;  // unused; prime subfield embeds by value
        found = true;
    } else {
        for (long r = 0; r < ext.q() && !found; ++r) {
            uint16_t acc = 0, power = 1;
            for (int i = 0; i <= k; ++i) {
                uint16_t coeff = ext.from_int(mod[i]);
                acc = ext.add(acc, ext.mul(coeff, power));
                power = ext.mul(power, static_cast<uint16_t>(r));
            }
            if (acc == 0) {
                root = static_cast<uint16_t>(r);
                found = true;
            }
        }
        if (!found) throw Error("embed_into_square: no root found");
    }
    std::vector<uint16_t> map(base.q());
    for (long a = 0; a < base.q(); ++a) {
        // digits of a base p are the coefficients
        long v = a;
        uint16_t acc = 0, power = 1;
        for (int i = 0; i < k; ++i) {
            uint16_t digit = ext.from_int(v % p);
            v /= p;
            acc = ext.add(acc, ext.mul(digit, power));
            power = ext.mul(power, root);
        }
        map[a] = acc;
    }
    return map;
}

}  // namespace fpr
