#include "fpr/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace fpr {

namespace {

// Exact division of integer polynomials, ascending coefficients, b monic-ish
// (leading coefficient divides everything that appears; true for cyclotomics).
std::vector<Int> poly_div_exact(std::vector<Int> a, const std::vector<Int>& b) {
    std::vector<Int> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Int(0));
    const Int& lead = b.back();
    for (long d = static_cast<long>(a.size()) - 1;
         d >= static_cast<long>(b.size()) - 1; --d) {
        Int c = a[d] / lead;
        q[d - (b.size() - 1)] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) a[d - (b.size() - 1) + j] -= c * b[j];
    }
    return q;
}

struct CycTables {
    long phi;
    std::vector<Int> cyclo;                  // Phi_n, size phi+1, monic
    std::vector<std::vector<Int>> pow_rows;  // x^(phi+i) mod Phi_n
};

const CycTables& tables_for(long n) {
    thread_local std::map<long, CycTables> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    CycTables t;
    t.cyclo = cyclotomic_polynomial(n);
    t.phi = static_cast<long>(t.cyclo.size()) - 1;
    long maxdeg = std::max(n - 1, 2 * t.phi - 2);
    t.pow_rows.reserve(std::max<long>(0, maxdeg - t.phi + 1));
    std::vector<Int> row(t.phi, Int(0));
    // x^phi = -(c_0 + c_1 x + ... + c_{phi-1} x^{phi-1})
    for (long j = 0; j < t.phi; ++j) row[j] = -t.cyclo[j];
    for (long d = t.phi; d <= maxdeg; ++d) {
        t.pow_rows.push_back(row);
        // row(x) * x, reduced
        std::vector<Int> next(t.phi, Int(0));
        for (long j = 0; j + 1 < t.phi; ++j) next[j + 1] = row[j];
        const Int& top = row[t.phi - 1];
        if (top != 0)
            for (long j = 0; j < t.phi; ++j) next[j] += top * t.pow_rows[0][j];
        row = std::move(next);
    }
    return cache.emplace(n, std::move(t)).first->second;
}

// Reduce an arbitrary-degree polynomial in zeta_n to the power basis.
std::vector<Rat> reduce_mod_phi(std::vector<Rat> poly, long n) {
    const CycTables& t = tables_for(n);
    if (static_cast<long>(poly.size()) > t.phi + static_cast<long>(t.pow_rows.size()))
        throw Error("cyclotomic reduction: degree out of range");
    for (long d = static_cast<long>(poly.size()) - 1; d >= t.phi; --d) {
        Rat c = poly[d];
        if (c == 0) continue;
        const std::vector<Int>& row = t.pow_rows[d - t.phi];
        for (long j = 0; j < t.phi; ++j) poly[j] += c * Rat(row[j]);
    }
    poly.resize(t.phi);
    return poly;
}

std::vector<Rat> rational_poly_mod(std::vector<Rat> a, const std::vector<Rat>& b) {
    while (a.size() >= b.size()) {
        Rat c = a.back() / b.back();
        for (std::size_t j = 0; j < b.size(); ++j)
            a[a.size() - b.size() + j] -= c * b[j];
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.empty()) break;
    }
    return a;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(long n) {
    if (n < 1) throw Error("cyclotomic polynomial needs n >= 1");
    if (n == 1) return {Int(-1), Int(1)};  // x - 1
    std::vector<Int> num(n + 1, Int(0));
    num[0] = -1;
    num[n] = 1;  // x^n - 1
    for (long d : divisors(n)) {
        if (d == n) continue;
        num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
    }
    return num;
}

CycNumber::CycNumber() : n_(1), c_(1, Rat(0)) {}

CycNumber CycNumber::from_rat(const Rat& r) { return CycNumber(1, {r}); }

CycNumber CycNumber::root_of_unity(long n, long k) {
    if (n < 1) throw Error("root_of_unity needs n >= 1");
    k %= n;
    if (k < 0) k += n;
    std::vector<Rat> poly(k + 1, Rat(0));
    poly[k] = 1;
    return CycNumber(n, reduce_mod_phi(std::move(poly), n));
}

CycNumber CycNumber::two_cos(long j, long m) {
    if (m < 1 || j < 0 || j > m) throw Error("two_cos needs 0 <= j <= m, m >= 1");
    return root_of_unity(2 * m, j) + root_of_unity(2 * m, -j);
}

CycNumber CycNumber::lifted_to(long m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw Error("lift target must be a conductor multiple");
    long f = m / n_;
    std::vector<Rat> poly(static_cast<std::size_t>((c_.size() - 1) * f + 1), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) poly[i * f] = c_[i];
    return CycNumber(m, reduce_mod_phi(std::move(poly), m));
}

CycNumber CycNumber::operator+(const CycNumber& rhs) const {
    long l = std::lcm(n_, rhs.n_);
    CycNumber a = lifted_to(l), b = rhs.lifted_to(l);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

CycNumber CycNumber::operator-(const CycNumber& rhs) const { return *this + (-rhs); }

CycNumber CycNumber::operator-() const {
    CycNumber out = *this;
    for (Rat& x : out.c_) x = -x;
    return out;
}

CycNumber CycNumber::operator*(const CycNumber& rhs) const {
    long l = std::lcm(n_, rhs.n_);
    CycNumber a = lifted_to(l), b = rhs.lifted_to(l);
    std::vector<Rat> conv(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            conv[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return CycNumber(l, reduce_mod_phi(std::move(conv), l));
}

CycNumber CycNumber::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    // Extended Euclid in Q[x] against Phi_n: u*c + v*Phi = g, g a nonzero
    // constant because Phi is irreducible and deg c < deg Phi.
    const CycTables& t = tables_for(n_);
    std::vector<Rat> r0(t.cyclo.size());
    for (std::size_t i = 0; i < t.cyclo.size(); ++i) r0[i] = Rat(t.cyclo[i]);
    std::vector<Rat> r1 = c_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rat> u0 = {}, u1 = {Rat(1)};  // coefficients of c in r0, r1
    while (true) {
        // r0 = q*r1 + r2
        std::vector<Rat> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rat(0));
        std::vector<Rat> r2 = r0;
        while (r2.size() >= r1.size() && !(r2.size() == 1 && r2[0] == 0)) {
            Rat c = r2.back() / r1.back();
            q[r2.size() - r1.size()] += c;
            for (std::size_t j = 0; j < r1.size(); ++j)
                r2[r2.size() - r1.size() + j] -= c * r1[j];
            while (!r2.empty() && r2.back() == 0) r2.pop_back();
            if (r2.empty()) break;
        }
        // u2 = u0 - q*u1
        std::vector<Rat> u2 = u0;
        u2.resize(std::max(u0.size(), q.size() + u1.size() - 1), Rat(0));
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < u1.size(); ++j) u2[i + j] -= q[i] * u1[j];
        }
        while (!u2.empty() && u2.back() == 0) u2.pop_back();
        if (r2.empty()) break;  // r1 is the gcd
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
        if (r1.size() == 1) break;  // constant gcd reached
    }
    // Now u1 * c = r1 (mod Phi) with r1 constant.
    Rat g = r1[0];
    std::vector<Rat> inv = u1;
    for (Rat& x : inv) x /= g;
    return CycNumber(n_, reduce_mod_phi(std::move(inv), n_));
}

bool CycNumber::is_zero() const {
    for (const Rat& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycNumber::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat CycNumber::rational_part() const { return c_[0]; }

CycNumber CycNumber::galois(long t) const {
    long tt = t % n_;
    if (tt < 0) tt += n_;
    if (std::gcd(tt, n_) != 1)
        throw BadGaloisIndex("galois index " + std::to_string(t) + " not coprime to " +
                             std::to_string(n_));
    std::vector<Rat> poly(n_, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        poly[(i * tt) % n_] += c_[i];
    }
    return CycNumber(n_, reduce_mod_phi(std::move(poly), n_));
}

bool operator==(const CycNumber& a, const CycNumber& b) {
    long l = std::lcm(a.n_, b.n_);
    return a.lifted_to(l).c_ == b.lifted_to(l).c_;
}

bool operator<(const CycNumber& a, const CycNumber& b) {
    long l = std::lcm(a.n_, b.n_);
    CycNumber x = a.lifted_to(l), y = b.lifted_to(l);
    return std::lexicographical_compare(x.c_.begin(), x.c_.end(), y.c_.begin(), y.c_.end());
}

std::string CycNumber::to_string() const {
    std::string out = "cyc(" + std::to_string(n_) + ";";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ",";
        out += rat_to_string(c_[i]);
    }
    return out + ")";
}

CycNumber CycNumber::parse(const std::string& text) {
    if (text.rfind("cyc(", 0) != 0 || text.back() != ')')
        throw ParseError("expected cyc(N;...)", 0);
    std::string body = text.substr(4, text.size() - 5);
    auto semi = body.find(';');
    if (semi == std::string::npos) throw ParseError("expected ';' in cyc literal", 4);
    long n = std::stol(body.substr(0, semi));
    std::vector<Rat> coeffs;
    std::string rest = body.substr(semi + 1);
    std::size_t start = 0;
    while (start <= rest.size()) {
        auto comma = rest.find(',', start);
        std::string piece = rest.substr(start, comma == std::string::npos ? std::string::npos
                                                                          : comma - start);
        if (piece.empty()) throw ParseError("empty coefficient in cyc literal", start);
        coeffs.emplace_back(piece);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (static_cast<long>(coeffs.size()) != euler_phi(n))
        throw ParseError("cyc literal has wrong coefficient count", 0);
    return CycNumber(n, std::move(coeffs));
}

CycNumber galois_apply(const GaloisElement& sigma, const CycNumber& x) {
    if (sigma.modulus < 1 || sigma.t < 1 || sigma.t >= std::max<long>(sigma.modulus, 2) ||
        std::gcd(sigma.t, sigma.modulus) != 1)
        throw BadGaloisIndex("invalid Galois element");
    long l = std::lcm(sigma.modulus, x.conductor());
    // Smallest lift of t that is a unit mod l; restricts to sigma_t on the
    // original field.
    long t = sigma.t;
    while (std::gcd(t, l) != 1) t += sigma.modulus;
    return x.lifted_to(l).galois(t);
}

long subfield_degree(const std::vector<CycNumber>& xs) {
    if (xs.empty()) throw Error("subfield_degree needs at least one element");
    long l = 1;
    for (const CycNumber& x : xs) l = std::lcm(l, x.conductor());
    std::vector<CycNumber> lifted;
    lifted.reserve(xs.size());
    for (const CycNumber& x : xs) lifted.push_back(x.lifted_to(l));
    long stab = 0;
    for (long t = 1; t <= l; ++t) {
        if (std::gcd(t, l) != 1) continue;
        bool fixes = true;
        for (const CycNumber& x : lifted) {
            if (!(x.galois(t) == x)) {
                fixes = false;
                break;
            }
        }
        if (fixes) ++stab;
    }
    return euler_phi(l) / stab;
}

}  // namespace fpr
