#include "fpr/numeric.hpp"

#include <algorithm>

namespace fpr {

std::string rat_to_string(const Rat& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Int rat_floor(const Rat& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    Int q = num / den;
    if (num < 0 && q * den != num) --q;
    return q;
}

long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<long> divisors(long n) {
    std::vector<long> out;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

std::optional<std::pair<long, int>> prime_power(long q) {
    if (q < 2) return std::nullopt;
    long p = q;
    for (long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    int k = 0;
    long m = q;
    while (m % p == 0) {
        m /= p;
        ++k;
    }
    if (m != 1) return std::nullopt;
    return std::make_pair(p, k);
}

std::vector<long> prime_powers_up_to(long max) {
    std::vector<long> out;
    for (long q = 2; q <= max; ++q)
        if (prime_power(q)) out.push_back(q);
    return out;
}

}  // namespace fpr
