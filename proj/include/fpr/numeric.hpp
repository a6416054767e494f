#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fpr {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// "p/q", or just "p" when the denominator is 1.
std::string rat_to_string(const Rat& r);

// Largest integer <= r.
Int rat_floor(const Rat& r);

long euler_phi(long n);
std::vector<long> divisors(long n);
bool is_prime(long n);

// q = p^k with p prime, k >= 1.
std::optional<std::pair<long, int>> prime_power(long q);

// Prime powers in [2, max] ascending.
std::vector<long> prime_powers_up_to(long max);

inline long lcm_l(long a, long b) { return std::lcm(a, b); }
inline long gcd_l(long a, long b) { return std::gcd(a, b); }

}  // namespace fpr
