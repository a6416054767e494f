#pragma once

#include <array>
#include <string>
#include <vector>

#include "fpr/numeric.hpp"
#include "fpr/presentation.hpp"
#include "fpr/smith.hpp"

namespace fpr {

struct FuchsianSignature {
    long genus = 0;
    std::vector<long> cone_orders;
    long cusps = 0;

    static FuchsianSignature from_triangle(const TriangleSignature& t) {
        return FuchsianSignature{0, {t.p, t.q, t.r}, 0};
    }
};

// chi = 2 - 2g - s - sum(1 - 1/m_i)
Rat euler_characteristic(const FuchsianSignature& sig);
Rat euler_characteristic(const TriangleSignature& sig);

// floor(2 - chi) cocompact, floor(1 - chi) otherwise.
long b1_upper_bound(const FuchsianSignature& sig);

// All tuples (n_1 <= ... <= n_m), m >= 2, 2 <= n_i <= n_max, with
// sum(1/n_i) + 1 - m >= chi_bound. The (2,n) family is infinite, hence the
// explicit cap.
std::vector<std::vector<long>> admissible_free_products(const Rat& chi_bound, long n_max);

// Formula values for the abelianizations of the four index-2 extensions of
// the (p,q,q) triangle group, in the same order as index2_extensions():
//   Z/q x Z/h x Z/2,  (Z/2)^i,  Z/h' x Z/2,  Z/q x Z/2
// with h = gcd(p,q), h' = gcd(2p,q); i = 3 when p,q both even, 2 when p is
// odd and q even, else 1.
std::array<AbelianInvariants, 4> expected_extension_abelianizations(long p, long q);

// Arithmetic triangle groups with real quadratic invariant trace field
// Q(sqrt(d)), quaternion algebra ramified at one real and one finite place.
struct RefEntry {
    TriangleSignature sig;
    long d;
    long ramified_prime;
};

struct CommensurabilityEdge {
    TriangleSignature a, b;
    long index;  // chi(b) = index * chi(a) with chi(a) the larger group? see data
};

const std::vector<RefEntry>& reference_data();
const std::vector<CommensurabilityEdge>& commensurability_edges();

}  // namespace fpr
