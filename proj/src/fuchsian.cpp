#include "fpr/fuchsian.hpp"

#include <algorithm>
#include <numeric>

#include "fpr/errors.hpp"

namespace fpr {

Rat euler_characteristic(const FuchsianSignature& sig) {
    Rat chi = Rat(2 - 2 * sig.genus - sig.cusps);
    for (long m : sig.cone_orders) {
        if (m < 2) throw Error("cone orders must be >= 2");
        chi -= Rat(m - 1, m);
    }
    return chi;
}

Rat euler_characteristic(const TriangleSignature& sig) {
    return euler_characteristic(FuchsianSignature::from_triangle(sig));
}

long b1_upper_bound(const FuchsianSignature& sig) {
    Rat bound = (sig.cusps == 0 ? Rat(2) : Rat(1)) - euler_characteristic(sig);
    return static_cast<long>(rat_floor(bound));
}

namespace {

void extend_tuple(std::vector<long>& tuple, const Rat& chi_bound, long n_max,
                  std::vector<std::vector<long>>& out) {
    // chi of the current tuple; each further factor subtracts at least 1/2.
    Rat chi(1);
    for (long n : tuple) chi += Rat(1, n) - 1;
    if (tuple.size() >= 2 && chi >= chi_bound) out.push_back(tuple);
    if (chi - Rat(1, 2) < chi_bound) return;  // no extension can recover
    long lo = tuple.empty() ? 2 : tuple.back();
    for (long n = lo; n <= n_max; ++n) {
        // Appending n and then only order-2 factors keeps chi maximal among
        // extensions starting at n; prune when even that fails.
        Rat best = chi + Rat(1, n) - 1;
        if (best < chi_bound) break;
        tuple.push_back(n);
        extend_tuple(tuple, chi_bound, n_max, out);
        tuple.pop_back();
    }
}

AbelianInvariants chain(std::vector<long> orders) {
    // Fold Z/n factors into divisor-chain form via gcd/lcm passes.
    std::vector<Int> v;
    for (long n : orders)
        if (n > 1) v.push_back(Int(n));
    for (bool again = true; again;) {
        again = false;
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j) {
                if (v[j] % v[i] != 0) {
                    Int g = boost::multiprecision::gcd(v[i], v[j]);
                    Int l = v[i] / g * v[j];
                    v[i] = g;
                    v[j] = l;
                    again = true;
                }
            }
        std::sort(v.begin(), v.end());
        v.erase(std::remove(v.begin(), v.end(), Int(1)), v.end());
    }
    return AbelianInvariants{std::move(v), 0};
}

}  // namespace

std::vector<std::vector<long>> admissible_free_products(const Rat& chi_bound, long n_max) {
    if (chi_bound >= 0) throw Error("chi bound must be negative");
    if (n_max < 2) throw Error("n_max must be >= 2");
    std::vector<std::vector<long>> out;
    std::vector<long> tuple;
    extend_tuple(tuple, chi_bound, n_max, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::array<AbelianInvariants, 4> expected_extension_abelianizations(long p, long q) {
    if (!TriangleSignature{p, q, q}.is_hyperbolic())
        throw NonHyperbolicSignature("(p,q,q) must be hyperbolic");
    long h = std::gcd(p, q);
    long h2 = std::gcd(2 * p, q);
    // i by parity, matching the computed abelianizations of the reflection
    // group: both relator families (xy)^p, (yz)^q=(xz)^q die abelianized iff
    // the exponent is even.
    int i = (q % 2 == 0) ? ((p % 2 == 0) ? 3 : 2) : 1;
    std::vector<long> elem2(i, 2);
    return {chain({q, h, 2}), chain(elem2), chain({h2, 2}), chain({q, 2})};
}

const std::vector<RefEntry>& reference_data() {
    static const std::vector<RefEntry> table = {
        {{3, 3, 4}, 2, 2}, {{3, 3, 6}, 3, 2}, {{2, 5, 5}, 5, 2},
        {{3, 5, 5}, 5, 3}, {{3, 3, 5}, 5, 5},
    };
    return table;
}

const std::vector<CommensurabilityEdge>& commensurability_edges() {
    // a is the larger group: chi(b) = index * chi(a).
    static const std::vector<CommensurabilityEdge> edges = {
        {{2, 3, 8}, {3, 3, 4}, 2},  {{2, 3, 8}, {2, 4, 8}, 3},  {{3, 3, 4}, {4, 4, 4}, 3},
        {{2, 4, 8}, {4, 4, 4}, 2},  {{2, 3, 10}, {3, 3, 5}, 2}, {{2, 3, 10}, {2, 5, 10}, 3},
        {{3, 3, 5}, {5, 5, 5}, 3},  {{2, 5, 10}, {5, 5, 5}, 2}, {{2, 3, 12}, {3, 3, 6}, 2},
        {{2, 4, 5}, {2, 5, 5}, 2},  {{2, 5, 6}, {3, 5, 5}, 2},
    };
    return edges;
}

}  // namespace fpr
