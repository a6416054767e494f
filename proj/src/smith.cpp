#include "fpr/smith.hpp"

#include <algorithm>
#include <utility>

namespace fpr {

IntegerMatrix relation_matrix(const Presentation& p) {
    IntegerMatrix m(static_cast<long>(p.relators().size()),
                    static_cast<long>(p.generator_count()));
    for (long i = 0; i < m.rows; ++i)
        for (long j = 0; j < m.cols; ++j)
            m.at(i, j) = p.relators()[i].exponent_sum(static_cast<int>(j));
    return m;
}

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

void swap_rows(IntegerMatrix& m, long a, long b) {
    if (a == b) return;
    for (long j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntegerMatrix& m, long a, long b) {
    if (a == b) return;
    for (long i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}

// Minimal-absolute-value pivot in the trailing submatrix, ties broken by
// position; keeps intermediate growth modest at these sizes.
bool find_pivot(const IntegerMatrix& m, long t, long& pi, long& pj) {
    bool found = false;
    Int best;
    for (long i = t; i < m.rows; ++i) {
        for (long j = t; j < m.cols; ++j) {
            const Int& e = m.at(i, j);
            if (e == 0) continue;
            Int a = abs_int(e);
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    }
    return found;
}

}  // namespace

SmithResult smith_normal_form(IntegerMatrix m) {
    long t = 0;
    const long lim = std::min(m.rows, m.cols);
    while (t < lim) {
        long pi, pj;
        if (!find_pivot(m, t, pi, pj)) break;
        swap_rows(m, t, pi);
        swap_cols(m, t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (long i = t + 1; i < m.rows; ++i) {
                if (m.at(i, t) == 0) continue;
                Int q = m.at(i, t) / m.at(t, t);
                for (long j = t; j < m.cols; ++j) m.at(i, j) -= q * m.at(t, j);
                if (m.at(i, t) != 0) {
                    swap_rows(m, t, i);  // remainder is a smaller pivot
                    dirty = true;
                }
            }
            for (long j = t + 1; j < m.cols; ++j) {
                if (m.at(t, j) == 0) continue;
                Int q = m.at(t, j) / m.at(t, t);
                for (long i = t; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, t);
                if (m.at(t, j) != 0) {
                    swap_cols(m, t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // Pivot must divide the rest of the submatrix; if not, fold the
            // offending row in and restart the reduction at this pivot.
            for (long i = t + 1; i < m.rows && !dirty; ++i) {
                for (long j = t + 1; j < m.cols; ++j) {
                    if (m.at(i, j) % m.at(t, t) != 0) {
                        for (long jj = t; jj < m.cols; ++jj) m.at(t, jj) += m.at(i, jj);
                        dirty = true;
                        break;
                    }
                }
            }
        }
        ++t;
    }

    SmithResult res;
    for (long i = 0; i < t; ++i) {
        Int d = m.at(i, i);
        if (d < 0) d = -d;
        res.invariants.push_back(d);
    }
    res.rank = t;
    // The inner loop already enforces the divisor chain, but normalize anyway.
    for (bool again = true; again;) {
        again = false;
        for (std::size_t i = 0; i + 1 < res.invariants.size(); ++i) {
            Int &a = res.invariants[i], &b = res.invariants[i + 1];
            if (b % a != 0) {
                Int g = boost::multiprecision::gcd(a, b);
                Int l = a / g * b;
                a = g;
                b = l;
                again = true;
            }
        }
    }
    return res;
}

AbelianInvariants abelian_invariants(const Presentation& p) {
    SmithResult s = smith_normal_form(relation_matrix(p));
    AbelianInvariants inv;
    for (const Int& d : s.invariants)
        if (d != 1) inv.torsion.push_back(d);
    inv.free_rank = static_cast<long>(p.generator_count()) - s.rank;
    return inv;
}

long b1(const Presentation& p) { return abelian_invariants(p).free_rank; }

std::string to_string(const AbelianInvariants& inv) {
    std::string out;
    for (const Int& d : inv.torsion) {
        if (!out.empty()) out += " x ";
        out += "Z/" + d.str();
    }
    if (inv.free_rank > 0) {
        if (!out.empty()) out += " x ";
        out += inv.free_rank == 1 ? "Z" : "Z^" + std::to_string(inv.free_rank);
    }
    return out.empty() ? "1" : out;
}

bool is_elementary_2_group(const AbelianInvariants& inv) {
    if (inv.free_rank != 0) return false;
    for (const Int& d : inv.torsion)
        if (d != 2) return false;
    return true;
}

}  // namespace fpr
