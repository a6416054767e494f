#pragma once

#include <string>
#include <vector>

#include "fpr/numeric.hpp"
#include "fpr/presentation.hpp"

namespace fpr {

struct IntegerMatrix {
    long rows = 0, cols = 0;
    std::vector<Int> entries;  // row-major

    IntegerMatrix() = default;
    IntegerMatrix(long r, long c) : rows(r), cols(c), entries(r * c, Int(0)) {}

    Int& at(long i, long j) { return entries[i * cols + j]; }
    const Int& at(long i, long j) const { return entries[i * cols + j]; }
};

struct SmithResult {
    std::vector<Int> invariants;  // nonzero diagonal d_1 | d_2 | ... (ones kept)
    long rank = 0;
};

// Divisor-chain form: no entry 1, each divides the next.
struct AbelianInvariants {
    std::vector<Int> torsion;
    long free_rank = 0;

    friend bool operator==(const AbelianInvariants& a, const AbelianInvariants& b) {
        return a.torsion == b.torsion && a.free_rank == b.free_rank;
    }
    friend bool operator!=(const AbelianInvariants& a, const AbelianInvariants& b) {
        return !(a == b);
    }
};

// One row per relator, one column per generator, entry = exponent sum.
IntegerMatrix relation_matrix(const Presentation& p);

SmithResult smith_normal_form(IntegerMatrix m);

AbelianInvariants abelian_invariants(const Presentation& p);

long b1(const Presentation& p);

// "1", "Z/3", "Z/2 x Z/4 x Z^2", ...
std::string to_string(const AbelianInvariants& inv);

// True when every torsion coefficient is 2 (and there is no free part).
bool is_elementary_2_group(const AbelianInvariants& inv);

}  // namespace fpr
