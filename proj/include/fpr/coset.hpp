#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fpr/fingerprint.hpp"
#include "fpr/finite_group.hpp"
#include "fpr/presentation.hpp"

namespace fpr {

// A closed, collapsed, BFS-standardized coset table: every entry defined,
// every relator trivial on every coset, every subgroup generator fixing
// coset 0. Columns alternate g, g^-1.
struct CosetTable {
    Presentation presentation;
    std::vector<Word> subgroup_generators;
    long index = 0;
    std::vector<int32_t> table;  // index x 2*gens

    int32_t at(long coset, int gen, int sign) const {
        return table[coset * 2 * presentation.generator_count() + 2 * gen + (sign < 0 ? 1 : 0)];
    }
};

enum class TcStrategy {
    Hlt,        // relator scan with filling, row by row
    Deduction,  // define one entry at a time, propagate deductions
};

// Throws EnumerationOverflow when max_cosets live cosets are exceeded:
// "index not determined", never "infinite".
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_generators,
                        long max_cosets = 100000, TcStrategy strategy = TcStrategy::Hlt);

// Presentation of the subgroup on its Schreier generators, freely reduced,
// empty rewrites dropped, exact duplicates removed; no simplification.
Presentation reidemeister_schreier(const CosetTable& t);

// Coset table of the kernel of the homomorphism sending the generators of p
// to the given images (cosets = elements of the image closure).
CosetTable coset_table_from_hom(const Presentation& p, const FiniteGroup& g,
                                const std::vector<uint32_t>& images);

// Verifies the index-2 embedding of the (p,p,q) triangle group in the
// (2,p,2q) one: locates Z/2-kernels of the larger group, builds their
// Reidemeister-Schreier presentations, and matches abelian invariants and
// quotient fingerprints against the (p,p,q) presentation.
struct Index2Report {
    TriangleSignature parent_sig{}, subgroup_sig{};
    bool chi_consistent = false;
    int kernels_tested = 0;
    std::vector<unsigned> matched_maps;  // bitmask over parent generators
    std::optional<Presentation> matched_kernel;
    bool unique_match = false;
};

Index2Report verify_index2_embedding(long p, long q,
                                     const CatalogSpec& budget = CatalogSpec{7, 8, 0});

}  // namespace fpr
