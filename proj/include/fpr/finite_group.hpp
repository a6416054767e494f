#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fpr/finite_field.hpp"

namespace fpr {

// A finite group with indexed elements. Small groups carry a full
// multiplication table; PSL(2,q) is matrix-backed with canonicalized signs
// and an index lookup, since the table stops being reasonable past |G| of a
// few thousand.
class FiniteGroup {
public:
    static constexpr uint32_t kTableLimit = 4096;

    static FiniteGroup trivial();
    static FiniteGroup cyclic(long n);
    static FiniteGroup dihedral(long n);  // order 2n, n >= 2
    static FiniteGroup symmetric(int n);  // n <= 6
    static FiniteGroup alternating(int n);
    static FiniteGroup subgroup(const FiniteGroup& ambient, std::vector<uint32_t> elements,
                                std::string name);

    uint32_t size() const { return size_; }
    const std::string& name() const { return name_; }
    uint32_t identity() const { return id_; }

    uint32_t mul(uint32_t a, uint32_t b) const {
        return table_.empty() ? mat_mul_lookup(a, b) : table_[a * size_ + b];
    }
    uint32_t inv(uint32_t a) const { return inverse_[a]; }
    long order_of(uint32_t a) const { return orders_[a]; }

    const std::vector<uint32_t>& class_of() const { return class_id_; }
    const std::vector<uint32_t>& class_reps() const { return class_reps_; }
    const std::vector<uint32_t>& generators() const { return gens_; }
    std::vector<uint32_t> centralizer(uint32_t a) const;

    // Multiset of element orders, as (order, count) ascending; a cheap
    // conjugation-invariant key for image deduplication.
    std::vector<std::pair<long, long>> order_profile() const;

    bool is_psl2() const { return field_ != nullptr; }
    const FiniteField& field() const { return *field_; }
    std::array<uint16_t, 4> matrix_of(uint32_t a) const;  // psl2 only
    std::optional<uint32_t> index_of_matrix(const std::array<uint16_t, 4>& m) const;
    uint16_t trace_canonical(uint32_t a) const;  // min(t, -t) as field index

    friend FiniteGroup psl2_group(long q, long cap);

private:
    FiniteGroup() = default;
    void finalize();  // inverse, orders, generators, conjugacy classes
    uint32_t mat_mul_lookup(uint32_t a, uint32_t b) const;
    uint32_t mat_canonical_index(uint16_t a, uint16_t b, uint16_t c, uint16_t d) const;

    uint32_t size_ = 0;
    uint32_t id_ = 0;
    std::string name_;
    std::vector<uint16_t> table_;  // empty for the matrix backend

    std::shared_ptr<const FiniteField> field_;
    std::vector<uint32_t> mats_;  // canonical packed matrices, sorted
    std::unordered_map<uint32_t, uint32_t> mat_index_;

    std::vector<uint32_t> inverse_;
    std::vector<long> orders_;
    std::vector<uint32_t> class_id_;
    std::vector<uint32_t> class_reps_;
    std::vector<uint32_t> gens_;
};

// Elements of PSL(2,q) as unimodular matrices modulo +-I; order
// q(q^2-1)/gcd(2,q-1). Desk-scale cap on q.
FiniteGroup psl2_group(long q, long cap = 64);

// BFS closure of the given elements; sorted ascending.
std::vector<uint32_t> subgroup_closure(const FiniteGroup& g, std::vector<uint32_t> gens);

// Canonical minimum of the conjugation orbit of an image tuple. The hom
// search produces exactly these; exposed for invariant checks.
std::vector<uint32_t> canonicalize_hom_full(const FiniteGroup& g,
                                            const std::vector<uint32_t>& images);

}  // namespace fpr
