#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fpr/finite_group.hpp"
#include "fpr/presentation.hpp"

namespace fpr {

// One conjugacy class of homomorphisms P -> G. The representative is the
// canonical minimum of the conjugation orbit (first image is its conjugacy
// class representative, the rest minimized over the centralizer).
struct HomClass {
    std::vector<uint32_t> images;
    uint32_t image_order = 0;
    bool surjective = false;
    // PSL(2,q) targets only: canonical trace tuple of the nonempty products
    // of distinct generator images (2^k - 1 field indices), minimized over
    // per-generator sign flips.
    std::vector<uint16_t> character;
};

// All homomorphisms up to G-conjugacy, sorted by (image order, character,
// representative tuple). Requires generator count <= 4 and |G| <= 20000.
std::vector<HomClass> enumerate_homs(const Presentation& p, const FiniteGroup& g,
                                     bool parallel = true);
std::vector<HomClass> enumerate_homs_serial(const Presentation& p, const FiniteGroup& g);

// Distinct irreducible characters among hom classes into PSL(2,q).
// Irreducibility is decided exactly: no common eigenline over F_{q^2}.
long character_count(const Presentation& p, long q, bool parallel = true);

bool is_irreducible(const FiniteGroup& psl2, const std::vector<uint32_t>& images);

std::vector<uint16_t> character_tuple(const FiniteGroup& psl2,
                                      const std::vector<uint32_t>& images);

struct GroupOps {
    const FiniteGroup& g;
    using Elem = uint32_t;
    Elem identity() const { return g.identity(); }
    Elem mul(Elem a, Elem b) const { return g.mul(a, b); }
    Elem inv(Elem a) const { return g.inv(a); }
};

}  // namespace fpr
