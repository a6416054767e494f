#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fpr/hom_search.hpp"
#include "fpr/presentation.hpp"
#include "fpr/smith.hpp"

namespace fpr {

struct CatalogSpec {
    long max_psl2_q = 13;    // PSL(2,q) over prime powers q <= this
    long max_dihedral = 16;  // D_n for 3 <= n <= this
    int max_sym_alt = 6;     // S_n for 3..this, A_n for 4..this; 0 disables
};

// Catalog target ids in fixed order: psl2:q, dihedral:n, sym:n, alt:n.
std::vector<std::string> catalog_ids(const CatalogSpec& spec);
const FiniteGroup& catalog_group(const std::string& id);

struct TargetCount {
    std::string id;
    long hom_classes = 0;
    long epi_classes = 0;
    friend bool operator==(const TargetCount& a, const TargetCount& b) {
        return a.id == b.id && a.hom_classes == b.hom_classes && a.epi_classes == b.epi_classes;
    }
};

struct Fingerprint {
    AbelianInvariants abelian;
    std::vector<TargetCount> targets;
    friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
        return a.abelian == b.abelian && a.targets == b.targets;
    }
};

Fingerprint fingerprint(const Presentation& p, const CatalogSpec& spec, bool parallel = true);

struct DistinguishResult {
    // "abelianization" or a catalog target id; empty when no separator found
    // within the budget.
    std::optional<std::string> separator;
    Fingerprint fp_a, fp_b;
};

DistinguishResult distinguish(const Presentation& a, const Presentation& b,
                              const CatalogSpec& spec, bool parallel = true);

// A finite quotient of H that the two-generator group Gamma does not have.
struct Witness {
    long q = 0;
    std::vector<uint32_t> h_images;            // element indices in PSL(2,q)
    std::vector<std::array<uint16_t, 4>> h_image_matrices;
    long image_order = 0;
    std::string transcript;
    uint64_t transcript_hash = 0;
};

struct WitnessOutcome {
    std::optional<Witness> witness;
    long scanned_up_to = 0;  // last prime power examined
    long images_tested = 0;
};

// Scans prime powers q ascending; for each irreducible hom class of H into
// PSL(2,q), closes the image and exhaustively tests whether Gamma surjects
// onto it. BudgetExhausted (empty witness) is inconclusive, not a refutation.
WitnessOutcome quotient_witness(const Presentation& h, const Presentation& gamma,
                                long q_budget, bool parallel = true);

// Recomputes the closure from the stored matrices and re-runs the exhaustive
// epimorphism search; true when the certificate stands.
bool verify_witness(const Witness& w, const Presentation& h, const Presentation& gamma);

uint64_t fnv1a(const std::string& data);

}  // namespace fpr
