#include "fpr/fingerprint.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace fpr {

std::vector<std::string> catalog_ids(const CatalogSpec& spec) {
    std::vector<std::string> ids;
    for (long q : prime_powers_up_to(spec.max_psl2_q)) ids.push_back("psl2:" + std::to_string(q));
    for (long n = 3; n <= spec.max_dihedral; ++n) ids.push_back("dihedral:" + std::to_string(n));
    for (int n = 3; n <= spec.max_sym_alt; ++n) ids.push_back("sym:" + std::to_string(n));
    for (int n = 4; n <= spec.max_sym_alt; ++n) ids.push_back("alt:" + std::to_string(n));
    return ids;
}

const FiniteGroup& catalog_group(const std::string& id) {
    static std::mutex mu;
    static std::map<std::string, FiniteGroup> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(id);
    if (it != cache.end()) return it->second;

    auto colon = id.find(':');
    if (colon == std::string::npos) throw Error("bad catalog id: " + id);
    std::string kind = id.substr(0, colon);
    long n = std::stol(id.substr(colon + 1));
    FiniteGroup g = [&]() {
        if (kind == "psl2") return psl2_group(n);
        if (kind == "dihedral") return FiniteGroup::dihedral(n);
        if (kind == "sym") return FiniteGroup::symmetric(static_cast<int>(n));
        if (kind == "alt") return FiniteGroup::alternating(static_cast<int>(n));
        if (kind == "trivial") return FiniteGroup::trivial();
        if (kind == "cyclic") return FiniteGroup::cyclic(n);
        throw Error("bad catalog id: " + id);
    }();
    return cache.emplace(id, std::move(g)).first->second;
}

Fingerprint fingerprint(const Presentation& p, const CatalogSpec& spec, bool parallel) {
    Fingerprint fp;
    fp.abelian = abelian_invariants(p);
    for (const std::string& id : catalog_ids(spec)) {
        const FiniteGroup& g = catalog_group(id);
        auto classes = enumerate_homs(p, g, parallel);
        long epis = 0;
        for (const HomClass& hc : classes)
            if (hc.surjective) ++epis;
        fp.targets.push_back({id, static_cast<long>(classes.size()), epis});
    }
    return fp;
}

DistinguishResult distinguish(const Presentation& a, const Presentation& b,
                              const CatalogSpec& spec, bool parallel) {
    DistinguishResult res;
    res.fp_a.abelian = abelian_invariants(a);
    res.fp_b.abelian = abelian_invariants(b);
    if (res.fp_a.abelian != res.fp_b.abelian) {
        res.separator = "abelianization";
        return res;
    }
    for (const std::string& id : catalog_ids(spec)) {
        const FiniteGroup& g = catalog_group(id);
        auto ca = enumerate_homs(a, g, parallel);
        auto cb = enumerate_homs(b, g, parallel);
        long ea = std::count_if(ca.begin(), ca.end(), [](auto& h) { return h.surjective; });
        long eb = std::count_if(cb.begin(), cb.end(), [](auto& h) { return h.surjective; });
        res.fp_a.targets.push_back({id, static_cast<long>(ca.size()), ea});
        res.fp_b.targets.push_back({id, static_cast<long>(cb.size()), eb});
        if (ca.size() != cb.size() || ea != eb) {
            res.separator = id;
            return res;
        }
    }
    return res;
}

uint64_t fnv1a(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

std::string iso_key(const FiniteGroup& g) {
    std::ostringstream os;
    os << g.size();
    for (auto [o, c] : g.order_profile()) os << ":" << o << "x" << c;
    return os.str();
}

std::string witness_transcript(const Presentation& h, const Presentation& gamma, long q,
                               const std::vector<std::array<uint16_t, 4>>& mats,
                               long image_order, long epi_classes) {
    std::ostringstream os;
    os << "q=" << q << ";H=" << print_presentation(h) << ";G=" << print_presentation(gamma)
       << ";image_order=" << image_order << ";epi_classes=" << epi_classes << ";images=";
    for (const auto& m : mats)
        os << "[" << m[0] << "," << m[1] << "," << m[2] << "," << m[3] << "]";
    return os.str();
}

}  // namespace

WitnessOutcome quotient_witness(const Presentation& h, const Presentation& gamma,
                                long q_budget, bool parallel) {
    WitnessOutcome out;
    for (long q : prime_powers_up_to(q_budget)) {
        out.scanned_up_to = q;
        const FiniteGroup& g = catalog_group("psl2:" + std::to_string(q));
        auto classes = enumerate_homs(h, g, parallel);
        std::set<std::string> tested_keys;
        for (const HomClass& hc : classes) {
            if (!is_irreducible(g, hc.images)) continue;
            std::vector<uint32_t> gen_elems;
            for (uint32_t x : hc.images)
                if (x != g.identity()) gen_elems.push_back(x);
            auto elems = subgroup_closure(g, gen_elems);
            FiniteGroup image = FiniteGroup::subgroup(g, elems, "image");
            std::string key = iso_key(image);
            if (!tested_keys.insert(key).second) continue;
            ++out.images_tested;

            auto gclasses = enumerate_homs(gamma, image, parallel);
            long epis = std::count_if(gclasses.begin(), gclasses.end(),
                                      [](auto& c) { return c.surjective; });
            if (epis == 0) {
                Witness w;
                w.q = q;
                w.h_images = hc.images;
                for (uint32_t x : hc.images) w.h_image_matrices.push_back(g.matrix_of(x));
                w.image_order = static_cast<long>(elems.size());
                w.transcript =
                    witness_transcript(h, gamma, q, w.h_image_matrices, w.image_order, 0);
                w.transcript_hash = fnv1a(w.transcript);
                out.witness = std::move(w);
                return out;
            }
        }
    }
    return out;
}

bool verify_witness(const Witness& w, const Presentation& h, const Presentation& gamma) {
    const FiniteGroup& g = catalog_group("psl2:" + std::to_string(w.q));
    // Matrices must resolve to elements and reproduce the stored images.
    std::vector<uint32_t> images;
    for (const auto& m : w.h_image_matrices) {
        auto idx = g.index_of_matrix(m);
        if (!idx) return false;
        images.push_back(*idx);
    }
    if (images != w.h_images) return false;
    // The images must satisfy every relator of H.
    GroupOps ops{g};
    for (const Word& rel : h.relators())
        if (evaluate_word(rel, images, ops, h.generator_count()) != g.identity()) return false;
    if (!is_irreducible(g, images)) return false;
    // Recompute the closure and re-run the exhaustive epimorphism search.
    std::vector<uint32_t> gen_elems;
    for (uint32_t x : images)
        if (x != g.identity()) gen_elems.push_back(x);
    auto elems = subgroup_closure(g, gen_elems);
    if (static_cast<long>(elems.size()) != w.image_order) return false;
    FiniteGroup image = FiniteGroup::subgroup(g, elems, "image");
    auto gclasses = enumerate_homs(gamma, image, false);
    long epis = std::count_if(gclasses.begin(), gclasses.end(),
                              [](auto& c) { return c.surjective; });
    if (epis != 0) return false;
    std::string transcript =
        witness_transcript(h, gamma, w.q, w.h_image_matrices, w.image_order, 0);
    return fnv1a(transcript) == w.transcript_hash && transcript == w.transcript;
}

}  // namespace fpr
