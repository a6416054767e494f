#include "fpr/hom_search.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fpr {

namespace {

struct SearchPlan {
    long k = 0;                                  // generator count
    std::vector<long> power_constraint;          // gcd of pure-power exponents, 0 = none
    std::vector<std::vector<int>> relators_at;   // relator indices fully known at depth d
    std::vector<int> forced_at;                  // relator solving generator d, or -1
    std::vector<std::vector<uint32_t>> cands;    // candidate images per depth
};

SearchPlan make_plan(const Presentation& p, const FiniteGroup& g) {
    SearchPlan plan;
    plan.k = static_cast<long>(p.generator_count());
    if (plan.k > 4) throw CapExceeded("hom search limited to 4 generators");
    if (g.size() > 20000) throw CapExceeded("hom search target too large");

    plan.power_constraint.assign(plan.k, 0);
    for (const Word& w : p.relators()) {
        bool pure = true;
        int gen = w.letters().front().gen;
        for (const Letter& l : w.letters())
            if (l.gen != gen) pure = false;
        if (pure) {
            long e = std::abs(w.exponent_sum(gen));
            plan.power_constraint[gen] = std::gcd(plan.power_constraint[gen], e);
        }
    }

    plan.relators_at.assign(plan.k, {});
    plan.forced_at.assign(plan.k, -1);
    for (int ri = 0; ri < static_cast<int>(p.relators().size()); ++ri) {
        int d = p.relators()[ri].max_generator();
        plan.relators_at[d].push_back(ri);
        if (d > 0 && plan.forced_at[d] == -1 && p.relators()[ri].occurrences(d) == 1)
            plan.forced_at[d] = ri;
    }

    plan.cands.resize(plan.k);
    for (long d = 0; d < plan.k; ++d) {
        long e = plan.power_constraint[d];
        if (d == 0) {
            for (uint32_t r : g.class_reps())
                if (e == 0 || e % g.order_of(r) == 0) plan.cands[d].push_back(r);
        } else if (plan.forced_at[d] == -1) {
            for (uint32_t x = 0; x < g.size(); ++x)
                if (e == 0 || e % g.order_of(x) == 0) plan.cands[d].push_back(x);
        }
        // depths with a forced relator get their image solved, not scanned
    }
    return plan;
}

// Solve relator = prefix * gen^s * suffix = 1 for the generator image.
uint32_t solve_forced(const Word& rel, int gen, const std::vector<uint32_t>& images,
                      const FiniteGroup& g) {
    uint32_t pre = g.identity(), post = g.identity();
    int sign = 0;
    bool before = true;
    for (const Letter& l : rel.letters()) {
        if (l.gen == gen) {
            sign = l.sign;
            before = false;
            continue;
        }
        uint32_t img = l.sign > 0 ? images[l.gen] : g.inv(images[l.gen]);
        if (before)
            pre = g.mul(pre, img);
        else
            post = g.mul(post, img);
    }
    // pre * x^sign * post = id
    uint32_t v = g.mul(g.inv(pre), g.inv(post));
    return sign > 0 ? v : g.inv(v);
}

bool relators_hold(const Presentation& p, const std::vector<int>& which,
                   const std::vector<uint32_t>& images, const FiniteGroup& g) {
    GroupOps ops{g};
    for (int ri : which) {
        const Word& w = p.relators()[ri];
        uint32_t acc = g.identity();
        for (const Letter& l : w.letters())
            acc = g.mul(acc, l.sign > 0 ? images[l.gen] : g.inv(images[l.gen]));
        if (acc != g.identity()) return false;
    }
    (void)ops;
    return true;
}

void dfs(const Presentation& p, const FiniteGroup& g, const SearchPlan& plan, long depth,
         std::vector<uint32_t>& images, const std::vector<uint32_t>& centralizer0,
         std::set<std::vector<uint32_t>>& found) {
    if (depth == plan.k) {
        // Canonical form: first image is already the least element of its
        // class; minimize the rest over its centralizer.
        std::vector<uint32_t> best = images;
        std::vector<uint32_t> cur(images.size());
        for (uint32_t c : centralizer0) {
            uint32_t ci = g.inv(c);
            cur[0] = images[0];
            for (std::size_t i = 1; i < images.size(); ++i)
                cur[i] = g.mul(g.mul(c, images[i]), ci);
            if (cur < best) best = cur;
        }
        found.insert(std::move(best));
        return;
    }
    if (plan.forced_at[depth] != -1) {
        images[depth] = solve_forced(p.relators()[plan.forced_at[depth]],
                                     static_cast<int>(depth), images, g);
        if (relators_hold(p, plan.relators_at[depth], images, g))
            dfs(p, g, plan, depth + 1, images, centralizer0, found);
        return;
    }
    for (uint32_t x : plan.cands[depth]) {
        images[depth] = x;
        if (relators_hold(p, plan.relators_at[depth], images, g))
            dfs(p, g, plan, depth + 1, images, centralizer0, found);
    }
}

}  // namespace

std::vector<HomClass> enumerate_homs(const Presentation& p, const FiniteGroup& g,
                                     bool parallel) {
    SearchPlan plan = make_plan(p, g);
    if (plan.k == 0) throw CapExceeded("hom search needs at least one generator");

    const auto& roots = plan.cands[0];
    std::vector<std::vector<uint32_t>> cents(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) cents[i] = g.centralizer(roots[i]);

    std::vector<std::set<std::vector<uint32_t>>> per_root(roots.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (long i = 0; i < static_cast<long>(roots.size()); ++i) {
        std::vector<uint32_t> images(plan.k, g.identity());
        images[0] = roots[i];
        if (relators_hold(p, plan.relators_at[0], images, g)) {
            if (plan.k == 1) {
                per_root[i].insert(images);
            } else {
                dfs(p, g, plan, 1, images, cents[i], per_root[i]);
            }
        }
    }
    (void)parallel;

    std::vector<HomClass> classes;
    for (auto& set : per_root) {
        for (const auto& images : set) {
            HomClass hc;
            hc.images = images;
            std::vector<uint32_t> gen_elems;
            for (uint32_t x : images)
                if (x != g.identity()) gen_elems.push_back(x);
            hc.image_order =
                static_cast<uint32_t>(subgroup_closure(g, gen_elems).size());
            hc.surjective = hc.image_order == g.size();
            if (g.is_psl2()) hc.character = character_tuple(g, images);
            classes.push_back(std::move(hc));
        }
    }
    std::sort(classes.begin(), classes.end(), [](const HomClass& a, const HomClass& b) {
        if (a.image_order != b.image_order) return a.image_order < b.image_order;
        if (a.character != b.character) return a.character < b.character;
        return a.images < b.images;
    });
    return classes;
}

std::vector<HomClass> enumerate_homs_serial(const Presentation& p, const FiniteGroup& g) {
    return enumerate_homs(p, g, false);
}

namespace {

struct ExtField {
    std::shared_ptr<const FiniteField> ext;
    std::vector<uint16_t> embed;  // base index -> ext index
};

const ExtField& ext_field_for(const FiniteField& base) {
    static std::mutex mu;
    static std::map<long, ExtField> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(base.q());
    if (it != cache.end()) return it->second;
    ExtField ef;
    ef.ext = std::make_shared<FiniteField>(base.q() * base.q(), base.q() * base.q());
    ef.embed = embed_into_square(base, *ef.ext);
    return cache.emplace(base.q(), std::move(ef)).first->second;
}

}  // namespace

bool is_irreducible(const FiniteGroup& psl2, const std::vector<uint32_t>& images) {
    const FiniteField& base = psl2.field();
    uint32_t id = psl2.identity();
    uint32_t pivot = id;
    for (uint32_t x : images)
        if (x != id) {
            pivot = x;
            break;
        }
    if (pivot == id) return false;  // trivial image

    const ExtField& ef = ext_field_for(base);
    const FiniteField& F = *ef.ext;
    auto lift = [&](uint32_t elem) {
        auto m = psl2.matrix_of(elem);
        return std::array<uint16_t, 4>{ef.embed[m[0]], ef.embed[m[1]], ef.embed[m[2]],
                                       ef.embed[m[3]]};
    };
    auto M = lift(pivot);
    uint16_t tr = F.add(M[0], M[3]);
    // Eigenlines of the pivot are the only candidates for a common eigenline.
    std::vector<std::array<uint16_t, 2>> lines;
    for (long lam = 0; lam < F.q(); ++lam) {
        uint16_t l = static_cast<uint16_t>(lam);
        // l^2 - tr*l + 1 = 0
        uint16_t val = F.add(F.sub(F.mul(l, l), F.mul(tr, l)), 1);
        if (val != 0) continue;
        std::array<uint16_t, 2> v{M[1], F.sub(l, M[0])};
        if (v[0] == 0 && v[1] == 0) v = {F.sub(l, M[3]), M[2]};
        lines.push_back(v);
    }
    for (const auto& v : lines) {
        bool common = true;
        for (uint32_t x : images) {
            if (x == id) continue;
            auto A = lift(x);
            uint16_t u0 = F.add(F.mul(A[0], v[0]), F.mul(A[1], v[1]));
            uint16_t u1 = F.add(F.mul(A[2], v[0]), F.mul(A[3], v[1]));
            // u parallel to v?
            if (F.sub(F.mul(u0, v[1]), F.mul(u1, v[0])) != 0) {
                common = false;
                break;
            }
        }
        if (common) return false;
    }
    return true;
}

std::vector<uint16_t> character_tuple(const FiniteGroup& psl2,
                                      const std::vector<uint32_t>& images) {
    const FiniteField& f = psl2.field();
    int k = static_cast<int>(images.size());
    int masks = (1 << k) - 1;
    // Traces must come from consistent SL2 lifts: multiply the stored lift
    // matrices, not the sign-canonicalized group elements, or the tuple stops
    // being conjugation-invariant.
    auto mat_mul = [&](const std::array<uint16_t, 4>& x, const std::array<uint16_t, 4>& y) {
        return std::array<uint16_t, 4>{
            f.add(f.mul(x[0], y[0]), f.mul(x[1], y[2])),
            f.add(f.mul(x[0], y[1]), f.mul(x[1], y[3])),
            f.add(f.mul(x[2], y[0]), f.mul(x[3], y[2])),
            f.add(f.mul(x[2], y[1]), f.mul(x[3], y[3]))};
    };
    std::vector<uint16_t> raw(masks);
    for (int m = 1; m <= masks; ++m) {
        std::array<uint16_t, 4> prod{1, 0, 0, 1};
        for (int i = 0; i < k; ++i)
            if (m & (1 << i)) prod = mat_mul(prod, psl2.matrix_of(images[i]));
        raw[m - 1] = f.add(prod[0], prod[3]);
    }
    std::vector<uint16_t> best;
    for (int eps = 0; eps < (1 << k); ++eps) {
        std::vector<uint16_t> cur(masks);
        for (int m = 1; m <= masks; ++m) {
            bool flip = __builtin_popcount(static_cast<unsigned>(m & eps)) % 2 == 1;
            cur[m - 1] = flip ? f.neg(raw[m - 1]) : raw[m - 1];
        }
        if (best.empty() || cur < best) best = std::move(cur);
    }
    return best;
}

long character_count(const Presentation& p, long q, bool parallel) {
    FiniteGroup g = psl2_group(q, 64);
    auto classes = enumerate_homs(p, g, parallel);
    std::set<std::vector<uint16_t>> chars;
    for (const HomClass& hc : classes)
        if (is_irreducible(g, hc.images)) chars.insert(hc.character);
    return static_cast<long>(chars.size());
}

}  // namespace fpr
