#include "fpr/characters.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fpr {

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
    return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
                x.c * y.b + x.d * y.d};
}

CycNumber mat_trace(const Mat2& m) { return m.a + m.d; }

CycNumber mat_det(const Mat2& m) { return m.a * m.d - m.b * m.c; }

namespace {

// Canonical representative of {M, -M}: all entries at the fixed conductor,
// first nonzero coefficient positive.
struct PMat {
    Mat2 m;
    std::vector<Rat> key;
};

PMat canonical(Mat2 m, long conductor) {
    m.a = m.a.lifted_to(conductor);
    m.b = m.b.lifted_to(conductor);
    m.c = m.c.lifted_to(conductor);
    m.d = m.d.lifted_to(conductor);
    std::vector<Rat> key;
    for (const CycNumber* e : {&m.a, &m.b, &m.c, &m.d})
        key.insert(key.end(), e->coeffs().begin(), e->coeffs().end());
    for (const Rat& x : key) {
        if (x == 0) continue;
        if (x < 0) {
            m.a = -m.a;
            m.b = -m.b;
            m.c = -m.c;
            m.d = -m.d;
            for (Rat& y : key) y = -y;
        }
        break;
    }
    return PMat{std::move(m), std::move(key)};
}

Mat2 identity_mat() {
    CycNumber one = CycNumber::from_rat(1), zero;
    return Mat2{one, zero, zero, one};
}

}  // namespace

std::optional<std::vector<Mat2>> projective_closure(const Mat2& a, const Mat2& b, long cap,
                                                    long conductor) {
    std::vector<Mat2> elems;
    std::map<std::vector<Rat>, int> seen;
    std::vector<int> frontier;
    auto push = [&](Mat2 m) -> bool {
        PMat pm = canonical(std::move(m), conductor);
        auto [it, fresh] = seen.emplace(std::move(pm.key), static_cast<int>(elems.size()));
        if (fresh) {
            elems.push_back(std::move(pm.m));
            frontier.push_back(it->second);
        }
        return fresh;
    };
    push(identity_mat());
    // Generators have finite order, so closing under right multiplication by
    // a and b reaches the whole subgroup.
    std::size_t head = 0;
    while (head < frontier.size()) {
        int idx = frontier[head++];
        Mat2 cur = elems[idx];
        for (const Mat2* g : {&a, &b}) {
            push(mat_mul(cur, *g));
            if (static_cast<long>(elems.size()) > cap) return std::nullopt;
        }
    }
    return elems;
}

long projective_order(const Mat2& m, long conductor, long cap) {
    PMat id = canonical(identity_mat(), conductor);
    Mat2 acc = m;
    for (long k = 1; k <= cap; ++k) {
        if (canonical(acc, conductor).key == id.key) return k;
        acc = mat_mul(acc, m);
    }
    throw Error("projective_order: cap exceeded");
}

TraceTriple make_triple(const TriangleSignature& sig, long ja, long jb, long jc) {
    return TraceTriple{ja,
                       jb,
                       jc,
                       CycNumber::two_cos(ja, sig.p),
                       CycNumber::two_cos(jb, sig.q),
                       CycNumber::two_cos(jc, sig.r)};
}

std::vector<TraceTriple> enumerate_triples(const TriangleSignature& sig) {
    if (!sig.is_hyperbolic()) throw NonHyperbolicSignature("enumerate_triples");
    std::vector<TraceTriple> out;
    out.reserve((sig.p - 1) * (sig.q - 1) * (sig.r - 1));
    for (long ja = 1; ja < sig.p; ++ja)
        for (long jb = 1; jb < sig.q; ++jb)
            for (long jc = 1; jc < sig.r; ++jc) out.push_back(make_triple(sig, ja, jb, jc));
    return out;
}

CycNumber kappa(const TraceTriple& t) {
    return t.alpha * t.alpha + t.beta * t.beta + t.gamma * t.gamma -
           t.alpha * t.beta * t.gamma - CycNumber::from_rat(4);
}

std::pair<Mat2, Mat2> realize_matrices(const TraceTriple& t, const TriangleSignature& sig) {
    CycNumber zero, one = CycNumber::from_rat(1);
    CycNumber za = CycNumber::root_of_unity(2 * sig.p, t.ja);
    CycNumber za_inv = CycNumber::root_of_unity(2 * sig.p, -t.ja);
    auto build = [&](long jb) {
        CycNumber zb = CycNumber::root_of_unity(2 * sig.q, jb);
        CycNumber zb_inv = CycNumber::root_of_unity(2 * sig.q, -jb);
        CycNumber z = t.gamma - (za * zb + za_inv * zb_inv);
        Mat2 a{za, one, zero, za_inv};
        Mat2 b{zb, zero, z, zb_inv};
        return std::make_pair(a, b);
    };
    auto [a, b] = build(t.jb);
    if (kappa(t).is_zero() && !b.c.is_zero()) {
        // kappa factors over the two diagonal pairings; pick the one with
        // vanishing off-diagonal entry as the reducible witness.
        auto [a2, b2] = build(-t.jb);
        if (b2.c.is_zero()) return {a2, b2};
    }
    return {a, b};
}

namespace {

long closure_cap(const TriangleSignature& sig) {
    long l = std::lcm(std::lcm(sig.p, sig.q), sig.r);
    return std::max<long>(60, 4 * l);
}

long group_conductor(const TriangleSignature& sig) {
    return std::lcm(std::lcm(2 * sig.p, 2 * sig.q), 2 * sig.r);
}

FiniteImageType finite_type(const std::vector<Mat2>& elems, long conductor) {
    long n = static_cast<long>(elems.size());
    long max_order = 1;
    std::vector<long> orders;
    orders.reserve(elems.size());
    for (const Mat2& m : elems) {
        long o = projective_order(m, conductor, n + 1);
        orders.push_back(o);
        max_order = std::max(max_order, o);
    }
    auto has_order = [&](long o) {
        return std::find(orders.begin(), orders.end(), o) != orders.end();
    };
    if (n == 12 && !has_order(6)) return {12, "A4"};
    if (n == 24 && !has_order(12)) return {24, "S4"};
    if (n == 60 && !has_order(30)) return {60, "A5"};
    if (n % 2 == 0 && has_order(n / 2)) return {n, "D" + std::to_string(n / 2)};
    throw Error("unexpected finite projective image of order " + std::to_string(n));
}

}  // namespace

Classification classify(const TraceTriple& t, const TriangleSignature& sig) {
    if (kappa(t).is_zero()) return {CharKind::Reducible, std::nullopt};
    auto [a, b] = realize_matrices(t, sig);
    long conductor = group_conductor(sig);
    auto closure = projective_closure(a, b, closure_cap(sig), conductor);
    if (!closure) return {CharKind::Dense, std::nullopt};
    return {CharKind::Finite, finite_type(*closure, conductor)};
}

namespace {

std::array<long, 3> fold(const TriangleSignature& sig, std::array<long, 3> j, int flip) {
    // flip 1: (-a,-b,c), 2: (-a,b,-c), 3: (a,-b,-c); negating a trace sends
    // the index j to m - j.
    if (flip == 1 || flip == 2) j[0] = sig.p - j[0];
    if (flip == 1 || flip == 3) j[1] = sig.q - j[1];
    if (flip == 2 || flip == 3) j[2] = sig.r - j[2];
    return j;
}

std::vector<std::array<long, 3>> flip_orbit(const TriangleSignature& sig,
                                            std::array<long, 3> j) {
    std::set<std::array<long, 3>> orbit{j};
    for (int f = 1; f <= 3; ++f) orbit.insert(fold(sig, j, f));
    return {orbit.begin(), orbit.end()};
}

}  // namespace

Census character_census(const TriangleSignature& sig, bool parallel) {
    if (!sig.is_hyperbolic()) throw NonHyperbolicSignature("character_census");
    std::set<std::array<long, 3>> reps;
    for (long ja = 1; ja < sig.p; ++ja)
        for (long jb = 1; jb < sig.q; ++jb)
            for (long jc = 1; jc < sig.r; ++jc)
                reps.insert(flip_orbit(sig, {ja, jb, jc}).front());

    std::vector<std::array<long, 3>> rep_list(reps.begin(), reps.end());
    std::vector<CharacterClass> classes(rep_list.size(),
                                        CharacterClass{TraceTriple{0, 0, 0, {}, {}, {}},
                                                       {},
                                                       {},
                                                       {CharKind::Reducible, std::nullopt}});
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (long i = 0; i < static_cast<long>(rep_list.size()); ++i) {
        const auto& j = rep_list[i];
        TraceTriple t = make_triple(sig, j[0], j[1], j[2]);
        CharacterClass cc{t, flip_orbit(sig, j), kappa(t), classify(t, sig)};
        classes[i] = std::move(cc);
    }
    (void)parallel;
    return Census{sig, std::move(classes)};
}

Census character_census_serial(const TriangleSignature& sig) {
    return character_census(sig, false);
}

RigidityReport rigidity_report(const TriangleSignature& sig, bool parallel) {
    Census census = character_census(sig, parallel);
    TraceTriple geo = make_triple(sig, 1, 1, 1);
    RigidityReport rep;
    rep.sig = sig;
    rep.n_k = subfield_degree({geo.alpha, geo.beta, geo.gamma});

    std::vector<int> dense;
    std::map<std::array<long, 3>, int> dense_pos;  // census index by canonical rep
    for (int i = 0; i < static_cast<int>(census.classes.size()); ++i) {
        if (census.classes[i].cls.kind == CharKind::Dense) {
            dense_pos[{census.classes[i].rep.ja, census.classes[i].rep.jb,
                       census.classes[i].rep.jc}] = static_cast<int>(dense.size());
            dense.push_back(i);
        }
    }
    rep.dense_count = static_cast<long>(dense.size());

    // Union-find over dense classes under the coordinate-wise Galois action.
    std::vector<int> parent(dense.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    long n0 = group_conductor(sig);
    auto act = [&](long t, long j, long two_m) {
        long k = (j * t) % two_m;
        return k > two_m / 2 ? two_m - k : k;
    };
    for (std::size_t di = 0; di < dense.size(); ++di) {
        const CharacterClass& cc = census.classes[dense[di]];
        for (long t = 1; t < n0; ++t) {
            if (std::gcd(t, n0) != 1) continue;
            std::array<long, 3> img{act(t, cc.rep.ja, 2 * sig.p), act(t, cc.rep.jb, 2 * sig.q),
                                    act(t, cc.rep.jc, 2 * sig.r)};
            auto canon = flip_orbit(sig, img).front();
            auto it = dense_pos.find(canon);
            if (it == dense_pos.end())
                throw Error("Galois image of a dense class is not dense");
            int a = find(static_cast<int>(di)), b = find(it->second);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::map<int, std::vector<int>> orbits;
    for (std::size_t di = 0; di < dense.size(); ++di)
        orbits[find(static_cast<int>(di))].push_back(dense[di]);
    for (auto& [root, members] : orbits) rep.galois_orbits.push_back(members);
    rep.galois_rigid = rep.dense_count == rep.n_k;
    return rep;
}

}  // namespace fpr
