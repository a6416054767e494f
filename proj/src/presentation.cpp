#include "fpr/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fpr/numeric.hpp"

namespace fpr {

bool TriangleSignature::is_hyperbolic() const {
    if (p < 2 || q < 2 || r < 2) return false;
    // 1/p + 1/q + 1/r < 1  <=>  qr + pr + pq < pqr
    return q * r + p * r + p * q < p * q * r;
}

Presentation::Presentation(std::vector<std::string> generator_names, std::vector<Word> relators)
    : gens_(std::move(generator_names)), relators_(std::move(relators)) {
    std::set<std::string> seen;
    for (const auto& g : gens_) {
        if (g.empty()) throw Error("generator name must be nonempty");
        if (!seen.insert(g).second) throw Error("duplicate generator name: " + g);
    }
    for (const Word& w : relators_) {
        if (w.empty()) throw EmptyRelator("relator reduces to the identity");
        if (w.max_generator() >= static_cast<int>(gens_.size()))
            throw Error("relator uses an out-of-range generator index");
    }
}

std::string print_word(const Presentation& p, const Word& w) {
    std::string out;
    const auto& ls = w.letters();
    for (std::size_t i = 0; i < ls.size();) {
        std::size_t j = i;
        while (j < ls.size() && ls[j].gen == ls[i].gen && ls[j].sign == ls[i].sign) ++j;
        long count = static_cast<long>(j - i) * ls[i].sign;
        if (!out.empty()) out += "*";
        out += p.generator_names()[ls[i].gen];
        if (count != 1) out += "^" + std::to_string(count);
        i = j;
    }
    return out;
}

std::string print_presentation(const Presentation& p) {
    std::string out;
    for (std::size_t i = 0; i < p.generator_count(); ++i) {
        if (i) out += ", ";
        out += p.generator_names()[i];
    }
    out += "; ";
    for (std::size_t i = 0; i < p.relators().size(); ++i) {
        if (i) out += ", ";
        out += print_word(p, p.relators()[i]);
    }
    return out;
}

namespace {

Word gen_pow(int g, long k) { return Word::generator(g).pow(k); }

void require_hyperbolic(const TriangleSignature& sig) {
    if (!sig.is_hyperbolic())
        throw NonHyperbolicSignature("signature (" + std::to_string(sig.p) + "," +
                                     std::to_string(sig.q) + "," + std::to_string(sig.r) +
                                     ") is not hyperbolic");
}

}  // namespace

Presentation triangle_presentation(const TriangleSignature& sig) {
    require_hyperbolic(sig);
    Word a = Word::generator(0), b = Word::generator(1);
    return Presentation({"a", "b"}, {gen_pow(0, sig.p), gen_pow(1, sig.q), (a * b).pow(sig.r)});
}

Presentation coxeter_presentation(const TriangleSignature& sig) {
    require_hyperbolic(sig);
    Word x = Word::generator(0), y = Word::generator(1), z = Word::generator(2);
    return Presentation({"x", "y", "z"},
                        {gen_pow(0, 2), gen_pow(1, 2), gen_pow(2, 2), (x * y).pow(sig.p),
                         (y * z).pow(sig.q), (x * z).pow(sig.r)});
}

Index2Extensions index2_extensions(long p, long q) {
    TriangleSignature base{p, q, q};
    require_hyperbolic(base);

    // (i) base x Z/2, with the central involution as a third generator t.
    Word a = Word::generator(0), b = Word::generator(1), t = Word::generator(2);
    Presentation times2({"a", "b", "t"},
                        {gen_pow(0, p), gen_pow(1, q), (a * b).pow(q), gen_pow(2, 2),
                         a * t * a.inverse() * t.inverse(), b * t * b.inverse() * t.inverse()});

    // (ii) full reflection group.
    Presentation reflect = coxeter_presentation(base);

    // (iii) the bisected triangle: signature (2p, q, 2), emitted in sorted form
    // with the permutation recorded.
    std::array<long, 3> raw{2 * p, q, 2};
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return raw[i] < raw[j]; });
    TriangleSignature sorted{raw[idx[0]], raw[idx[1]], raw[idx[2]]};
    std::array<int, 3> perm{};
    for (int pos = 0; pos < 3; ++pos) perm[idx[pos]] = pos;
    Presentation rotate = triangle_presentation(sorted);

    // (iv) adjoin the reflection rho. A reflection conjugates each rotation to
    // an inverse rotation, so the action on the three-generator presentation
    // is a -> a^-1, b -> c^-1, c -> b^-1 (this fixes the relation abc).
    Word c = Word::generator(2), rho = Word::generator(3);
    Presentation swap_rho({"a", "b", "c", "r"},
                          {gen_pow(0, p), gen_pow(1, q), gen_pow(2, q), gen_pow(3, 2), a * b * c,
                           rho * a * rho * a, rho * b * rho * c, rho * c * rho * b});

    return Index2Extensions{std::move(times2), std::move(reflect), std::move(rotate),
                            std::move(swap_rho), sorted, perm};
}

Presentation signature_presentation(long genus, const std::vector<long>& cone_orders,
                                    long cusps) {
    if (genus < 0 || cusps < 0) throw Error("negative genus or cusp count");
    for (long m : cone_orders)
        if (m < 2) throw Error("cone orders must be >= 2");
    // chi = 2 - 2g - s - sum(1 - 1/m_i) < 0
    Rat chi = Rat(2 - 2 * genus - cusps);
    for (long m : cone_orders) chi -= Rat(m - 1, m);
    if (chi >= 0)
        throw NonHyperbolicSignature("orbifold Euler characteristic is " + rat_to_string(chi));

    std::vector<std::string> names;
    std::vector<Word> relators;
    Word long_rel;
    for (long i = 0; i < genus; ++i) {
        names.push_back("a" + std::to_string(i + 1));
        names.push_back("b" + std::to_string(i + 1));
        int ai = static_cast<int>(names.size()) - 2, bi = ai + 1;
        Word A = Word::generator(ai), B = Word::generator(bi);
        long_rel = long_rel * A * B * A.inverse() * B.inverse();
    }
    for (std::size_t i = 0; i < cone_orders.size(); ++i) {
        names.push_back("x" + std::to_string(i + 1));
        int xi = static_cast<int>(names.size()) - 1;
        relators.push_back(gen_pow(xi, cone_orders[i]));
        long_rel = long_rel * Word::generator(xi);
    }
    for (long i = 0; i < cusps; ++i) {
        names.push_back("c" + std::to_string(i + 1));
        long_rel = long_rel * Word::generator(static_cast<int>(names.size()) - 1);
    }
    if (!long_rel.empty()) relators.push_back(long_rel);
    return Presentation(std::move(names), std::move(relators));
}

}  // namespace fpr
