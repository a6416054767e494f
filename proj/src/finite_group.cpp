#include "fpr/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace fpr {

namespace {

uint32_t pack(uint16_t a, uint16_t b, uint16_t c, uint16_t d) {
    return (static_cast<uint32_t>(a) << 18) | (static_cast<uint32_t>(b) << 12) |
           (static_cast<uint32_t>(c) << 6) | d;
}

std::array<uint16_t, 4> unpack(uint32_t m) {
    return {static_cast<uint16_t>((m >> 18) & 63), static_cast<uint16_t>((m >> 12) & 63),
            static_cast<uint16_t>((m >> 6) & 63), static_cast<uint16_t>(m & 63)};
}

uint32_t canonical_packed(const FiniteField& f, uint16_t a, uint16_t b, uint16_t c,
                          uint16_t d) {
    uint32_t k1 = pack(a, b, c, d);
    uint32_t k2 = pack(f.neg(a), f.neg(b), f.neg(c), f.neg(d));
    return std::min(k1, k2);
}

// Permutations of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> all_perms(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

bool perm_even(const std::vector<int>& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 == 0;
}

}  // namespace

uint32_t FiniteGroup::mat_canonical_index(uint16_t a, uint16_t b, uint16_t c,
                                          uint16_t d) const {
    auto it = mat_index_.find(canonical_packed(*field_, a, b, c, d));
    return it->second;
}

uint32_t FiniteGroup::mat_mul_lookup(uint32_t x, uint32_t y) const {
    const FiniteField& f = *field_;
    auto m1 = unpack(mats_[x]);
    auto m2 = unpack(mats_[y]);
    uint16_t a = f.add(f.mul(m1[0], m2[0]), f.mul(m1[1], m2[2]));
    uint16_t b = f.add(f.mul(m1[0], m2[1]), f.mul(m1[1], m2[3]));
    uint16_t c = f.add(f.mul(m1[2], m2[0]), f.mul(m1[3], m2[2]));
    uint16_t d = f.add(f.mul(m1[2], m2[1]), f.mul(m1[3], m2[3]));
    return mat_canonical_index(a, b, c, d);
}

std::array<uint16_t, 4> FiniteGroup::matrix_of(uint32_t a) const { return unpack(mats_[a]); }

std::optional<uint32_t> FiniteGroup::index_of_matrix(const std::array<uint16_t, 4>& m) const {
    auto it = mat_index_.find(canonical_packed(*field_, m[0], m[1], m[2], m[3]));
    if (it == mat_index_.end()) return std::nullopt;
    return it->second;
}

uint16_t FiniteGroup::trace_canonical(uint32_t a) const {
    auto m = unpack(mats_[a]);
    uint16_t t = field_->add(m[0], m[3]);
    return std::min(t, field_->neg(t));
}

void FiniteGroup::finalize() {
    // Inverses.
    inverse_.assign(size_, 0);
    if (!table_.empty()) {
        for (uint32_t a = 0; a < size_; ++a)
            for (uint32_t b = 0; b < size_; ++b)
                if (mul(a, b) == id_) {
                    inverse_[a] = b;
                    break;
                }
    } else {
        const FiniteField& f = *field_;
        for (uint32_t a = 0; a < size_; ++a) {
            auto m = unpack(mats_[a]);
            inverse_[a] = mat_canonical_index(m[3], f.neg(m[1]), f.neg(m[2]), m[0]);
        }
    }

    orders_.assign(size_, 0);
    for (uint32_t a = 0; a < size_; ++a) {
        long o = 1;
        uint32_t x = a;
        while (x != id_) {
            x = mul(x, a);
            ++o;
        }
        orders_[a] = o;
    }

    // Deterministic generating set: grow greedily by the least element
    // outside the current closure.
    gens_.clear();
    std::vector<uint32_t> closure{id_};
    std::vector<char> in_closure(size_, 0);
    in_closure[id_] = 1;
    while (closure.size() < size_) {
        uint32_t next = 0;
        while (in_closure[next]) ++next;
        gens_.push_back(next);
        std::vector<uint32_t> frontier{next};
        in_closure[next] = 1;
        closure.push_back(next);
        while (!frontier.empty()) {
            uint32_t cur = frontier.back();
            frontier.pop_back();
            for (uint32_t g : gens_) {
                for (uint32_t y : {mul(cur, g), mul(g, cur)}) {
                    if (!in_closure[y]) {
                        in_closure[y] = 1;
                        closure.push_back(y);
                        frontier.push_back(y);
                    }
                }
            }
        }
    }

    // Conjugacy classes: orbits under conjugation by the generating set.
    class_id_.assign(size_, size_);
    class_reps_.clear();
    for (uint32_t e = 0; e < size_; ++e) {
        if (class_id_[e] != size_) continue;
        class_reps_.push_back(e);
        std::vector<uint32_t> frontier{e};
        class_id_[e] = e;
        while (!frontier.empty()) {
            uint32_t cur = frontier.back();
            frontier.pop_back();
            for (uint32_t g : gens_) {
                uint32_t conj = mul(mul(g, cur), inverse_[g]);
                if (class_id_[conj] == size_) {
                    class_id_[conj] = e;
                    frontier.push_back(conj);
                }
            }
        }
    }
}

std::vector<uint32_t> FiniteGroup::centralizer(uint32_t a) const {
    std::vector<uint32_t> out;
    for (uint32_t x = 0; x < size_; ++x)
        if (mul(x, a) == mul(a, x)) out.push_back(x);
    return out;
}

std::vector<std::pair<long, long>> FiniteGroup::order_profile() const {
    std::map<long, long> counts;
    for (uint32_t a = 0; a < size_; ++a) ++counts[orders_[a]];
    return {counts.begin(), counts.end()};
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(long n) {
    if (n < 1 || n > kTableLimit) throw CapExceeded("cyclic group size out of range");
    FiniteGroup g;
    g.size_ = static_cast<uint32_t>(n);
    g.name_ = "Z" + std::to_string(n);
    g.id_ = 0;
    g.table_.resize(n * n);
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b) g.table_[a * n + b] = static_cast<uint16_t>((a + b) % n);
    g.finalize();
    return g;
}

FiniteGroup FiniteGroup::dihedral(long n) {
    if (n < 2 || 2 * n > kTableLimit) throw CapExceeded("dihedral parameter out of range");
    FiniteGroup g;
    g.size_ = static_cast<uint32_t>(2 * n);
    g.name_ = "D" + std::to_string(n);
    g.id_ = 0;
    g.table_.resize(g.size_ * g.size_);
    auto enc = [n](long e, long i) { return static_cast<uint16_t>(e * n + i); };
    for (long e1 = 0; e1 < 2; ++e1)
        for (long i1 = 0; i1 < n; ++i1)
            for (long e2 = 0; e2 < 2; ++e2)
                for (long i2 = 0; i2 < n; ++i2) {
                    // (s^e1 r^i1)(s^e2 r^i2), with r s = s r^-1
                    long e = (e1 + e2) % 2;
                    long i = e2 == 0 ? (i1 + i2) % n : ((i2 - i1) % n + n) % n;
                    g.table_[(e1 * n + i1) * g.size_ + (e2 * n + i2)] = enc(e, i);
                }
    g.finalize();
    return g;
}

FiniteGroup FiniteGroup::symmetric(int n) {
    if (n < 1 || n > 7) throw CapExceeded("symmetric group degree out of range");
    auto perms = all_perms(n);
    std::vector<uint16_t> table(perms.size() * perms.size());
    std::map<std::vector<int>, uint32_t> index;
    for (uint32_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
    for (uint32_t a = 0; a < perms.size(); ++a)
        for (uint32_t b = 0; b < perms.size(); ++b) {
            std::vector<int> comp(n);
            for (int x = 0; x < n; ++x) comp[x] = perms[a][perms[b][x]];
            table[a * perms.size() + b] = static_cast<uint16_t>(index.at(comp));
        }
    FiniteGroup g;
    g.size_ = static_cast<uint32_t>(perms.size());
    g.name_ = "S" + std::to_string(n);
    g.id_ = 0;
    g.table_ = std::move(table);
    g.finalize();
    return g;
}

FiniteGroup FiniteGroup::alternating(int n) {
    if (n < 3 || n > 7) throw CapExceeded("alternating group degree out of range");
    auto perms = all_perms(n);
    std::vector<std::vector<int>> even;
    for (auto& p : perms)
        if (perm_even(p)) even.push_back(p);
    std::map<std::vector<int>, uint32_t> index;
    for (uint32_t i = 0; i < even.size(); ++i) index[even[i]] = i;
    std::vector<uint16_t> table(even.size() * even.size());
    for (uint32_t a = 0; a < even.size(); ++a)
        for (uint32_t b = 0; b < even.size(); ++b) {
            std::vector<int> comp(n);
            for (int x = 0; x < n; ++x) comp[x] = even[a][even[b][x]];
            table[a * even.size() + b] = static_cast<uint16_t>(index.at(comp));
        }
    FiniteGroup g;
    g.size_ = static_cast<uint32_t>(even.size());
    g.name_ = "A" + std::to_string(n);
    g.id_ = 0;
    g.table_ = std::move(table);
    g.finalize();
    return g;
}

FiniteGroup FiniteGroup::subgroup(const FiniteGroup& ambient, std::vector<uint32_t> elements,
                                  std::string name) {
    std::sort(elements.begin(), elements.end());
    if (elements.size() == ambient.size()) {
        FiniteGroup copy = ambient;
        copy.name_ = std::move(name);
        return copy;
    }
    if (elements.size() > kTableLimit)
        throw CapExceeded("subgroup too large for a multiplication table");
    std::unordered_map<uint32_t, uint32_t> local;
    for (uint32_t i = 0; i < elements.size(); ++i) local[elements[i]] = i;
    uint32_t n = static_cast<uint32_t>(elements.size());
    std::vector<uint16_t> table(n * n);
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t b = 0; b < n; ++b) {
            auto it = local.find(ambient.mul(elements[a], elements[b]));
            if (it == local.end()) throw Error("subgroup: element set not closed");
            table[a * n + b] = static_cast<uint16_t>(it->second);
        }
    FiniteGroup g;
    g.size_ = n;
    g.name_ = std::move(name);
    g.id_ = local.at(ambient.identity());
    g.table_ = std::move(table);
    g.finalize();
    return g;
}

FiniteGroup psl2_group(long q, long cap) {
    if (!prime_power(q)) throw NotPrimePower("q = " + std::to_string(q));
    if (q > cap)
        throw CapExceeded("psl2 cap: q = " + std::to_string(q) + " > " + std::to_string(cap));
    FiniteGroup g;
    g.field_ = std::make_shared<FiniteField>(q);
    const FiniteField& f = *g.field_;

    std::vector<uint32_t> keys;
    for (long a = 0; a < q; ++a) {
        for (long b = 0; b < q; ++b) {
            for (long c = 0; c < q; ++c) {
                if (a != 0) {
                    // d = (1 + b c) / a
                    uint16_t d = f.mul(f.add(1, f.mul(static_cast<uint16_t>(b),
                                                      static_cast<uint16_t>(c))),
                                       f.inv(static_cast<uint16_t>(a)));
                    keys.push_back(canonical_packed(f, static_cast<uint16_t>(a),
                                                    static_cast<uint16_t>(b),
                                                    static_cast<uint16_t>(c), d));
                } else {
                    // a = 0: need -bc = 1
                    if (b == 0) continue;
                    if (f.mul(static_cast<uint16_t>(b), static_cast<uint16_t>(c)) !=
                        f.neg(1))
                        continue;
                    for (long d = 0; d < q; ++d)
                        keys.push_back(canonical_packed(f, 0, static_cast<uint16_t>(b),
                                                        static_cast<uint16_t>(c),
                                                        static_cast<uint16_t>(d)));
                }
            }
        }
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    g.mats_ = std::move(keys);
    g.size_ = static_cast<uint32_t>(g.mats_.size());
    g.mat_index_.reserve(g.size_ * 2);
    for (uint32_t i = 0; i < g.size_; ++i) g.mat_index_[g.mats_[i]] = i;
    g.id_ = *g.index_of_matrix({1, 0, 0, 1});
    g.name_ = "PSL(2," + std::to_string(q) + ")";

    long expected = q * (q * q - 1) / std::gcd<long>(2, q - 1);
    if (static_cast<long>(g.size_) != expected)
        throw Error("psl2 construction: unexpected order");
    g.finalize();
    return g;
}

std::vector<uint32_t> subgroup_closure(const FiniteGroup& g, std::vector<uint32_t> gens) {
    std::vector<uint32_t> elems{g.identity()};
    std::vector<char> seen(g.size(), 0);
    seen[g.identity()] = 1;
    std::vector<uint32_t> frontier = elems;
    while (!frontier.empty()) {
        uint32_t cur = frontier.back();
        frontier.pop_back();
        for (uint32_t x : gens) {
            uint32_t y = g.mul(cur, x);
            if (!seen[y]) {
                seen[y] = 1;
                elems.push_back(y);
                frontier.push_back(y);
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

std::vector<uint32_t> canonicalize_hom_full(const FiniteGroup& g,
                                            const std::vector<uint32_t>& images) {
    std::vector<uint32_t> best;
    std::vector<uint32_t> cur(images.size());
    for (uint32_t x = 0; x < g.size(); ++x) {
        uint32_t xi = g.inv(x);
        for (std::size_t i = 0; i < images.size(); ++i) cur[i] = g.mul(g.mul(x, images[i]), xi);
        if (best.empty() || cur < best) best = cur;
    }
    return best;
}

}  // namespace fpr
