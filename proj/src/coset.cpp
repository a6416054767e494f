#include "fpr/coset.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "fpr/fuchsian.hpp"

namespace fpr {

namespace {

// Working state for the enumeration. Cosets are merged through a union-find;
// dead rows keep their entries until the coincidence queue migrates them.
struct Enumerator {
    long ngens;
    long ncols;
    long max_cosets;
    std::vector<std::vector<int32_t>> rows;
    std::vector<int32_t> parent;
    long live = 0;
    std::deque<int32_t> dead_queue;

    std::vector<std::vector<int>> relator_cols;
    std::vector<std::vector<int>> subgen_cols;

    static constexpr int32_t kUndef = -1;

    Enumerator(const Presentation& p, const std::vector<Word>& subgens, long cap)
        : ngens(static_cast<long>(p.generator_count())), ncols(2 * ngens), max_cosets(cap) {
        for (const Word& w : p.relators()) relator_cols.push_back(word_cols(w));
        for (const Word& w : subgens) subgen_cols.push_back(word_cols(w));
        new_coset();
    }

    static int col_of(const Letter& l) { return 2 * l.gen + (l.sign < 0 ? 1 : 0); }
    static int inv_col(int c) { return c ^ 1; }

    std::vector<int> word_cols(const Word& w) const {
        std::vector<int> cols;
        cols.reserve(w.size());
        for (const Letter& l : w.letters()) cols.push_back(col_of(l));
        return cols;
    }

    int32_t new_coset() {
        if (live >= max_cosets)
            throw EnumerationOverflow("coset limit " + std::to_string(max_cosets) +
                                      " exceeded; index not determined");
        rows.emplace_back(ncols, kUndef);
        parent.push_back(static_cast<int32_t>(rows.size()) - 1);
        ++live;
        return static_cast<int32_t>(rows.size()) - 1;
    }

    int32_t rep(int32_t c) {
        while (parent[c] != c) c = parent[c] = parent[parent[c]];
        return c;
    }

    bool is_live(int32_t c) { return rep(c) == c; }

    int32_t lookup(int32_t c, int col) {
        c = rep(c);
        int32_t e = rows[c][col];
        if (e == kUndef) return kUndef;
        e = rep(e);
        rows[c][col] = e;
        return e;
    }

    void set_edge(int32_t a, int col, int32_t b) {
        a = rep(a);
        b = rep(b);
        rows[a][col] = b;
        rows[b][inv_col(col)] = a;
    }

    void merge(int32_t a, int32_t b) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        --live;
        dead_queue.push_back(b);
        process_coincidences();
    }

    void process_coincidences() {
        while (!dead_queue.empty()) {
            int32_t d = dead_queue.front();
            dead_queue.pop_front();
            for (int col = 0; col < ncols; ++col) {
                int32_t e = rows[d][col];
                if (e == kUndef) continue;
                rows[d][col] = kUndef;
                int32_t u = rep(d), v = rep(e);
                int32_t existing = rows[u][col] == kUndef ? kUndef : rep(rows[u][col]);
                if (existing == kUndef) {
                    rows[u][col] = v;
                } else if (existing != v) {
                    queue_merge(existing, v);
                }
                int32_t mirror = rows[v][inv_col(col)] == kUndef
                                     ? kUndef
                                     : rep(rows[v][inv_col(col)]);
                if (mirror == kUndef) {
                    rows[v][inv_col(col)] = u;
                } else if (mirror != u) {
                    queue_merge(mirror, u);
                }
            }
        }
    }

    void queue_merge(int32_t a, int32_t b) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        --live;
        dead_queue.push_back(b);
    }

    // Scan the word at coset c. In fill mode new cosets are defined until the
    // scan closes. Returns false if the scan is incomplete (no-fill mode).
    bool scan(int32_t c, const std::vector<int>& cols, bool fill) {
        for (;;) {
            c = rep(c);
            long i = 0, j = static_cast<long>(cols.size()) - 1;
            int32_t f = c, b = c;
            bool restart = false;
            while (i <= j) {
                int32_t next = lookup(f, cols[i]);
                if (next == kUndef) break;
                f = next;
                ++i;
            }
            if (i > j) {
                if (f != b) {
                    merge(f, b);
                    if (!is_live(c)) return true;
                    continue;  // rescan after collapse
                }
                return true;
            }
            while (j >= i) {
                int32_t prev = lookup(b, inv_col(cols[j]));
                if (prev == kUndef) break;
                b = prev;
                --j;
            }
            if (j < i) {
                merge(f, b);
                if (!is_live(c)) return true;
                continue;
            }
            if (j == i) {
                set_edge(f, cols[i], b);
                if (!dead_queue.empty()) process_coincidences();
                if (!is_live(c)) return true;
                continue;  // deduction may close more of the word
            }
            if (!fill) return false;
            int32_t d = new_coset();
            set_edge(f, cols[i], d);
            (void)restart;
        }
    }

    bool fully_defined(int32_t c) {
        for (int col = 0; col < ncols; ++col)
            if (lookup(c, col) == kUndef) return false;
        return true;
    }

    void run_hlt() {
        for (const auto& w : subgen_cols) scan(0, w, true);
        bool verified = false;
        while (!verified) {
            for (int32_t c = 0; c < static_cast<int32_t>(rows.size()); ++c) {
                if (!is_live(c)) continue;
                for (const auto& w : relator_cols) {
                    scan(c, w, true);
                    if (!is_live(c)) break;
                }
                if (!is_live(c)) continue;
                for (int col = 0; col < ncols; ++col) {
                    if (lookup(c, col) == kUndef) {
                        int32_t d = new_coset();
                        set_edge(c, col, d);
                    }
                }
            }
            verified = verify_closed();
        }
    }

    void run_deduction() {
        for (const auto& w : subgen_cols) scan(0, w, true);
        for (;;) {
            // Propagate: rescan everything without filling until stable.
            bool changed = true;
            while (changed) {
                changed = false;
                long defined_before = count_defined();
                long live_before = live;
                for (int32_t c = 0; c < static_cast<int32_t>(rows.size()); ++c) {
                    if (!is_live(c)) continue;
                    for (const auto& w : relator_cols) {
                        scan(c, w, false);
                        if (!is_live(c)) break;
                    }
                }
                for (const auto& w : subgen_cols) scan(0, w, false);
                if (count_defined() != defined_before || live != live_before) changed = true;
            }
            // Define the first undefined entry, if any.
            bool defined = false;
            for (int32_t c = 0; c < static_cast<int32_t>(rows.size()) && !defined; ++c) {
                if (!is_live(c)) continue;
                for (int col = 0; col < ncols && !defined; ++col) {
                    if (lookup(c, col) == kUndef) {
                        int32_t d = new_coset();
                        set_edge(c, col, d);
                        defined = true;
                    }
                }
            }
            if (!defined) break;
        }
        if (!verify_closed()) throw Error("deduction strategy failed to close");
    }

    long count_defined() {
        long n = 0;
        for (int32_t c = 0; c < static_cast<int32_t>(rows.size()); ++c) {
            if (!is_live(c)) continue;
            for (int col = 0; col < ncols; ++col)
                if (rows[c][col] != kUndef) ++n;
        }
        return n;
    }

    bool verify_closed() {
        for (int32_t c = 0; c < static_cast<int32_t>(rows.size()); ++c) {
            if (!is_live(c)) continue;
            if (!fully_defined(c)) return false;
            for (const auto& w : relator_cols) {
                int32_t f = c;
                for (int col : w) f = lookup(f, col);
                if (f != c) return false;
            }
        }
        for (const auto& w : subgen_cols) {
            int32_t f = 0;
            f = rep(f);
            for (int col : w) f = lookup(f, col);
            if (f != rep(0)) return false;
        }
        return true;
    }
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_generators,
                        long max_cosets, TcStrategy strategy) {
    if (max_cosets < 1) throw Error("max_cosets must be >= 1");
    Enumerator e(p, subgroup_generators, max_cosets);
    if (strategy == TcStrategy::Hlt)
        e.run_hlt();
    else
        e.run_deduction();

    // BFS standardization from coset 0, columns in order.
    std::vector<int32_t> order;
    std::map<int32_t, int32_t> label;
    int32_t root = e.rep(0);
    order.push_back(root);
    label[root] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (int col = 0; col < e.ncols; ++col) {
            int32_t next = e.lookup(order[head], col);
            if (!label.count(next)) {
                label[next] = static_cast<int32_t>(order.size());
                order.push_back(next);
            }
        }
    }
    if (static_cast<long>(order.size()) != e.live)
        throw Error("coset table is not connected");

    CosetTable t{p, subgroup_generators, static_cast<long>(order.size()), {}};
    t.table.resize(order.size() * e.ncols);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int col = 0; col < e.ncols; ++col)
            t.table[i * e.ncols + col] = label.at(e.lookup(order[i], col));
    return t;
}

CosetTable coset_table_from_hom(const Presentation& p, const FiniteGroup& g,
                                const std::vector<uint32_t>& images) {
    if (images.size() != p.generator_count()) throw ArityMismatch("coset_table_from_hom");
    GroupOps ops{g};
    for (const Word& rel : p.relators())
        if (evaluate_word(rel, images, ops, p.generator_count()) != g.identity())
            throw Error("images do not satisfy the relators");
    std::vector<uint32_t> gen_elems;
    for (uint32_t x : images)
        if (x != g.identity()) gen_elems.push_back(x);
    std::vector<uint32_t> elems = subgroup_closure(g, gen_elems);
    std::map<uint32_t, int32_t> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int32_t>(i);

    long ngens = static_cast<long>(p.generator_count());
    CosetTable t{p, {}, static_cast<long>(elems.size()), {}};
    t.table.assign(elems.size() * 2 * ngens, -1);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (long gidx = 0; gidx < ngens; ++gidx) {
            t.table[i * 2 * ngens + 2 * gidx] = index.at(g.mul(elems[i], images[gidx]));
            t.table[i * 2 * ngens + 2 * gidx + 1] =
                index.at(g.mul(elems[i], g.inv(images[gidx])));
        }
    }
    // Standardize so that coset 0 is the identity; BFS relabel.
    std::vector<int32_t> order{index.at(g.identity())};
    std::map<int32_t, int32_t> label{{order[0], 0}};
    for (std::size_t head = 0; head < order.size(); ++head)
        for (long col = 0; col < 2 * ngens; ++col) {
            int32_t next = t.table[order[head] * 2 * ngens + col];
            if (!label.count(next)) {
                label[next] = static_cast<int32_t>(order.size());
                order.push_back(next);
            }
        }
    std::vector<int32_t> out(t.table.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        for (long col = 0; col < 2 * ngens; ++col)
            out[i * 2 * ngens + col] = label.at(t.table[order[i] * 2 * ngens + col]);
    t.table = std::move(out);
    return t;
}

Presentation reidemeister_schreier(const CosetTable& t) {
    long ngens = static_cast<long>(t.presentation.generator_count());
    long n = t.index;
    // BFS spanning tree from coset 0; a tree edge used with an inverse column
    // corresponds to the positive edge at the destination coset.
    std::set<std::pair<long, long>> tree;  // (coset, gen) positive edges
    std::vector<char> visited(n, 0);
    visited[0] = 1;
    std::vector<long> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        long c = queue[head];
        for (long col = 0; col < 2 * ngens; ++col) {
            long d = t.table[c * 2 * ngens + col];
            if (visited[d]) continue;
            visited[d] = 1;
            long gen = col / 2;
            if (col % 2 == 0)
                tree.insert({c, gen});
            else
                tree.insert({d, gen});
            queue.push_back(d);
        }
    }

    std::map<std::pair<long, long>, int> schreier;
    std::vector<std::string> names;
    for (long c = 0; c < n; ++c)
        for (long gen = 0; gen < ngens; ++gen)
            if (!tree.count({c, gen})) {
                schreier[{c, gen}] = static_cast<int>(names.size());
                names.push_back("s" + std::to_string(names.size() + 1));
            }

    std::vector<Word> relators;
    std::set<Word> seen;
    for (long c = 0; c < n; ++c) {
        for (const Word& rel : t.presentation.relators()) {
            std::vector<Letter> out;
            long cur = c;
            for (const Letter& l : rel.letters()) {
                if (l.sign > 0) {
                    long next = t.table[cur * 2 * ngens + 2 * l.gen];
                    auto it = schreier.find({cur, l.gen});
                    if (it != schreier.end()) out.push_back(Letter{it->second, 1});
                    cur = next;
                } else {
                    long next = t.table[cur * 2 * ngens + 2 * l.gen + 1];
                    auto it = schreier.find({next, l.gen});
                    if (it != schreier.end()) out.push_back(Letter{it->second, -1});
                    cur = next;
                }
            }
            if (cur != c) throw Error("relator trace did not close");
            Word w(std::move(out));
            if (w.empty()) continue;
            if (seen.insert(w).second) relators.push_back(std::move(w));
        }
    }
    return Presentation(std::move(names), std::move(relators));
}

Index2Report verify_index2_embedding(long p, long q, const CatalogSpec& budget) {
    TriangleSignature parent_sig{2, p, 2 * q};
    TriangleSignature sub_sig{p, p, q};
    Presentation parent = triangle_presentation(parent_sig);
    Presentation sub = triangle_presentation(sub_sig);

    Index2Report report;
    report.parent_sig = parent_sig;
    report.subgroup_sig = sub_sig;
    report.chi_consistent =
        euler_characteristic(sub_sig) == Rat(2) * euler_characteristic(parent_sig);

    AbelianInvariants sub_ab = abelian_invariants(sub);
    Fingerprint sub_fp = fingerprint(sub, budget);

    long ngens = static_cast<long>(parent.generator_count());
    for (unsigned phi = 1; phi < (1u << ngens); ++phi) {
        bool valid = true;
        for (const Word& rel : parent.relators()) {
            long sum = 0;
            for (long gidx = 0; gidx < ngens; ++gidx)
                if (phi & (1u << gidx)) sum += rel.exponent_sum(static_cast<int>(gidx));
            if (sum % 2 != 0) valid = false;
        }
        if (!valid) continue;
        ++report.kernels_tested;

        // Schreier generators of the kernel for the transversal {1, t}.
        int tgen = 0;
        while (!(phi & (1u << tgen))) ++tgen;
        Word t = Word::generator(tgen);
        std::vector<Word> subgens;
        for (long gidx = 0; gidx < ngens; ++gidx) {
            Word g = Word::generator(static_cast<int>(gidx));
            bool odd = (phi >> gidx) & 1;
            Word u = odd ? g * t.inverse() : g;
            Word v = odd ? t * g : t * g * t.inverse();
            for (Word w : {u, v})
                if (!w.empty()) subgens.push_back(w);
        }
        CosetTable table = todd_coxeter(parent, subgens, 1000);
        if (table.index != 2) continue;
        Presentation kernel = reidemeister_schreier(table);
        if (abelian_invariants(kernel) != sub_ab) continue;
        if (!(fingerprint(kernel, budget) == sub_fp)) continue;
        report.matched_maps.push_back(phi);
        if (!report.matched_kernel) report.matched_kernel = kernel;
    }
    if (report.matched_maps.empty())
        throw NoMatch("no index-2 kernel of (2," + std::to_string(p) + "," +
                      std::to_string(2 * q) + ") matches (" + std::to_string(p) + "," +
                      std::to_string(p) + "," + std::to_string(q) + ")");
    report.unique_match = report.matched_maps.size() == 1;
    return report;
}

}  // namespace fpr
