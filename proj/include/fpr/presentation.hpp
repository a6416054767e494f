#pragma once

#include <array>
#include <string>
#include <vector>

#include "fpr/errors.hpp"
#include "fpr/word.hpp"

namespace fpr {

struct TriangleSignature {
    long p, q, r;
    // 1/p + 1/q + 1/r < 1, all entries >= 2.
    bool is_hyperbolic() const;
    friend bool operator==(const TriangleSignature& a, const TriangleSignature& b) {
        return a.p == b.p && a.q == b.q && a.r == b.r;
    }
};

class Presentation {
public:
    Presentation(std::vector<std::string> generator_names, std::vector<Word> relators);

    std::size_t generator_count() const { return gens_.size(); }
    const std::vector<std::string>& generator_names() const { return gens_; }
    const std::vector<Word>& relators() const { return relators_; }

    friend bool operator==(const Presentation& a, const Presentation& b) {
        return a.gens_ == b.gens_ && a.relators_ == b.relators_;
    }
    friend bool operator!=(const Presentation& a, const Presentation& b) { return !(a == b); }

private:
    std::vector<std::string> gens_;
    std::vector<Word> relators_;
};

// Text grammar:
//   input    ::= gens ";" relators
//   gens     ::= name ("," name)*
//   relators ::= word ("," word)*
//   word     ::= factor+
//   factor   ::= atom ("^" integer)?
//   atom     ::= name | inverse-name | "(" word ")"
// Juxtaposition or "*" multiplies; whitespace is insignificant. A name starts
// with a lowercase letter; uppercasing its first letter denotes the inverse.
Presentation parse_presentation(const std::string& text);
std::string print_presentation(const Presentation& p);
std::string print_word(const Presentation& p, const Word& w);

// <a,b | a^p, b^q, (ab)^r>
Presentation triangle_presentation(const TriangleSignature& sig);

// <x,y,z | x^2, y^2, z^2, (xy)^p, (yz)^q, (xz)^r>
Presentation coxeter_presentation(const TriangleSignature& sig);

// The four index-2 extensions of the isosceles group <a,b | a^p, b^q, (ab)^q>.
struct Index2Extensions {
    Presentation times2;    // direct product with a central involution t
    Presentation reflect;   // full reflection group of the (p,q,q) triangle
    Presentation rotate;    // triangle group of the bisected triangle, sorted signature
    Presentation swap_rho;  // <a,b,c,rho | a^p, b^q, c^q, rho^2, abc, ...>
    TriangleSignature rotate_sig;          // sorted form of (2p, q, 2)
    std::array<int, 3> rotate_perm;        // position of (2p,q,2) entries in rotate_sig
};
Index2Extensions index2_extensions(long p, long q);

// Standard presentation for genus g, cone orders m_i, s cusps. Cusp generators
// are free apart from the long relator.
Presentation signature_presentation(long genus, const std::vector<long>& cone_orders,
                                    long cusps);

// Ops must provide: Elem, identity(), mul(a,b), inv(a).
template <class Ops>
typename Ops::Elem evaluate_word(const Word& w, const std::vector<typename Ops::Elem>& images,
                                 const Ops& ops, std::size_t arity) {
    if (images.size() != arity)
        throw ArityMismatch("evaluate_word: expected " + std::to_string(arity) +
                            " images, got " + std::to_string(images.size()));
    typename Ops::Elem acc = ops.identity();
    for (const Letter& l : w.letters()) {
        if (static_cast<std::size_t>(l.gen) >= images.size())
            throw ArityMismatch("evaluate_word: letter out of range");
        acc = ops.mul(acc, l.sign > 0 ? images[l.gen] : ops.inv(images[l.gen]));
    }
    return acc;
}

}  // namespace fpr
