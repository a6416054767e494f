#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fpr/cyclotomic.hpp"
#include "fpr/presentation.hpp"

namespace fpr {

// A character of a two-generator group as a trace triple
// (tr A, tr B, tr AB) with the source indices recorded:
// alpha = 2cos(pi*ja/p), beta = 2cos(pi*jb/q), gamma = 2cos(pi*jc/r).
struct TraceTriple {
    long ja, jb, jc;
    CycNumber alpha, beta, gamma;
};

enum class CharKind { Reducible, Finite, Dense };

struct FiniteImageType {
    long order;
    std::string tag;  // "A4", "S4", "A5", or "D<n>"
};

struct Classification {
    CharKind kind;
    std::optional<FiniteImageType> finite;
};

struct CharacterClass {
    TraceTriple rep;  // lexicographically least index triple in the orbit
    std::vector<std::array<long, 3>> orbit;  // even-sign-flip orbit, sorted
    CycNumber kappa;
    Classification cls;
};

struct Census {
    TriangleSignature sig;
    std::vector<CharacterClass> classes;
};

struct RigidityReport {
    TriangleSignature sig;
    long n_k = 0;
    long dense_count = 0;
    // Partition of the dense classes (indices into census order) into Galois
    // orbits, each orbit sorted, orbits sorted by first element.
    std::vector<std::vector<int>> galois_orbits;
    bool galois_rigid = false;
};

struct Mat2 {
    CycNumber a, b, c, d;
};
Mat2 mat_mul(const Mat2& x, const Mat2& y);
CycNumber mat_trace(const Mat2& m);
CycNumber mat_det(const Mat2& m);

// All (p-1)(q-1)(r-1) index triples with every index interior; endpoint
// indices give central generator images and only arise in reducible
// characters, which the census reports in aggregate.
std::vector<TraceTriple> enumerate_triples(const TriangleSignature& sig);

TraceTriple make_triple(const TriangleSignature& sig, long ja, long jb, long jc);

// alpha^2 + beta^2 + gamma^2 - alpha*beta*gamma - 4; zero exactly on the
// reducible triples.
CycNumber kappa(const TraceTriple& t);

// A = [[zeta_{2p}^ja, 1], [0, zeta_{2p}^-ja]],
// B = [[zeta_{2q}^jb, 0], [z, zeta_{2q}^-jb]] with z chosen so tr(AB) = gamma.
// For kappa = 0 the pairing with z = 0 is selected.
std::pair<Mat2, Mat2> realize_matrices(const TraceTriple& t, const TriangleSignature& sig);

// Closure of <A, B> modulo +-I with cap max(60, 4*lcm(p,q,r)); exceeding the
// cap means Zariski dense.
Classification classify(const TraceTriple& t, const TriangleSignature& sig);

Census character_census(const TriangleSignature& sig, bool parallel = true);
Census character_census_serial(const TriangleSignature& sig);

RigidityReport rigidity_report(const TriangleSignature& sig, bool parallel = true);

// Element count of the projective closure of <A, B>, or nullopt when the cap
// is exceeded. Exposed for tests.
std::optional<std::vector<Mat2>> projective_closure(const Mat2& a, const Mat2& b, long cap,
                                                    long conductor);

long projective_order(const Mat2& m, long conductor, long cap);

}  // namespace fpr
