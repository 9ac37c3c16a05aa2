#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hess/matq.hpp"
#include "hess/rootsys.hpp"

namespace hess {

// A point of the projective line over Q: a rational number or infinity.
struct PValue {
    bool inf = false;
    Rat v = 0;

    static PValue infinity() { return PValue{true, 0}; }
    static PValue of(Rat r) { return PValue{false, std::move(r)}; }
    bool operator==(const PValue& o) const { return inf == o.inf && (inf || v == o.v); }
    bool operator<(const PValue& o) const {
        if (inf != o.inf) return !inf;  // finite values sort before infinity
        if (inf) return false;
        return v < o.v;
    }
    std::string str() const { return inf ? "inf" : rat_str(v); }
};

// n pairwise distinct points, kept sorted (finite ascending, infinity last).
struct EigenConfig {
    std::vector<PValue> pts;

    // Validates distinctness; affine flavor additionally rejects infinity.
    static EigenConfig make(std::vector<PValue> pts, bool allow_inf);
    bool has_inf() const { return !pts.empty() && pts.back().inf; }
    int n() const { return (int)pts.size(); }
    bool operator==(const EigenConfig& o) const { return pts == o.pts; }
    bool operator<(const EigenConfig& o) const;
    std::string str() const;
};

struct AffineMap {
    Rat a = 1, b = 0;  // z -> a z + b, a != 0
    Rat apply(const Rat& z) const { return a * z + b; }
};

// z -> (m00 z + m01) / (m10 z + m11), nonzero determinant; canonical form
// scales the first nonzero entry to 1.
struct MobiusMap {
    std::array<std::array<Rat, 2>, 2> m{{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}};
    PValue apply(const PValue& z) const;
    void canonicalize();
    std::string str() const;
};

using Permutation = std::vector<int>;  // image of sorted index i is perm[i]

enum class GroupClass { Trivial, Cyclic, Dihedral, A4, S4, A5 };

struct PermutationGroup {
    int degree = 0;
    std::vector<Permutation> generators;
    std::vector<Permutation> elements;  // sorted; includes identity
    long long order = 1;
    GroupClass cls = GroupClass::Trivial;
    int cls_k = 0;  // k of C_k or D_k (order 2k)
    std::string class_name() const;
    bool contains(const PermutationGroup& sub) const;
};

PermutationGroup close_and_classify(int degree, std::vector<Permutation> gens);

// Affine equivalence of two configurations without infinity; anchors the two
// least points of c1 and scans all ordered target pairs.
std::optional<std::pair<AffineMap, Permutation>> affine_equivalent(const EigenConfig& c1,
                                                                   const EigenConfig& c2);

// Moebius equivalence of projective configurations; anchors the first ordered
// triple of c1 and scans all ordered target triples.
std::optional<std::pair<MobiusMap, Permutation>> mobius_equivalent(const EigenConfig& c1,
                                                                   const EigenConfig& c2);

// Stabilizer of the configuration under affine maps, as a permutation group of
// the sorted points. Classification is checked to be cyclic or trivial.
PermutationGroup stab_affine(const EigenConfig& c);

// Stabilizer under Moebius maps; classification must land in
// {C_k, D_k, A4, S4, A5}.
PermutationGroup stab_mobius(const EigenConfig& c);

struct AutReport {
    char flavor = 'x';
    int torus_dim = 0;             // n - 1
    PermutationGroup stabilizer;   // H-bar (x) or K-bar (y)
    long long pi0_order = 0;       // 2 * |stabilizer|
    bool theorem_range = true;     // n >= 4
};

AutReport aut_report(const EigenConfig& c, char flavor);

// Orbit-canonical representative; equal across two configurations iff they
// are equivalent under the corresponding group.
EigenConfig canonical_point(const EigenConfig& c, char flavor);

// Type A Weyl dimension from an integer n-tuple, weakly decreasing.
Int weyl_dim_A(int n, const std::vector<long long>& lambda);

// chi(X(s), L(lambda)^k) computed from two flag-variety Euler characteristics.
Int euler_hessenberg_linebundle(int n, const std::vector<long long>& lambda, long long k);

// Closed product form for chi when lambda is dominant: A(k) minus the twisted
// product when both end inequalities are strict. Empty when lambda is not
// weakly decreasing.
std::optional<Int> chi_closed_form(int n, const std::vector<long long>& lambda, long long k);

// All dominant lambda mod the all-ones vector, normalized to lambda_n = 0 with
// entries <= box, whose twisted powers have the binomial Euler characteristic
// for 1 <= k <= kmax.
std::vector<std::vector<long long>> characterize_search(int n, long long box, int kmax);

// Nondegenerate symmetric Q with Q s = s^t Q, for s with distinct rational
// eigenvalues.
MatQ symmetrize(const MatQ& s);

// Primitive integer coefficient vector of det(uA + vB), leading nonzero entry
// positive; length n+1, coefficient of u^{n-i} v^i at slot i.
std::vector<Int> pencil_charpoly(const MatQ& A, const MatQ& B);

}  // namespace hess
