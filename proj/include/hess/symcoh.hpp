#pragma once

#include <string>
#include <vector>

#include "hess/bwb.hpp"

namespace hess {

inline constexpr long long kDefaultCap = 1000000;

// Positive-weight set of a nilradical, dual-bundle convention: the dual of the
// nilradical of b carries the positive roots.
struct NilradicalSpec {
    enum Kind { FullBorel, SimpleParabolic, ThetaParabolic } kind = FullBorel;
    int alpha = 0;  // 1-based simple index, SimpleParabolic only

    static NilradicalSpec borel() { return {FullBorel, 0}; }
    static NilradicalSpec simple(int i) { return {SimpleParabolic, i}; }
    static NilradicalSpec theta() { return {ThetaParabolic, 0}; }
    std::string str() const;
};

std::vector<WeightVector> nilradical_weights(const RootSystem& rs, const NilradicalSpec& nil);

// Weights of S^n of the listed weights shifted by twist, with multiplicities. S^0 is
// the twist alone; negative power is empty.
WeightMultiset sym_weight_multiset(const RootSystem& rs, const std::vector<WeightVector>& weights,
                                   long long n, const WeightVector& twist,
                                   long long cap = kDefaultCap);

Int chi_sym(const RootSystem& rs, const NilradicalSpec& nil, long long n,
            const WeightVector& twist, long long cap = kDefaultCap);

// h^0 of an untwisted symmetric power of a nilradical dual; equals the Euler
// characteristic because the higher cohomology vanishes.
Int h0_sym(const RootSystem& rs, const NilradicalSpec& nil, long long n,
           long long cap = kDefaultCap);

// The short/long adjacent simple pair spanning the rank-two Levi with two root
// lengths; q is the bond multiplicity and varpi = (q-1) alpha + delta.
struct LeviPair {
    int alpha_short = 0;  // 1-based
    int delta_long = 0;
    int q = 2;
    WeightVector varpi;
};

LeviPair levi_pair(const RootSystem& rs);  // throws RejectedInput when simply laced

// h^0(S^n n_alpha^* (x) varpi) for the canonical pair, via chi.
Int h0_sym_twisted_varpi(const RootSystem& rs, long long n, long long cap = kDefaultCap);

struct ChiReport {
    std::string claim;
    Int lhs = 0;
    Int rhs = 0;
    bool holds = false;
    bool asserted = true;  // false for conjecture reports
    std::string detail;
};

// chi(S^n n* (x) (-beta)) against the two-term h^0 expression, for short beta;
// also checks independence of the choice of short simple root.
ChiReport check_short(const RootSystem& rs, const RootVector& beta, long long n,
                      long long cap = kDefaultCap);

// Long-root variant with the extra varpi-twisted term, two-length types only.
ChiReport check_long(const RootSystem& rs, const RootVector& beta, long long n,
                     long long cap = kDefaultCap);

// Type A: chi(S^n n_P^* (x) (-theta)) = h0(S^{n-2} n_P^*) - h0(S^{n-1} n_Q^*).
ChiReport check_parabolic_A(const RootSystem& rs, long long n, long long cap = kDefaultCap);

// Reported, never asserted: chi(S^n n_P^* (x) (-theta)) vs
// chi(S^{n-shift} n_P^* (x) theta).
ChiReport check_conjecture(const RootSystem& rs, long long n, int shift,
                           long long cap = kDefaultCap);

struct DemazureStats {
    long long trials = 0;
    long long violations = 0;
    std::string detail;
};

// chi-level property checks of the reflection rules (k = <lambda, alpha^vee>):
// rule 1: chi(S^n n_a^* (x) lambda) = 0 at k = -1;
// rule 3: chi(S^n n^* (x) lambda) = chi(S^{n-1} n^* (x) (lambda + alpha)) at k = -1;
// rule 4: chi(S^n n_a^* (x) lambda) = -chi(S^n n_a^* (x) (lambda + (-k-1) alpha)) at k <= -2.
DemazureStats demazure_chi_rules(const RootSystem& rs, int trials, unsigned long long seed,
                                 long long cap = kDefaultCap);

}  // namespace hess
