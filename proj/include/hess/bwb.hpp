#pragma once

#include <map>
#include <set>

#include "hess/rootsys.hpp"

namespace hess {

// Dominantization of a (already rho-shifted) weight. Reflects at the least
// strictly negative coordinate; any zero coordinate at any step means the
// weight is singular.
struct DomResult {
    bool singular = false;
    int length = 0;
    WeightVector dominant;
};

DomResult dominantize(const RootSystem& rs, WeightVector mu);

// #{alpha in Phi+ : <mu, alpha^vee> < 0}; independent cross-check of length.
int negative_pairing_count(const RootSystem& rs, const WeightVector& mu);

// Full pairing scan: is mu regular (no zero pairing against any root)?
bool regular_by_scan(const RootSystem& rs, const WeightVector& mu);

struct BottResult {
    bool singular = true;
    int degree = 0;
    WeightVector dominant_weight;  // w(lambda+rho) - rho
    Int dimension = 0;
};

BottResult bott_line(const RootSystem& rs, const WeightVector& lambda);

// Exact dimension of the irreducible module with highest weight mu.
Int weyl_dim(const RootSystem& rs, const WeightVector& mu);

using WeightMultiset = std::map<WeightVector, long long>;

Int euler_multiset(const RootSystem& rs, const WeightMultiset& m);

// Same numerics as bott_line; rejects weights that are not dominant with
// respect to the parabolic given by delta0.
BottResult bott_parabolic(const RootSystem& rs, const std::set<int>& delta0,
                          const WeightVector& lambda);

}  // namespace hess
