#pragma once

#include <string>
#include <vector>

#include "hess/bwb.hpp"

namespace hess {

enum class BundleCase { Borel, Parabolic };

// Line-bundle filtration weights of the twisted tangent-direction bundle and
// its complement inside the twisted trivial bundle.
struct TwistedPair {
    WeightMultiset quotient_side;  // weights of (g/h) (x) L(-theta)
    WeightMultiset sub_side;       // weights of h (x) L(-theta), torus included
    BundleCase kind = BundleCase::Borel;
};

TwistedPair build_twisted_pair(const RootSystem& rs, BundleCase kind);

struct CohomologyProfile {
    bool exact = false;
    std::map<int, Int> dims;    // meaningful when exact; absent degree = 0
    std::map<int, Int> bounds;  // per-degree upper bounds when not exact
    std::string rule;           // which resolver rule produced the answer
};

// The middle bundle of the defining sequence is a direct sum of copies of
// L(-theta); the degree shift h^i(quotient) = h^{i+1}(sub) is valid iff that
// line bundle is acyclic. Holds for every rank >= 2, fails for A1.
bool acyclic_middle(const RootSystem& rs);

CohomologyProfile resolve_cohomology(const RootSystem& rs, const TwistedPair& pair);

struct DeformationTable {
    Int h0 = 0;
    Int h1 = 0;
    bool higher_vanish = true;
    Int normal_h0 = 0;        // dim G - 1
    bool theorem_range = true;  // false where the closed-form theorem excludes the type
};

DeformationTable deformation_table_X(const RootSystem& rs);
DeformationTable deformation_table_Y(const RootSystem& rs);

// In rank 2 the B and C labels name the same root system with the two nodes
// swapped; the Y-side pipeline dispatches B2 through the C branch.
bool type_c_like(const RootSystem& rs);

struct RegularRow {
    RootVector alpha;
    int degree = 0;
    WeightVector dominant;
    int case_tag = 0;  // 1: positive with <theta,a^vee> > 0; 2: positive orthogonal; 3: negative
    long long ht_p = 0;
};

// All roots alpha with alpha + rho regular.
std::vector<RegularRow> enumerate_regular(const RootSystem& rs);
// All roots alpha with alpha - theta + rho regular.
std::vector<RegularRow> enumerate_regular_shift(const RootSystem& rs);

// Independent self-check by full pairing scans: every listed alpha is regular
// after the shift, every unlisted root is singular.
bool verify_regular_rows(const RootSystem& rs, const std::vector<RegularRow>& rows, bool shifted);

}  // namespace hess
