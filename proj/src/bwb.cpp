#include "hess/bwb.hpp"

#include <algorithm>

namespace hess {

DomResult dominantize(const RootSystem& rs, WeightVector mu) {
    const int r = rs.rank();
    DomResult res;
    long long guard = rs.num_positive() + 1;
    while (true) {
        int neg = -1;
        for (int i = 0; i < r; ++i) {
            if (mu.c[i] == 0) {
                res.singular = true;
                return res;
            }
            if (neg < 0 && mu.c[i] < 0) neg = i;
        }
        if (neg < 0) break;
        // s_i in fundamental coordinates: mu -= mu_i * (i-th column of C)
        long long v = mu.c[neg];
        for (int j = 0; j < r; ++j) mu.c[j] -= v * rs.cartan(j, neg);
        ++res.length;
        if (res.length > guard) throw InternalContradiction("dominantization did not terminate");
    }
    res.dominant = mu;
    return res;
}

int negative_pairing_count(const RootSystem& rs, const WeightVector& mu) {
    int n = 0;
    for (const auto& a : rs.positive_roots())
        if (rs.pairing(mu, a) < 0) ++n;
    return n;
}

bool regular_by_scan(const RootSystem& rs, const WeightVector& mu) {
    for (const auto& a : rs.positive_roots())
        if (rs.pairing(mu, a) == 0) return false;
    return true;
}

Int weyl_dim(const RootSystem& rs, const WeightVector& mu) {
    for (auto x : mu.c)
        if (x < 0) throw RejectedInput("weyl_dim requires a dominant weight");
    WeightVector shifted = mu + rs.rho();
    Int num = 1, den = 1;
    for (const auto& a : rs.positive_roots()) {
        num *= rs.pairing(shifted, a);
        den *= rs.coroot_height(a);
    }
    if (num % den != 0) throw InternalContradiction("Weyl product not integral");
    return num / den;
}

BottResult bott_line(const RootSystem& rs, const WeightVector& lambda) {
    BottResult out;
    DomResult d = dominantize(rs, lambda + rs.rho());
    if (d.singular) return out;
    out.singular = false;
    out.degree = d.length;
    out.dominant_weight = d.dominant - rs.rho();
    out.dimension = weyl_dim(rs, out.dominant_weight);
    return out;
}

Int euler_multiset(const RootSystem& rs, const WeightMultiset& m) {
    Int chi = 0;
    for (const auto& [w, mult] : m) {
        BottResult b = bott_line(rs, w);
        if (b.singular) continue;
        Int term = mult * b.dimension;
        chi += (b.degree % 2 == 0) ? term : -term;
    }
    return chi;
}

BottResult bott_parabolic(const RootSystem& rs, const std::set<int>& delta0,
                          const WeightVector& lambda) {
    for (int i : delta0)
        if (lambda.c[i - 1] < 0)
            throw RejectedInput("weight not dominant with respect to the parabolic");
    return bott_line(rs, lambda);
}

}  // namespace hess
