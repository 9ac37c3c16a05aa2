#include "hess/filtered.hpp"

#include <algorithm>

namespace hess {

TwistedPair build_twisted_pair(const RootSystem& rs, BundleCase kind) {
    if (kind == BundleCase::Parabolic && rs.rank() < 2)
        throw RejectedInput("parabolic pair needs rank >= 2");
    TwistedPair out;
    out.kind = kind;
    const WeightVector mtheta = rs.zero_weight() - rs.theta_weight();
    const auto& delta0 = rs.distinguished().delta0;
    for (const auto& a : rs.positive_roots()) {
        WeightVector wa = rs.to_weight(a);
        bool quotient = kind == BundleCase::Borel || rs.height_p(delta0, a) >= 1;
        (quotient ? out.quotient_side : out.sub_side)[wa + mtheta] += 1;
        out.sub_side[mtheta - wa] += 1;  // negative roots always sit in h
    }
    out.sub_side[mtheta] += rs.rank();  // torus contribution
    return out;
}

bool acyclic_middle(const RootSystem& rs) {
    return bott_line(rs, rs.zero_weight() - rs.theta_weight()).singular;
}

namespace {

std::map<int, Int> degree_sums(const RootSystem& rs, const WeightMultiset& m) {
    std::map<int, Int> u;
    for (const auto& [w, mult] : m) {
        BottResult b = bott_line(rs, w);
        if (!b.singular) u[b.degree] += mult * b.dimension;
    }
    return u;
}

Int chi_of(const std::map<int, Int>& u) {
    Int chi = 0;
    for (const auto& [deg, dim] : u) chi += (deg % 2 == 0) ? dim : -dim;
    return chi;
}

}  // namespace

CohomologyProfile resolve_cohomology(const RootSystem& rs, const TwistedPair& pair) {
    CohomologyProfile out;
    std::map<int, Int> uE = degree_sums(rs, pair.quotient_side);
    Int chiE = chi_of(uE);

    // R1: all surviving lines concentrated in one degree.
    if (uE.size() <= 1) {
        out.exact = true;
        out.rule = "R1";
        if (!uE.empty()) out.dims[uE.begin()->first] = uE.begin()->second;
        return out;
    }

    // R2: the shift onto the sub side needs the twisted trivial bundle acyclic.
    if (!acyclic_middle(rs)) {
        out.exact = false;
        out.rule = "R2-failed";
        out.bounds = uE;
        return out;
    }

    // R3: combine both filtrations' bounds and force via the Euler characteristic.
    std::map<int, Int> uF = degree_sums(rs, pair.sub_side);
    int maxdeg = uE.rbegin()->first;
    if (!uF.empty()) maxdeg = std::max(maxdeg, uF.rbegin()->first);
    std::map<int, Int> b;
    for (int i = 0; i <= maxdeg; ++i) {
        Int e = uE.count(i) ? uE[i] : Int(0);
        Int f = uF.count(i + 1) ? uF[i + 1] : Int(0);
        Int m = std::min(e, f);
        if (m > 0) b[i] = m;
    }
    if (b.empty()) {
        if (chiE != 0)
            throw InternalContradiction("all degrees bounded to zero but chi = " + chiE.str());
        out.exact = true;
        out.rule = "R3";
        return out;
    }
    if (b.size() == 1) {
        int i0 = b.begin()->first;
        Int val = (i0 % 2 == 0) ? chiE : -chiE;
        if (val < 0 || val > b.begin()->second)
            throw InternalContradiction("forced dimension " + val.str() +
                                        " outside [0," + b.begin()->second.str() + "]");
        out.exact = true;
        out.rule = "R3";
        if (val != 0) out.dims[i0] = val;
        return out;
    }
    out.exact = false;
    out.rule = "R3-bounds";
    out.bounds = b;
    return out;
}

static Int profile_dim(const CohomologyProfile& p, int i) {
    auto it = p.dims.find(i);
    return it == p.dims.end() ? Int(0) : it->second;
}

DeformationTable deformation_table_X(const RootSystem& rs) {
    TwistedPair pair = build_twisted_pair(rs, BundleCase::Borel);
    CohomologyProfile prof = resolve_cohomology(rs, pair);
    if (!prof.exact) throw Unresolved("tangent-twist cohomology not resolved for " + rs.type().name());
    for (const auto& [deg, dim] : prof.dims)
        if (deg >= 2 && dim != 0)
            throw InternalContradiction("unexpected higher cohomology in degree " +
                                        std::to_string(deg));
    DeformationTable t;
    t.h0 = rs.rank();
    t.h1 = t.h0 + profile_dim(prof, 0) - profile_dim(prof, 1) - 1;
    t.higher_vanish = true;
    t.normal_h0 = rs.dim_g() - 1;
    t.theorem_range = !(rs.type().family == 'A' && rs.rank() <= 2);
    return t;
}

bool type_c_like(const RootSystem& rs) {
    return rs.type().family == 'C' || (rs.type().family == 'B' && rs.rank() == 2);
}

DeformationTable deformation_table_Y(const RootSystem& rs) {
    if (rs.rank() < 2) throw RejectedInput("deformation_table_Y needs rank >= 2");
    TwistedPair pair = build_twisted_pair(rs, BundleCase::Parabolic);
    CohomologyProfile prof = resolve_cohomology(rs, pair);
    if (!prof.exact) throw Unresolved("parabolic tangent-twist cohomology not resolved for " +
                                      rs.type().name());
    DeformationTable t;
    long long r = rs.rank();
    Int dimG = rs.dim_g();
    Int dimGp = dimG;
    if (type_c_like(rs)) {
        t.h0 = r * (2 * r - 1);
        dimGp = (2 * r) * (2 * r) - 1;
    } else {
        t.h0 = r;
    }
    t.h1 = t.h0 - (dimGp - dimG + profile_dim(prof, 1) + 1);
    t.higher_vanish = true;
    t.normal_h0 = dimG - 1;
    t.theorem_range = true;
    return t;
}

namespace {

std::vector<RegularRow> enumerate_rows(const RootSystem& rs, bool shifted) {
    std::vector<RegularRow> rows;
    const auto& delta0 = rs.distinguished().delta0;
    const WeightVector shift =
        shifted ? (rs.rho() - rs.theta_weight()) : rs.rho();
    auto consider = [&](const RootVector& a, const WeightVector& wa) {
        DomResult d = dominantize(rs, wa + shift);
        if (d.singular) return;
        RegularRow row;
        row.alpha = a;
        row.degree = d.length;
        row.dominant = d.dominant - rs.rho();
        bool positive = rs.is_positive_root(a);
        if (!positive)
            row.case_tag = 3;
        else
            row.case_tag = rs.pairing(rs.theta_weight(), a) > 0 ? 1 : 2;
        row.ht_p = rs.height_p(delta0, a);
        rows.push_back(row);
    };
    for (const auto& a : rs.positive_roots()) {
        consider(a, rs.to_weight(a));
        RootVector na = -1ll * a;
        consider(na, rs.zero_weight() - rs.to_weight(a));
    }
    std::sort(rows.begin(), rows.end(), [](const RegularRow& x, const RegularRow& y) {
        if (x.case_tag != y.case_tag) return x.case_tag < y.case_tag;
        if (x.degree != y.degree) return x.degree < y.degree;
        return x.alpha.c < y.alpha.c;
    });
    return rows;
}

}  // namespace

std::vector<RegularRow> enumerate_regular(const RootSystem& rs) { return enumerate_rows(rs, false); }

std::vector<RegularRow> enumerate_regular_shift(const RootSystem& rs) {
    if (rs.rank() < 2) throw RejectedInput("shifted table needs rank >= 2");
    return enumerate_rows(rs, true);
}

bool verify_regular_rows(const RootSystem& rs, const std::vector<RegularRow>& rows, bool shifted) {
    std::set<std::vector<long long>> listed;
    for (const auto& r : rows) listed.insert(r.alpha.c);
    const WeightVector shift = shifted ? (rs.rho() - rs.theta_weight()) : rs.rho();
    for (const auto& a : rs.positive_roots()) {
        for (int sign : {1, -1}) {
            RootVector v = (long long)sign * a;
            WeightVector wv = (sign > 0) ? rs.to_weight(a) : rs.zero_weight() - rs.to_weight(a);
            bool reg = regular_by_scan(rs, wv + shift);
            if (reg != (listed.count(v.c) > 0)) return false;
        }
    }
    return true;
}

}  // namespace hess
