#include "hess/symcoh.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace hess {

std::string NilradicalSpec::str() const {
    switch (kind) {
        case FullBorel: return "n";
        case SimpleParabolic: return "n_a" + std::to_string(alpha);
        case ThetaParabolic: return "n_P";
    }
    return "?";
}

std::vector<WeightVector> nilradical_weights(const RootSystem& rs, const NilradicalSpec& nil) {
    std::vector<WeightVector> out;
    switch (nil.kind) {
        case NilradicalSpec::FullBorel:
            for (const auto& a : rs.positive_roots()) out.push_back(rs.to_weight(a));
            break;
        case NilradicalSpec::SimpleParabolic: {
            if (nil.alpha < 1 || nil.alpha > rs.rank())
                throw RejectedInput("simple index out of range");
            for (const auto& a : rs.positive_roots()) {
                bool is_alpha = rs.height(a) == 1 && a.c[nil.alpha - 1] == 1;
                if (!is_alpha) out.push_back(rs.to_weight(a));
            }
            break;
        }
        case NilradicalSpec::ThetaParabolic: {
            if (rs.rank() < 2) throw RejectedInput("theta parabolic needs rank >= 2");
            const auto& delta0 = rs.distinguished().delta0;
            for (const auto& a : rs.positive_roots())
                if (rs.height_p(delta0, a) >= 1) out.push_back(rs.to_weight(a));
            break;
        }
    }
    return out;
}

WeightMultiset sym_weight_multiset(const RootSystem& rs, const std::vector<WeightVector>& weights,
                                   long long n, const WeightVector& twist, long long cap) {
    (void)rs;
    WeightMultiset out;
    if (n < 0) return out;
    if (n == 0) {
        out[twist] = 1;
        return out;
    }
    const long long m = (long long)weights.size();
    Int size = binomial(m + n - 1, n);
    if (size > cap)
        throw ResourceLimit("symmetric power expansion of " + size.str() +
                            " weights exceeds the cap of " + std::to_string(cap));
    // multisets of size n over the weight list, accumulated by weight sum
    std::function<void(long long, long long, WeightVector)> rec =
        [&](long long idx, long long left, WeightVector acc) {
            if (left == 0) {
                out[acc] += 1;
                return;
            }
            if (idx == m) return;
            if (idx == m - 1) {
                out[acc + left * weights[idx]] += 1;
                return;
            }
            WeightVector cur = acc;
            for (long long take = 0; take <= left; ++take) {
                rec(idx + 1, left - take, cur);
                if (take < left) cur = cur + weights[idx];
            }
        };
    rec(0, n, twist);
    return out;
}

Int chi_sym(const RootSystem& rs, const NilradicalSpec& nil, long long n,
            const WeightVector& twist, long long cap) {
    if (n < 0) return 0;
    return euler_multiset(rs, sym_weight_multiset(rs, nilradical_weights(rs, nil), n, twist, cap));
}

Int h0_sym(const RootSystem& rs, const NilradicalSpec& nil, long long n, long long cap) {
    if (n < 0) return 0;
    Int chi = chi_sym(rs, nil, n, rs.zero_weight(), cap);
    if (chi < 0)
        throw InternalContradiction("negative chi for an acyclic symmetric power: " + chi.str());
    return chi;
}

LeviPair levi_pair(const RootSystem& rs) {
    if (!rs.two_lengths()) throw RejectedInput("varpi twist needs two root lengths");
    LeviPair out;
    int found = 0;
    for (int i = 1; i <= rs.rank(); ++i) {
        for (int j = 1; j <= rs.rank(); ++j) {
            if (i == j || rs.cartan(i - 1, j - 1) == 0) continue;
            RootVector ai, aj;
            ai.c.assign(rs.rank(), 0);
            ai.c[i - 1] = 1;
            aj.c.assign(rs.rank(), 0);
            aj.c[j - 1] = 1;
            if (rs.is_short(ai) && rs.is_long(aj)) {
                out.alpha_short = i;
                out.delta_long = j;
                ++found;
            }
        }
    }
    if (found != 1) throw InternalContradiction("short-long adjacent pair not unique");
    // q is the bond multiplicity: -<delta, alpha^vee>
    out.q = (int)-rs.cartan(out.alpha_short - 1, out.delta_long - 1);
    out.varpi = (long long)(out.q - 1) * rs.simple_root_weight(out.alpha_short) +
                rs.simple_root_weight(out.delta_long);
    return out;
}

Int h0_sym_twisted_varpi(const RootSystem& rs, long long n, long long cap) {
    if (n < 0) return 0;
    LeviPair lp = levi_pair(rs);
    Int chi = chi_sym(rs, NilradicalSpec::simple(lp.alpha_short), n, lp.varpi, cap);
    if (chi < 0)
        throw InternalContradiction("negative chi for the varpi-twisted power: " + chi.str());
    return chi;
}

ChiReport check_short(const RootSystem& rs, const RootVector& beta, long long n, long long cap) {
    if (!rs.is_positive_root(beta) || !rs.is_short(beta))
        throw RejectedInput("beta must be a short positive root");
    ChiReport rep;
    const long long hb = rs.height(beta);
    rep.lhs = chi_sym(rs, NilradicalSpec::borel(), n, rs.zero_weight() - rs.to_weight(beta), cap);
    bool first = true;
    std::ostringstream detail;
    for (int i = 1; i <= rs.rank(); ++i) {
        RootVector ai;
        ai.c.assign(rs.rank(), 0);
        ai.c[i - 1] = 1;
        if (!rs.is_short(ai)) continue;
        Int rhs = h0_sym(rs, NilradicalSpec::borel(), n - hb, cap) -
                  h0_sym(rs, NilradicalSpec::simple(i), n - hb + 1, cap);
        if (first) {
            rep.rhs = rhs;
            first = false;
        } else if (rhs != rep.rhs) {
            rep.holds = false;
            rep.detail = "right side depends on the choice of short simple root";
            rep.claim = "sym-power chi identity, short root";
            return rep;
        }
    }
    rep.holds = rep.lhs == rep.rhs;
    detail << rs.type().name() << " beta=" << coords_str(beta.c) << " n=" << n;
    rep.detail = detail.str();
    rep.claim = "sym-power chi identity, short root";
    return rep;
}

ChiReport check_long(const RootSystem& rs, const RootVector& beta, long long n, long long cap) {
    if (!rs.two_lengths()) throw RejectedInput("long-root identity needs two root lengths");
    if (!rs.is_positive_root(beta) || !rs.is_long(beta))
        throw RejectedInput("beta must be a long positive root");
    ChiReport rep;
    LeviPair lp = levi_pair(rs);
    const long long hb = rs.height(beta);
    const long long hbv = rs.coroot_height(beta);
    rep.lhs = chi_sym(rs, NilradicalSpec::borel(), n, rs.zero_weight() - rs.to_weight(beta), cap);
    rep.rhs = h0_sym(rs, NilradicalSpec::borel(), n - hb, cap) -
              h0_sym(rs, NilradicalSpec::simple(lp.alpha_short), n - hb + 1, cap) -
              h0_sym_twisted_varpi(rs, n - hbv, cap);
    rep.holds = rep.lhs == rep.rhs;
    std::ostringstream detail;
    detail << rs.type().name() << " beta=" << coords_str(beta.c) << " n=" << n;
    rep.detail = detail.str();
    rep.claim = "sym-power chi identity, long root";
    return rep;
}

ChiReport check_parabolic_A(const RootSystem& rs, long long n, long long cap) {
    if (rs.type().family != 'A' || rs.rank() < 2)
        throw RejectedInput("parabolic identity is for type A, rank >= 2");
    ChiReport rep;
    rep.lhs = chi_sym(rs, NilradicalSpec::theta(), n, rs.zero_weight() - rs.theta_weight(), cap);
    // Q: Levi omits alpha_2; nilradical weights are the positive roots whose
    // alpha_2 coefficient is at least one.
    std::vector<WeightVector> qw;
    for (const auto& a : rs.positive_roots())
        if (a.c[1] >= 1) qw.push_back(rs.to_weight(a));
    Int q_term = 0;
    if (n - 1 >= 0)
        q_term =
            euler_multiset(rs, sym_weight_multiset(rs, qw, n - 1, rs.zero_weight(), cap));
    rep.rhs = h0_sym(rs, NilradicalSpec::theta(), n - 2, cap) - q_term;
    rep.holds = rep.lhs == rep.rhs;
    rep.claim = "sym-power chi identity, theta parabolic, type A";
    rep.detail = rs.type().name() + " n=" + std::to_string(n);
    return rep;
}

ChiReport check_conjecture(const RootSystem& rs, long long n, int shift, long long cap) {
    if (shift != 2 && shift != 4) throw RejectedInput("shift must be 2 or 4");
    if (shift == 4 && (rs.type().family == 'A' || rs.type().family == 'C'))
        throw RejectedInput("shift 4 applies outside types A and C");
    if (shift == 2 && rs.type().family != 'C')
        throw RejectedInput("shift 2 is the type C variant");
    ChiReport rep;
    rep.asserted = false;
    rep.lhs = chi_sym(rs, NilradicalSpec::theta(), n, rs.zero_weight() - rs.theta_weight(), cap);
    rep.rhs = chi_sym(rs, NilradicalSpec::theta(), n - shift, rs.theta_weight(), cap);
    rep.holds = rep.lhs == rep.rhs;
    rep.claim = "CONJECTURE: sym-power chi shift";
    rep.detail = rs.type().name() + " n=" + std::to_string(n) + " shift=" + std::to_string(shift);
    return rep;
}

DemazureStats demazure_chi_rules(const RootSystem& rs, int trials, unsigned long long seed,
                                 long long cap) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> coord(-4, 4);
    std::uniform_int_distribution<int> pick_alpha(1, rs.rank());
    std::uniform_int_distribution<long long> pick_n(0, 3);
    std::uniform_int_distribution<int> pick_k(-4, -2);
    DemazureStats st;
    std::ostringstream detail;
    auto random_lambda_with_k = [&](int i, long long k) {
        // random weight adjusted so <lambda, alpha_i^vee> = k
        WeightVector lam;
        lam.c.resize(rs.rank());
        for (auto& x : lam.c) x = coord(rng);
        lam.c[i - 1] = k;
        return lam;
    };
    for (int t = 0; t < trials; ++t) {
        int rule = t % 3 == 0 ? 1 : (t % 3 == 1 ? 3 : 4);
        int i = pick_alpha(rng);
        long long n = pick_n(rng);
        WeightVector alpha_w = rs.simple_root_weight(i);
        ++st.trials;
        bool ok = true;
        if (rule == 1) {
            WeightVector lam = random_lambda_with_k(i, -1);
            ok = chi_sym(rs, NilradicalSpec::simple(i), n, lam, cap) == 0;
        } else if (rule == 3) {
            WeightVector lam = random_lambda_with_k(i, -1);
            ok = chi_sym(rs, NilradicalSpec::borel(), n, lam, cap) ==
                 chi_sym(rs, NilradicalSpec::borel(), n - 1, lam + alpha_w, cap);
        } else {
            long long k = pick_k(rng);
            WeightVector lam = random_lambda_with_k(i, k);
            Int lhs = chi_sym(rs, NilradicalSpec::simple(i), n, lam, cap);
            Int rhs = chi_sym(rs, NilradicalSpec::simple(i), n, lam + (-k - 1) * alpha_w, cap);
            ok = lhs == -rhs;
        }
        if (!ok) {
            ++st.violations;
            if (st.violations <= 3) detail << "rule " << rule << " violated at trial " << t << "; ";
        }
    }
    st.detail = detail.str();
    return st;
}

}  // namespace hess
