#include "hess/typea.hpp"

#include "hess/bwb.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hess {

EigenConfig EigenConfig::make(std::vector<PValue> pts, bool allow_inf) {
    if (pts.empty()) throw RejectedInput("empty configuration");
    std::sort(pts.begin(), pts.end());
    for (size_t i = 1; i < pts.size(); ++i)
        if (pts[i] == pts[i - 1])
            throw RejectedInput("repeated point " + pts[i].str() +
                                "; configurations must be regular semisimple");
    if (!allow_inf)
        for (const auto& p : pts)
            if (p.inf) throw RejectedInput("infinity not allowed in an affine configuration");
    return EigenConfig{std::move(pts)};
}

bool EigenConfig::operator<(const EigenConfig& o) const {
    return std::lexicographical_compare(pts.begin(), pts.end(), o.pts.begin(), o.pts.end());
}

std::string EigenConfig::str() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < pts.size(); ++i) {
        if (i) os << ", ";
        os << pts[i].str();
    }
    os << "}";
    return os.str();
}

PValue MobiusMap::apply(const PValue& z) const {
    if (z.inf) {
        if (m[1][0] == 0) return PValue::infinity();
        return PValue::of(m[0][0] / m[1][0]);
    }
    Rat den = m[1][0] * z.v + m[1][1];
    Rat num = m[0][0] * z.v + m[0][1];
    if (den == 0) return PValue::infinity();
    return PValue::of(num / den);
}

void MobiusMap::canonicalize() {
    for (auto& row : m)
        for (auto& e : row)
            if (e != 0) {
                Rat s = e;
                for (auto& r2 : m)
                    for (auto& e2 : r2) e2 /= s;
                return;
            }
}

std::string MobiusMap::str() const {
    std::ostringstream os;
    os << "z -> (" << rat_str(m[0][0]) << " z + " << rat_str(m[0][1]) << ") / ("
       << rat_str(m[1][0]) << " z + " << rat_str(m[1][1]) << ")";
    return os.str();
}

namespace {

// Matrix of the unique Moebius map sending the ordered triple to (0, 1, inf).
MobiusMap to_standard_triple(const PValue& p1, const PValue& p2, const PValue& p3) {
    MobiusMap mm;
    auto& m = mm.m;
    if (p1.inf) {  // z -> (p2 - p3)/(z - p3)
        m = {{{Rat(0), p2.v - p3.v}, {Rat(1), -p3.v}}};
    } else if (p2.inf) {  // z -> (z - p1)/(z - p3)
        m = {{{Rat(1), -p1.v}, {Rat(1), -p3.v}}};
    } else if (p3.inf) {  // z -> (z - p1)/(p2 - p1)
        m = {{{Rat(1), -p1.v}, {Rat(0), p2.v - p1.v}}};
    } else {
        m = {{{p2.v - p3.v, -p1.v * (p2.v - p3.v)}, {p2.v - p1.v, -p3.v * (p2.v - p1.v)}}};
    }
    return mm;
}

MobiusMap triple_to_triple(const PValue& p1, const PValue& p2, const PValue& p3,
                           const PValue& q1, const PValue& q2, const PValue& q3) {
    MobiusMap ms = to_standard_triple(p1, p2, p3);
    MobiusMap mt = to_standard_triple(q1, q2, q3);
    // inverse of mt up to scale: adj(mt)
    MobiusMap out;
    Rat a = mt.m[0][0], b = mt.m[0][1], c = mt.m[1][0], d = mt.m[1][1];
    std::array<std::array<Rat, 2>, 2> inv = {{{d, -b}, {-c, a}}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.m[i][j] = inv[i][0] * ms.m[0][j] + inv[i][1] * ms.m[1][j];
    return out;
}

// Index of z in the sorted point list, or -1.
int locate(const std::vector<PValue>& pts, const PValue& z) {
    auto it = std::lower_bound(pts.begin(), pts.end(), z);
    if (it == pts.end() || !(*it == z)) return -1;
    return (int)(it - pts.begin());
}

long long element_order(const Permutation& p) {
    const int n = (int)p.size();
    std::vector<bool> seen(n, false);
    long long ord = 1;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        long long len = 0;
        int j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = p[j];
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

}  // namespace

std::string PermutationGroup::class_name() const {
    switch (cls) {
        case GroupClass::Trivial: return "trivial";
        case GroupClass::Cyclic: return "C" + std::to_string(cls_k);
        case GroupClass::Dihedral: return "D" + std::to_string(cls_k);
        case GroupClass::A4: return "A4";
        case GroupClass::S4: return "S4";
        case GroupClass::A5: return "A5";
    }
    return "?";
}

bool PermutationGroup::contains(const PermutationGroup& sub) const {
    for (const auto& p : sub.elements)
        if (!std::binary_search(elements.begin(), elements.end(), p)) return false;
    return true;
}

PermutationGroup close_and_classify(int degree, std::vector<Permutation> gens) {
    PermutationGroup g;
    g.degree = degree;
    Permutation id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::set<Permutation> elems{id};
    std::vector<Permutation> work{id};
    for (auto& p : gens)
        if (elems.insert(p).second) work.push_back(p);
    g.generators = gens;
    while (!work.empty()) {
        std::vector<Permutation> next;
        for (const auto& a : work) {
            for (const auto& b : gens) {
                Permutation ab(degree);
                for (int i = 0; i < degree; ++i) ab[i] = b[a[i]];
                if (elems.insert(ab).second) next.push_back(ab);
            }
        }
        work = std::move(next);
    }
    g.elements.assign(elems.begin(), elems.end());
    g.order = (long long)g.elements.size();

    long long maxord = 1;
    for (const auto& p : g.elements) maxord = std::max(maxord, element_order(p));
    if (g.order == 1) {
        g.cls = GroupClass::Trivial;
        g.cls_k = 1;
    } else if (maxord == g.order) {
        g.cls = GroupClass::Cyclic;
        g.cls_k = (int)g.order;
    } else if (g.order % 2 == 0 && maxord == g.order / 2) {
        g.cls = GroupClass::Dihedral;
        g.cls_k = (int)(g.order / 2);
    } else if (g.order == 12 && maxord == 3) {
        g.cls = GroupClass::A4;
    } else if (g.order == 24 && maxord == 4) {
        g.cls = GroupClass::S4;
    } else if (g.order == 60 && maxord == 5) {
        g.cls = GroupClass::A5;
    } else {
        throw InternalContradiction("stabilizer of order " + std::to_string(g.order) +
                                    " outside the finite Moebius classification");
    }
    return g;
}

std::optional<std::pair<AffineMap, Permutation>> affine_equivalent(const EigenConfig& c1,
                                                                   const EigenConfig& c2) {
    if (c1.has_inf() || c2.has_inf())
        throw RejectedInput("affine equivalence needs configurations without infinity");
    const int n = c1.n();
    if (n != c2.n()) throw RejectedInput("configurations of different sizes");
    if (n < 2) throw RejectedInput("need at least two points");
    const Rat x1 = c1.pts[0].v, x2 = c1.pts[1].v;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const Rat y1 = c2.pts[i].v, y2 = c2.pts[j].v;
            Rat a = (y1 - y2) / (x1 - x2);
            Rat b = y1 - a * x1;
            Permutation perm(n);
            bool ok = true;
            for (int k = 0; k < n && ok; ++k) {
                int at = locate(c2.pts, PValue::of(a * c1.pts[k].v + b));
                if (at < 0)
                    ok = false;
                else
                    perm[k] = at;
            }
            if (ok) return std::make_pair(AffineMap{a, b}, perm);
        }
    }
    return std::nullopt;
}

std::optional<std::pair<MobiusMap, Permutation>> mobius_equivalent(const EigenConfig& c1,
                                                                   const EigenConfig& c2) {
    const int n = c1.n();
    if (n != c2.n()) throw RejectedInput("configurations of different sizes");
    if (n < 3) throw RejectedInput("need at least three points");
    const PValue &p1 = c1.pts[0], &p2 = c1.pts[1], &p3 = c1.pts[2];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (i == j || j == k || i == k) continue;
                MobiusMap mm = triple_to_triple(p1, p2, p3, c2.pts[i], c2.pts[j], c2.pts[k]);
                Permutation perm(n);
                bool ok = true;
                for (int t = 0; t < n && ok; ++t) {
                    int at = locate(c2.pts, mm.apply(c1.pts[t]));
                    if (at < 0)
                        ok = false;
                    else
                        perm[t] = at;
                }
                if (ok) {
                    mm.canonicalize();
                    return std::make_pair(mm, perm);
                }
            }
    return std::nullopt;
}

PermutationGroup stab_affine(const EigenConfig& c) {
    if (c.has_inf()) throw RejectedInput("affine stabilizer needs a configuration without infinity");
    const int n = c.n();
    if (n < 2) throw RejectedInput("need at least two points");
    const Rat x1 = c.pts[0].v, x2 = c.pts[1].v;
    std::vector<Permutation> perms;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Rat a = (c.pts[i].v - c.pts[j].v) / (x1 - x2);
            Rat b = c.pts[i].v - a * x1;
            Permutation perm(n);
            bool ok = true;
            for (int k = 0; k < n && ok; ++k) {
                int at = locate(c.pts, PValue::of(a * c.pts[k].v + b));
                if (at < 0)
                    ok = false;
                else
                    perm[k] = at;
            }
            if (ok) perms.push_back(perm);
        }
    PermutationGroup g = close_and_classify(n, perms);
    if (g.cls != GroupClass::Trivial && g.cls != GroupClass::Cyclic)
        throw InternalContradiction("affine stabilizer is not cyclic: " + g.class_name());
    return g;
}

PermutationGroup stab_mobius(const EigenConfig& c) {
    const int n = c.n();
    if (n < 3) throw RejectedInput("need at least three points");
    const PValue &p1 = c.pts[0], &p2 = c.pts[1], &p3 = c.pts[2];
    std::vector<Permutation> perms;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (i == j || j == k || i == k) continue;
                MobiusMap mm = triple_to_triple(p1, p2, p3, c.pts[i], c.pts[j], c.pts[k]);
                Permutation perm(n);
                bool ok = true;
                for (int t = 0; t < n && ok; ++t) {
                    int at = locate(c.pts, mm.apply(c.pts[t]));
                    if (at < 0)
                        ok = false;
                    else
                        perm[t] = at;
                }
                if (ok) perms.push_back(perm);
            }
    return close_and_classify(n, perms);
}

AutReport aut_report(const EigenConfig& c, char flavor) {
    AutReport r;
    r.flavor = flavor;
    r.torus_dim = c.n() - 1;
    r.theorem_range = c.n() >= 4;
    r.stabilizer = flavor == 'x' ? stab_affine(c) : stab_mobius(c);
    r.pi0_order = 2 * r.stabilizer.order;
    return r;
}

EigenConfig canonical_point(const EigenConfig& c, char flavor) {
    const int n = c.n();
    std::optional<EigenConfig> best;
    auto keep_min = [&](EigenConfig cand) {
        if (!best || cand < *best) best = std::move(cand);
    };
    if (flavor == 'x') {
        if (c.has_inf()) throw RejectedInput("X-flavor canonical point needs a finite configuration");
        if (n < 2) throw RejectedInput("need at least two points");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                Rat d = c.pts[j].v - c.pts[i].v;
                std::vector<PValue> img;
                img.reserve(n);
                bool nonneg = true;
                for (const auto& p : c.pts) {
                    Rat z = (p.v - c.pts[i].v) / d;
                    if (z < 0) nonneg = false;
                    img.push_back(PValue::of(z));
                }
                // orbit representatives are compared among the all-nonnegative
                // normalizations, which exist for every configuration
                if (!nonneg) continue;
                std::sort(img.begin(), img.end());
                keep_min(EigenConfig{std::move(img)});
            }
    } else {
        if (n < 3) throw RejectedInput("need at least three points");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    if (i == j || j == k || i == k) continue;
                    MobiusMap mm =
                        to_standard_triple(c.pts[i], c.pts[j], c.pts[k]);
                    std::vector<PValue> img;
                    img.reserve(n);
                    for (const auto& p : c.pts) img.push_back(mm.apply(p));
                    std::sort(img.begin(), img.end());
                    keep_min(EigenConfig{std::move(img)});
                }
    }
    return *best;
}

Int weyl_dim_A(int n, const std::vector<long long>& lambda) {
    if ((int)lambda.size() != n) throw RejectedInput("weight tuple of wrong length");
    for (int i = 0; i + 1 < n; ++i)
        if (lambda[i] < lambda[i + 1]) throw RejectedInput("weight is not dominant");
    Rat prod = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            prod *= Rat(Int(j - i + lambda[i] - lambda[j]), Int(j - i));
    if (denominator(prod) != 1) throw InternalContradiction("Weyl product not integral");
    return numerator(prod);
}

namespace {

WeightVector eweight_to_fund(int n, const std::vector<long long>& lambda) {
    WeightVector w;
    w.c.resize(n - 1);
    for (int i = 0; i + 1 < n; ++i) w.c[i] = lambda[i] - lambda[i + 1];
    return w;
}

Int chi_line(const RootSystem& rs, const WeightVector& w) {
    BottResult b = bott_line(rs, w);
    if (b.singular) return 0;
    return (b.degree % 2 == 0) ? b.dimension : -b.dimension;
}

}  // namespace

Int euler_hessenberg_linebundle(int n, const std::vector<long long>& lambda, long long k) {
    if (n < 2) throw RejectedInput("need n >= 2");
    if ((int)lambda.size() != n) throw RejectedInput("weight tuple of wrong length");
    RootSystem rs(CartanType{'A', n - 1});
    std::vector<long long> kl(lambda);
    for (auto& x : kl) x *= k;
    WeightVector w = eweight_to_fund(n, kl);
    return chi_line(rs, w) - chi_line(rs, w - rs.theta_weight());
}

std::optional<Int> chi_closed_form(int n, const std::vector<long long>& lambda, long long k) {
    if ((int)lambda.size() != n || k < 1) return std::nullopt;
    for (int i = 0; i + 1 < n; ++i)
        if (lambda[i] < lambda[i + 1]) return std::nullopt;
    // for n = 2 the untwisted branch is invalid (rho - theta is not dominant)
    if (n == 2 && lambda[0] == lambda[1]) return std::nullopt;
    auto eps = [&](int i, int j) -> long long {  // 1-based
        if (i == 1 && j == n) return 2;
        if (i == 1 || j == n) return 1;
        return 0;
    };
    Rat a = 1, b = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            long long diff = lambda[i - 1] - lambda[j - 1];
            a *= Rat(Int(j - i) + Int(diff) * k, Int(j - i));
            b *= Rat(Int(j - i) + Int(diff) * k - eps(i, j), Int(j - i));
        }
    if (denominator(a) != 1) throw InternalContradiction("A(k) not integral");
    Int result = numerator(a);
    if (lambda[0] > lambda[1] && lambda[n - 2] > lambda[n - 1]) {
        if (denominator(b) != 1) throw InternalContradiction("B(k) not integral");
        result -= numerator(b);
    }
    return result;
}

std::vector<std::vector<long long>> characterize_search(int n, long long box, int kmax) {
    if (n < 4) throw RejectedInput("characterization needs n >= 4");
    std::vector<std::vector<long long>> found;
    std::vector<long long> lam(n, 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n - 1) {
            bool all_ok = true;
            for (int k = 1; k <= kmax && all_ok; ++k)
                all_ok = euler_hessenberg_linebundle(n, lam, k) == binomial(n + k - 1, k);
            if (all_ok) found.push_back(lam);
            return;
        }
        long long hi = pos == 0 ? box : lam[pos - 1];
        for (long long v = 0; v <= hi; ++v) {
            lam[pos] = v;
            rec(pos + 1);
        }
        lam[pos] = 0;
    };
    rec(0);
    return found;
}

MatQ symmetrize(const MatQ& s) {
    if (s.rows() != s.cols()) throw RejectedInput("square matrix required");
    const int n = s.rows();
    std::vector<Rat> roots = distinct_rational_roots(s.charpoly());
    MatQ P(n, n);
    for (int j = 0; j < n; ++j) {
        MatQ shifted = s;
        for (int i = 0; i < n; ++i) shifted.at(i, i) -= roots[j];
        std::vector<Rat> v = shifted.kernel_vector();
        for (int i = 0; i < n; ++i) P.at(i, j) = v[i];
    }
    MatQ Q = (P * P.transpose()).inverse();
    if (!(Q == Q.transpose())) throw InternalContradiction("symmetrization output not symmetric");
    if (!(Q * s == s.transpose() * Q))
        throw InternalContradiction("symmetrization identity Q s = s^t Q failed");
    return Q;
}

std::vector<Int> pencil_charpoly(const MatQ& A, const MatQ& B) {
    if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows())
        throw RejectedInput("pencil needs two square matrices of equal size");
    const int n = A.rows();
    // interpolate p(u) = det(uA + B) at u = 0..n
    MatQ vander(n + 1, n + 1);
    MatQ vals(n + 1, 1);
    for (int s = 0; s <= n; ++s) {
        MatQ M(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) M.at(i, j) = Rat(s) * A.at(i, j) + B.at(i, j);
        vals.at(s, 0) = M.det();
        Rat pw = 1;
        for (int j = n; j >= 0; --j) {
            vander.at(s, j) = pw;
            pw *= s;
        }
    }
    MatQ coef = vander.inverse() * vals;  // coef[i] multiplies u^{n-i}
    Int den_lcm = 1;
    for (int i = 0; i <= n; ++i)
        den_lcm = boost::multiprecision::lcm(den_lcm, denominator(coef.at(i, 0)));
    std::vector<Int> out(n + 1);
    Int g = 0;
    for (int i = 0; i <= n; ++i) {
        out[i] = Int(coef.at(i, 0) * den_lcm);
        g = boost::multiprecision::gcd(g, out[i]);
    }
    if (g != 0) {
        for (auto& x : out) x /= g;
        for (const auto& x : out) {
            if (x == 0) continue;
            if (x < 0)
                for (auto& y : out) y = -y;
            break;
        }
    }
    return out;
}

}  // namespace hess
