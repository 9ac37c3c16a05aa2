#include "hess/rootsys.hpp"

#include <algorithm>
#include <sstream>

namespace hess {

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw RejectedInput("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw RejectedInput("zero denominator in '" + s + "'");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw RejectedInput("malformed rational literal '" + s + "'");
    }
}

bool CartanType::admissible(char family, int rank) {
    switch (family) {
        case 'A': return rank >= 1;
        case 'B': return rank >= 2;
        case 'C': return rank >= 2;
        case 'D': return rank >= 4;
        case 'E': return rank >= 6 && rank <= 8;
        case 'F': return rank == 4;
        case 'G': return rank == 2;
        default: return false;
    }
}

CartanType CartanType::make(char family, int rank) {
    if (!admissible(family, rank))
        throw RejectedInput(std::string("inadmissible Cartan type ") + family +
                            std::to_string(rank));
    return CartanType{family, rank};
}

WeightVector operator+(const WeightVector& a, const WeightVector& b) {
    WeightVector r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
}
WeightVector operator-(const WeightVector& a, const WeightVector& b) {
    WeightVector r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
}
WeightVector operator*(long long s, const WeightVector& a) {
    WeightVector r = a;
    for (auto& x : r.c) x *= s;
    return r;
}
RootVector operator+(const RootVector& a, const RootVector& b) {
    RootVector r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
}
RootVector operator-(const RootVector& a, const RootVector& b) {
    RootVector r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
}
RootVector operator*(long long s, const RootVector& a) {
    RootVector r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

std::string coords_str(const std::vector<long long>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

namespace {

// cartan[i][j] = <alpha_j, alpha_i^vee>, halfsq[i] = (alpha_i, alpha_i)/2
// with short roots normalized to 1.
void cartan_data(const CartanType& t, std::vector<std::vector<long long>>& cartan,
                 std::vector<long long>& halfsq) {
    const int r = t.rank;
    cartan.assign(r, std::vector<long long>(r, 0));
    halfsq.assign(r, 1);
    for (int i = 0; i < r; ++i) cartan[i][i] = 2;
    auto link = [&](int i, int j) {  // 1-based single bond
        cartan[i - 1][j - 1] = -1;
        cartan[j - 1][i - 1] = -1;
    };
    switch (t.family) {
        case 'A':
            for (int i = 1; i < r; ++i) link(i, i + 1);
            break;
        case 'B':
            for (int i = 1; i < r; ++i) link(i, i + 1);
            cartan[r - 1][r - 2] = -2;  // <a_{r-1}, a_r^vee> = -2
            for (int i = 0; i < r - 1; ++i) halfsq[i] = 2;
            break;
        case 'C':
            for (int i = 1; i < r; ++i) link(i, i + 1);
            cartan[r - 2][r - 1] = -2;  // <a_r, a_{r-1}^vee> = -2
            halfsq[r - 1] = 2;
            break;
        case 'D':
            for (int i = 1; i <= r - 3; ++i) link(i, i + 1);
            link(r - 2, r - 1);
            link(r - 2, r);
            break;
        case 'E':
            link(1, 3);
            link(3, 4);
            link(2, 4);
            for (int i = 4; i < r; ++i) link(i, i + 1);
            break;
        case 'F':
            link(1, 2);
            link(2, 3);
            link(3, 4);
            cartan[2][1] = -2;  // <a_2, a_3^vee> = -2
            halfsq[0] = halfsq[1] = 2;
            break;
        case 'G':
            link(1, 2);
            cartan[0][1] = -3;  // <a_2, a_1^vee> = -3
            halfsq[1] = 3;
            break;
    }
}

}  // namespace

RootSystem::RootSystem(CartanType t) : type_(CartanType::make(t.family, t.rank)), rank_(t.rank) {
    cartan_data(type_, cartan_, halfsq_);
    enumerate_roots();
    compute_distinguished();
}

RootSystem build_root_system(CartanType t) { return RootSystem(t); }

void RootSystem::enumerate_roots() {
    // Breadth-first closure from the simple roots, level by level in height.
    // beta + alpha_i is a root iff q = p - <beta, alpha_i^vee> > 0 where p is
    // the depth of the alpha_i-string below beta.
    std::set<std::vector<long long>> seen;
    std::vector<RootVector> level;
    for (int i = 0; i < rank_; ++i) {
        RootVector a;
        a.c.assign(rank_, 0);
        a.c[i] = 1;
        level.push_back(a);
        seen.insert(a.c);
        positive_.push_back(a);
    }
    auto pair_with_simple = [&](const RootVector& b, int i) {
        long long s = 0;
        for (int j = 0; j < rank_; ++j) s += cartan_[i][j] * b.c[j];
        return s;
    };
    while (!level.empty()) {
        std::vector<RootVector> next;
        for (const auto& b : level) {
            for (int i = 0; i < rank_; ++i) {
                long long p = 0;
                RootVector down = b;
                while (true) {
                    down.c[i]--;
                    bool neg = std::all_of(down.c.begin(), down.c.end(),
                                           [](long long x) { return x == 0; });
                    if (neg || !seen.count(down.c)) break;
                    ++p;
                }
                long long q = p - pair_with_simple(b, i);
                if (q > 0) {
                    RootVector up = b;
                    up.c[i]++;
                    if (!seen.count(up.c)) {
                        seen.insert(up.c);
                        next.push_back(up);
                        positive_.push_back(up);
                    }
                }
            }
        }
        level = std::move(next);
    }
    std::sort(positive_.begin(), positive_.end(), [&](const RootVector& a, const RootVector& b) {
        long long ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return a.c < b.c;
    });
    for (size_t k = 0; k < positive_.size(); ++k) index_[positive_[k].c] = (int)k;

    // (a,a)/2 and coroot coordinates m_i = n_i d_i / d_a.
    coroots_.resize(positive_.size());
    droot_.resize(positive_.size());
    long long dmax = 1;
    for (size_t k = 0; k < positive_.size(); ++k) {
        const auto& n = positive_[k].c;
        long long sq = 0;
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j) sq += n[i] * halfsq_[i] * cartan_[i][j] * n[j];
        if (sq % 2 != 0) throw InternalContradiction("odd root square length");
        long long d = sq / 2;
        droot_[k] = d;
        dmax = std::max(dmax, d);
        std::vector<long long> m(rank_);
        for (int i = 0; i < rank_; ++i) {
            long long num = n[i] * halfsq_[i];
            if (num % d != 0) throw InternalContradiction("non-integral coroot");
            m[i] = num / d;
        }
        coroots_[k] = std::move(m);
    }
    two_lengths_ = dmax > 1;

    theta_ = positive_.back();
    long long hmax = height(theta_);
    for (const auto& b : positive_)
        if (height(b) == hmax && !(b == theta_))
            throw InternalContradiction("maximal root not unique");
    theta_w_ = to_weight(theta_);
}

void RootSystem::compute_distinguished() {
    dist_.theta = theta_;
    if (two_lengths_) {
        // Maximal short root: the short root of greatest height (unique).
        int best = -1;
        for (size_t k = 0; k < positive_.size(); ++k) {
            if (droot_[k] != 1) continue;
            if (best < 0 || height(positive_[k]) > height(positive_[best])) best = (int)k;
        }
        RootVector tp = positive_[best];
        for (size_t k = 0; k < positive_.size(); ++k)
            if (droot_[k] == 1 && height(positive_[k]) == height(tp) && (int)k != best)
                throw InternalContradiction("maximal short root not unique");
        int kidx = -1;
        for (int i = 1; i <= rank_; ++i) {
            RootVector s = tp;
            s.c[i - 1]++;
            if (is_root(s)) {
                if (kidx != -1) throw InternalContradiction("theta_plus + alpha_k not unique");
                kidx = i;
            }
        }
        if (kidx == -1) throw InternalContradiction("no k with theta_plus + alpha_k a root");
        RootVector sum = tp;
        sum.c[kidx - 1]++;
        // s_k(beta) = beta - <beta, alpha_k^vee> alpha_k on root coordinates
        long long pr = 0;
        for (int j = 0; j < rank_; ++j) pr += cartan_[kidx - 1][j] * sum.c[j];
        RootVector tpp = sum;
        tpp.c[kidx - 1] -= pr;
        dist_.theta_plus = tp;
        dist_.k_index = kidx;
        dist_.theta_plus_plus = tpp;
    }
    // rank one has no Delta_0 semantics; both index sets stay absent
    if (rank_ >= 2) {
        for (int i = 1; i <= rank_; ++i) {
            RootVector a;
            a.c.assign(rank_, 0);
            a.c[i - 1] = 1;
            if (pairing(theta_w_, a) == 0)
                dist_.delta0.insert(i);
            else
                dist_.boundary.insert(i);
        }
    }
}

bool RootSystem::is_root(const RootVector& v) const {
    if (index_.count(v.c)) return true;
    std::vector<long long> neg(v.c.size());
    for (size_t i = 0; i < v.c.size(); ++i) neg[i] = -v.c[i];
    return index_.count(neg) > 0;
}

bool RootSystem::is_positive_root(const RootVector& v) const { return index_.count(v.c) > 0; }

int RootSystem::root_index(const RootVector& v) const {
    auto it = index_.find(v.c);
    if (it != index_.end()) return it->second;
    std::vector<long long> neg(v.c.size());
    for (size_t i = 0; i < v.c.size(); ++i) neg[i] = -v.c[i];
    it = index_.find(neg);
    if (it != index_.end()) return it->second;
    throw RejectedInput("not a root: " + coords_str(v.c));
}

std::vector<long long> RootSystem::coroot(const RootVector& root) const {
    bool positive = index_.count(root.c) > 0;
    int k = root_index(root);
    auto m = coroots_[k];
    if (!positive)
        for (auto& x : m) x = -x;
    return m;
}

long long RootSystem::pairing(const WeightVector& lambda, const RootVector& root) const {
    auto m = coroot(root);
    long long s = 0;
    for (int i = 0; i < rank_; ++i) s += m[i] * lambda.c[i];
    return s;
}

long long RootSystem::height(const RootVector& v) const {
    long long s = 0;
    for (auto x : v.c) s += x;
    return s;
}

long long RootSystem::coroot_height(const RootVector& root) const {
    auto m = coroot(root);
    long long s = 0;
    for (auto x : m) s += x;
    return s;
}

long long RootSystem::height_p(const std::set<int>& delta0, const RootVector& v) const {
    long long s = 0;
    for (int i = 1; i <= rank_; ++i)
        if (!delta0.count(i)) s += v.c[i - 1];
    return s;
}

bool RootSystem::is_long(const RootVector& root) const {
    if (!two_lengths_) return true;  // simply laced: both long and short
    return droot_[root_index(root)] > 1;
}

bool RootSystem::is_short(const RootVector& root) const {
    if (!two_lengths_) return true;
    return droot_[root_index(root)] == 1;
}

WeightVector RootSystem::to_weight(const RootVector& v) const {
    WeightVector w;
    w.c.assign(rank_, 0);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) w.c[i] += cartan_[i][j] * v.c[j];
    return w;
}

WeightVector RootSystem::rho() const {
    WeightVector w;
    w.c.assign(rank_, 1);
    return w;
}

WeightVector RootSystem::zero_weight() const {
    WeightVector w;
    w.c.assign(rank_, 0);
    return w;
}

WeightVector RootSystem::simple_root_weight(int i) const {
    WeightVector w;
    w.c.assign(rank_, 0);
    for (int j = 0; j < rank_; ++j) w.c[j] = cartan_[j][i - 1];
    return w;
}

WeightVector RootSystem::fundamental_weight(int i) const {
    WeightVector w;
    w.c.assign(rank_, 0);
    w.c[i - 1] = 1;
    return w;
}

std::vector<RootVector> RootSystem::subsystem_positive(const std::set<int>& support) const {
    std::vector<RootVector> out;
    for (const auto& b : positive_) {
        bool ok = true;
        for (int i = 0; i < rank_; ++i)
            if (b.c[i] != 0 && !support.count(i + 1)) ok = false;
        if (ok) out.push_back(b);
    }
    return out;
}

}  // namespace hess
