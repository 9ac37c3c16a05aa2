#include "hess/matq.hpp"

#include <algorithm>

namespace hess {

MatQ MatQ::identity(int n) {
    MatQ m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatQ MatQ::operator*(const MatQ& o) const {
    if (c_ != o.r_) throw RejectedInput("matrix dimension mismatch");
    MatQ out(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < o.c_; ++j) out.at(i, j) += at(i, k) * o.at(k, j);
        }
    return out;
}

MatQ MatQ::transpose() const {
    MatQ out(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Rat MatQ::det() const {
    if (r_ != c_) throw RejectedInput("determinant of non-square matrix");
    MatQ m = *this;
    Rat d = 1;
    for (int col = 0; col < c_; ++col) {
        int piv = -1;
        for (int i = col; i < r_; ++i)
            if (m.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != col) {
            for (int j = 0; j < c_; ++j) std::swap(m.at(piv, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        for (int i = col + 1; i < r_; ++i) {
            if (m.at(i, col) == 0) continue;
            Rat f = m.at(i, col) / m.at(col, col);
            for (int j = col; j < c_; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

MatQ MatQ::inverse() const {
    if (r_ != c_) throw RejectedInput("inverse of non-square matrix");
    MatQ m = *this;
    MatQ inv = identity(r_);
    for (int col = 0; col < c_; ++col) {
        int piv = -1;
        for (int i = col; i < r_; ++i)
            if (m.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw RejectedInput("singular matrix");
        if (piv != col)
            for (int j = 0; j < c_; ++j) {
                std::swap(m.at(piv, j), m.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        Rat p = m.at(col, col);
        for (int j = 0; j < c_; ++j) {
            m.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (int i = 0; i < r_; ++i) {
            if (i == col || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (int j = 0; j < c_; ++j) {
                m.at(i, j) -= f * m.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::vector<Rat> MatQ::kernel_vector() const {
    MatQ m = *this;
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < c_ && row < r_; ++col) {
        int piv = -1;
        for (int i = row; i < r_; ++i)
            if (m.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < c_; ++j) std::swap(m.at(piv, j), m.at(row, j));
        Rat p = m.at(row, col);
        for (int j = 0; j < c_; ++j) m.at(row, j) /= p;
        for (int i = 0; i < r_; ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (int j = 0; j < c_; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(c_, false);
    for (int c : pivot_col) is_pivot[c] = true;
    int free_col = -1;
    for (int j = 0; j < c_; ++j)
        if (!is_pivot[j]) {
            free_col = j;
            break;
        }
    if (free_col < 0) throw RejectedInput("matrix has trivial kernel");
    std::vector<Rat> v(c_, Rat(0));
    v[free_col] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m.at((int)i, free_col);
    return v;
}

std::vector<Rat> MatQ::charpoly() const {
    if (r_ != c_) throw RejectedInput("charpoly of non-square matrix");
    // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr M_1, M_{k+1} = A(M_k + c_k I).
    const int n = r_;
    std::vector<Rat> coef(n + 1, Rat(0));
    coef[0] = 1;
    MatQ Mk = *this;
    for (int k = 1; k <= n; ++k) {
        Rat tr = 0;
        for (int i = 0; i < n; ++i) tr += Mk.at(i, i);
        Rat ck = -tr / k;
        coef[k] = ck;
        if (k == n) break;
        for (int i = 0; i < n; ++i) Mk.at(i, i) += ck;
        Mk = (*this) * Mk;
    }
    return coef;
}

std::vector<Rat> distinct_rational_roots(const std::vector<Rat>& poly) {
    // Clear denominators to a primitive integer polynomial, then test the
    // p/q candidates given by the rational root theorem, deflating as we go.
    if (poly.empty() || poly[0] == 0) throw RejectedInput("polynomial with zero leading term");
    const int n = (int)poly.size() - 1;
    std::vector<Rat> cur = poly;
    std::vector<Rat> roots;
    auto divisors = [](Int v) {
        std::vector<Int> ds;
        if (v < 0) v = -v;
        for (Int d = 1; d * d <= v; ++d)
            if (v % d == 0) {
                ds.push_back(d);
                ds.push_back(v / d);
            }
        return ds;
    };
    for (int step = 0; step < n; ++step) {
        int deg = (int)cur.size() - 1;
        // strip a zero root first
        if (cur.back() == 0) {
            roots.push_back(0);
            cur.pop_back();
            continue;
        }
        Int den_lcm = 1;
        for (const auto& c : cur) den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
        std::vector<Int> ip(deg + 1);
        for (int i = 0; i <= deg; ++i) ip[i] = Int(cur[i] * den_lcm);
        Rat found;
        bool ok = false;
        for (const Int& p : divisors(ip[deg])) {
            for (const Int& q : divisors(ip[0])) {
                for (int s : {1, -1}) {
                    Rat cand(s * p, q);
                    Rat val = 0;
                    for (int i = 0; i <= deg; ++i) val = val * cand + cur[i];
                    if (val == 0) {
                        found = cand;
                        ok = true;
                    }
                    if (ok) break;
                }
                if (ok) break;
            }
            if (ok) break;
        }
        if (!ok)
            throw UnsupportedInput(
                "eigenvalues are not all rational; supply an eigenvalue configuration instead");
        roots.push_back(found);
        // synthetic division by (t - found)
        std::vector<Rat> next(deg);
        next[0] = cur[0];
        for (int i = 1; i < deg; ++i) next[i] = cur[i] + found * next[i - 1];
        cur = next;
    }
    std::sort(roots.begin(), roots.end());
    for (size_t i = 1; i < roots.size(); ++i)
        if (roots[i] == roots[i - 1])
            throw UnsupportedInput("repeated eigenvalues are outside this build's scope");
    return roots;
}

}  // namespace hess
