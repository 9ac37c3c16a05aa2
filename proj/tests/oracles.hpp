#pragma once

// Test-only oracles, independent of the library's computation paths.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "hess/rootsys.hpp"

namespace hess::oracle {

// Positive-root count by reflection closure: start from the simple roots and
// close the set under all reflections s_beta, using only the Cartan pairings.
inline long long positive_count_by_reflection_closure(const RootSystem& rs) {
    const int r = rs.rank();
    std::set<std::vector<long long>> roots;
    std::vector<std::vector<long long>> work;
    for (int i = 0; i < r; ++i) {
        std::vector<long long> e(r, 0);
        e[i] = 1;
        roots.insert(e);
        work.push_back(e);
        for (auto& x : e) x = -x;
        roots.insert(e);
        work.push_back(e);
    }
    auto pair_simple = [&](const std::vector<long long>& b, int i) {
        long long s = 0;
        for (int j = 0; j < r; ++j) s += rs.cartan(i, j) * b[j];
        return s;
    };
    // s_beta(x) = x - <x, beta^vee> beta; realize every reflection as a word in
    // simple reflections by just closing under the simple ones (they generate).
    while (!work.empty()) {
        std::vector<std::vector<long long>> next;
        for (const auto& b : work) {
            for (int i = 0; i < r; ++i) {
                std::vector<long long> im = b;
                long long p = pair_simple(b, i);
                im[i] -= p;
                if (!roots.count(im)) {
                    roots.insert(im);
                    next.push_back(im);
                }
            }
        }
        work = std::move(next);
    }
    long long pos = 0;
    for (const auto& v : roots) {
        bool nonneg = std::all_of(v.begin(), v.end(), [](long long x) { return x >= 0; });
        bool nonzero = std::any_of(v.begin(), v.end(), [](long long x) { return x != 0; });
        if (nonneg && nonzero) ++pos;
    }
    return pos;
}

// Count of semistandard Young tableaux of shape lambda (a partition) with
// entries in 1..n, by direct backtracking over fillings.
inline long long ssyt_count(const std::vector<int>& shape, int n) {
    if (shape.empty()) return 1;
    std::vector<std::vector<int>> t(shape.size());
    for (size_t i = 0; i < shape.size(); ++i) t[i].assign(shape[i], 0);
    long long count = 0;
    // fill row by row, column by column
    std::function<void(size_t, size_t)> rec = [&](size_t row, size_t col) {
        if (row == t.size()) {
            ++count;
            return;
        }
        size_t nr = row, nc = col + 1;
        if (nc >= t[row].size()) {
            nr = row + 1;
            nc = 0;
        }
        int lo = 1;
        if (col > 0) lo = std::max(lo, t[row][col - 1]);            // weakly increasing rows
        if (row > 0 && col < t[row - 1].size()) lo = std::max(lo, t[row - 1][col] + 1);  // strict cols
        for (int v = lo; v <= n; ++v) {
            t[row][col] = v;
            rec(nr, nc);
        }
        t[row][col] = 0;
    };
    rec(0, 0);
    return count;
}

}  // namespace hess::oracle
