#pragma once

#include <functional>
#include <vector>

#include "nsolve/lattice.hpp"

namespace nsolve::detail {

/// Lower-triangular Hermite matrices with determinant det: every simplex
/// {0, v_1, ..., v_n} of that volume is equivalent to exactly one {0, rows}.
inline void for_each_hermite(std::size_t n, Int det, const std::function<void(const IntMatrix&)>& f) {
    IntMatrix h(n, n);
    std::function<void(std::size_t, Int)> row = [&](std::size_t i, Int left) {
        if (i == n) {
            if (left == 1) f(h);
            return;
        }
        for (Int d = 1; d <= left; ++d) {
            if (left % d) continue;
            h(i, i) = d;
            std::function<void(std::size_t)> off = [&](std::size_t j) {
                if (j == i) {
                    row(i + 1, left / d);
                    return;
                }
                for (Int x = 0; x < d; ++x) {
                    h(i, j) = x;
                    off(j + 1);
                }
                h(i, j) = 0;
            };
            off(0);
        }
    };
    row(0, det);
}

/// Integer vectors of length len summing to total whose positive entries sum
/// to at most max_pos; optionally without zero entries.
inline std::vector<std::vector<Int>> numerators(std::size_t len, Int total, Int max_pos, bool nonzero) {
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur;
    std::function<void(Int, Int)> rec = [&](Int sum, Int pos) {
        const std::size_t left = len - cur.size();
        if (left == 0) {
            if (sum == total) out.push_back(cur);
            return;
        }
        for (Int x = total - max_pos; x <= max_pos - pos; ++x) {
            if (nonzero && x == 0) continue;
            const Int s2 = sum + x, p2 = pos + std::max<Int>(x, 0);
            if (p2 - s2 > max_pos - total) continue;  // negatives already exceed the budget
            const Int need = total - s2;
            if (left == 1 && need != 0) continue;
            if (need > max_pos - p2) continue;
            cur.push_back(x);
            rec(s2, p2);
            cur.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

/// Points sum_j c_j s_j / det for the given numerators that are integral.
inline std::vector<Point> barycentric_points(const std::vector<Point>& s, Int det,
                                             const std::vector<std::vector<Int>>& nums) {
    const std::size_t n = s.front().size();
    std::vector<Point> out;
    for (const auto& c : nums) {
        Point x(n, 0);
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) {
            Int acc = 0;
            for (std::size_t i = 0; i < s.size(); ++i) acc = checked_add(acc, checked_mul(c[i], s[i][j]));
            if (acc % det) ok = false;
            x[j] = acc / det;
        }
        if (ok) out.push_back(std::move(x));
    }
    return out;
}

}  // namespace nsolve::detail
