#include "nsolve/integer_matrix.hpp"

#include <algorithm>
#include <cstdlib>

namespace nsolve {

Int gcd(Int a, Int b) {
    a = a < 0 ? checked_sub(0, a) : a;
    b = b < 0 ? checked_sub(0, b) : b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int extended_gcd(Int a, Int b, Int& x, Int& y) {
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = checked_sub(old_r, checked_mul(q, r));
        old_r = r;
        r = tmp;
        tmp = checked_sub(old_s, checked_mul(q, s));
        old_s = s;
        s = tmp;
        tmp = checked_sub(old_t, checked_mul(q, t));
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    x = old_s;
    y = old_t;
    return old_r;
}

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int dot(const IntVector& a, const IntVector& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

Int content(const IntVector& v) {
    Int g = 0;
    for (Int x : v) g = gcd(g, x);
    return g;
}

bool is_primitive(const IntVector& v) { return content(v) == 1; }

IntVector primitive_part(const IntVector& v) {
    Int g = content(v);
    if (g == 0) return v;
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntVector IntMatrix::row(std::size_t i) const {
    return IntVector(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t j) const {
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool IntMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](Int x) { return x == 0; });
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, Int f) {
    if (f == 0) return;
    for (std::size_t k = 0; k < cols_; ++k)
        (*this)(i, k) = checked_add((*this)(i, k), checked_mul(f, (*this)(j, k)));
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, Int f) {
    if (f == 0) return;
    for (std::size_t k = 0; k < rows_; ++k)
        (*this)(k, i) = checked_add((*this)(k, i), checked_mul(f, (*this)(k, j)));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = checked_sub(0, (*this)(i, k));
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, j) = checked_sub(0, (*this)(k, j));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            Int aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) = checked_add(c(i, j), checked_mul(aik, b(k, j)));
        }
    return c;
}

IntVector operator*(const IntVector& v, const IntMatrix& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("vector-matrix shape mismatch");
    IntVector r(m.cols(), 0);
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] = checked_add(r[j], checked_mul(v[k], m(k, j)));
    }
    return r;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
        os << ']';
    }
    return os << ']';
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    std::vector<__int128> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
    auto at = [&](std::size_t i, std::size_t j) -> __int128& { return a[i * n + j]; };
    const __int128 limit = (static_cast<__int128>(1) << 100);
    __int128 prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                __int128 v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                if (v > limit || v < -limit) throw OverflowError();
                at(i, j) = v / prev;
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    __int128 d = at(n - 1, n - 1) * sign;
    if (d > INT64_MAX || d < INT64_MIN) throw OverflowError();
    return static_cast<Int>(d);
}

IntMatrix hermite_form(const IntMatrix& m, IntMatrix* left) {
    IntMatrix h = m;
    if (left) *left = IntMatrix::identity(m.rows());
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        h.swap_rows(i, j);
        if (left) left->swap_rows(i, j);
    };
    auto add_row = [&](std::size_t i, std::size_t j, Int f) {
        h.add_row_multiple(i, j, f);
        if (left) left->add_row_multiple(i, j, f);
    };
    std::size_t r = 0;
    for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
        // Euclid across rows: keep the smallest entry as pivot until the column clears.
        for (;;) {
            std::size_t best = h.rows();
            for (std::size_t i = r; i < h.rows(); ++i)
                if (h(i, c) != 0 && (best == h.rows() || std::llabs(h(i, c)) < std::llabs(h(best, c)))) best = i;
            if (best == h.rows()) break;
            swap_rows(r, best);
            bool clear = true;
            for (std::size_t i = r + 1; i < h.rows(); ++i) {
                if (h(i, c) == 0) continue;
                add_row(i, r, -(h(i, c) / h(r, c)));
                if (h(i, c) != 0) clear = false;
            }
            if (clear) break;
        }
        if (h(r, c) == 0) continue;
        if (h(r, c) < 0) {
            h.negate_row(r);
            if (left) left->negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(h(i, c), h(r, c));
            if (q != 0) add_row(i, r, -q);
        }
        ++r;
    }
    return h;
}

std::size_t rank(const IntMatrix& m) {
    IntMatrix h = hermite_form(m);
    std::size_t r = 0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        bool nz = false;
        for (std::size_t j = 0; j < h.cols(); ++j) nz = nz || h(i, j) != 0;
        if (nz) ++r;
    }
    return r;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    IntMatrix left;
    IntMatrix h = hermite_form(m, &left);
    if (!(h == IntMatrix::identity(m.rows()))) throw std::invalid_argument("matrix is not unimodular");
    return left;
}

IntMatrix adjugate(const IntMatrix& m) {
    const std::size_t n = m.rows();
    IntMatrix adj(n, n);
    if (n == 1) {
        adj(0, 0) = 1;
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            IntMatrix minor(n - 1, n - 1);
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(rr, cc++) = m(r, c);
                }
                ++rr;
            }
            Int d = determinant(minor);
            adj(j, i) = ((i + j) % 2 == 0) ? d : checked_sub(0, d);
        }
    return adj;
}

IntVector HermiteSmith::invariants() const {
    IntVector d;
    for (std::size_t i = 0; i < rank; ++i) d.push_back(smith(i, i));
    return d;
}

HermiteSmith hermite_smith(const IntMatrix& m) {
    HermiteSmith out;
    out.hermite = hermite_form(m, &out.hermite_left);

    const std::size_t rows = m.rows(), cols = m.cols();
    IntMatrix s = m;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);
    IntMatrix vinv = IntMatrix::identity(cols);

    auto col_add = [&](std::size_t j, std::size_t t, Int f) {  // col_j += f col_t
        s.add_col_multiple(j, t, f);
        v.add_col_multiple(j, t, f);
        vinv.add_row_multiple(t, j, checked_sub(0, f));
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        s.swap_cols(i, j);
        v.swap_cols(i, j);
        vinv.swap_rows(i, j);
    };
    auto row_add = [&](std::size_t i, std::size_t t, Int f) {
        s.add_row_multiple(i, t, f);
        u.add_row_multiple(i, t, f);
    };
    auto row_swap = [&](std::size_t i, std::size_t j) {
        s.swap_rows(i, j);
        u.swap_rows(i, j);
    };

    std::size_t t = 0;
    for (; t < std::min(rows, cols); ++t) {
        // pivot: smallest non-zero magnitude in the trailing block
        auto bring_min_pivot = [&]() -> bool {
            std::size_t bi = rows, bj = cols;
            Int best = 0;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    Int a = std::llabs(s(i, j));
                    if (a != 0 && (best == 0 || a < best)) {
                        best = a;
                        bi = i;
                        bj = j;
                    }
                }
            if (best == 0) return false;
            row_swap(t, bi);
            col_swap(t, bj);
            return true;
        };
        if (!bring_min_pivot()) break;
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (s(i, t) == 0) continue;
                row_add(i, t, -(s(i, t) / s(t, t)));
                if (s(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (s(t, j) == 0) continue;
                col_add(j, t, -(s(t, j) / s(t, t)));
                if (s(t, j) != 0) clean = false;
            }
            if (!clean) {
                bring_min_pivot();
                continue;
            }
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (s(i, j) % s(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            row_add(t, bad, 1);
        }
        if (s(t, t) < 0) {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    out.rank = t;
    out.smith = std::move(s);
    out.smith_left = std::move(u);
    out.smith_right = std::move(v);
    out.smith_right_inverse = std::move(vinv);
    return out;
}

}  // namespace nsolve
