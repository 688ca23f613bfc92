#pragma once

#include "strclan/field.hpp"

#include <optional>
#include <vector>

namespace strclan {

/// Dense matrix over an exact field. Row-major.
template <class F>
struct Matrix {
    using Elem = typename F::Elem;
    F f;
    int rows = 0, cols = 0;
    std::vector<Elem> a;

    Matrix() = default;
    Matrix(F fld, int r, int c) : f(fld), rows(r), cols(c), a(static_cast<size_t>(r) * c, fld.zero()) {}

    Elem& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Elem& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static Matrix identity(F fld, int n) {
        Matrix m(fld, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = fld.one();
        return m;
    }

    bool is_zero() const {
        for (const auto& x : a)
            if (!f.is_zero(x)) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        if (rows != o.rows || cols != o.cols) return false;
        for (size_t i = 0; i < a.size(); ++i)
            if (!f.eq(a[i], o.a[i])) return false;
        return true;
    }

    Matrix mul(const Matrix& o) const {
        if (cols != o.rows) throw domain_error("matrix shape mismatch in multiply");
        Matrix r(f, rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                const Elem& x = at(i, k);
                if (f.is_zero(x)) continue;
                for (int j = 0; j < o.cols; ++j) {
                    const Elem& y = o.at(k, j);
                    if (f.is_zero(y)) continue;
                    r.at(i, j) = f.add(r.at(i, j), f.mul(x, y));
                }
            }
        return r;
    }

    Matrix add(const Matrix& o) const {
        if (rows != o.rows || cols != o.cols) throw domain_error("matrix shape mismatch in add");
        Matrix r = *this;
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = f.add(r.a[i], o.a[i]);
        return r;
    }

    Matrix sub(const Matrix& o) const {
        if (rows != o.rows || cols != o.cols) throw domain_error("matrix shape mismatch in sub");
        Matrix r = *this;
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = f.sub(r.a[i], o.a[i]);
        return r;
    }

    Matrix scale(const Elem& s) const {
        Matrix r = *this;
        for (auto& x : r.a) x = f.mul(x, s);
        return r;
    }

    /// Column c as a matrix-free vector.
    std::vector<Elem> col(int c) const {
        std::vector<Elem> v(rows);
        for (int i = 0; i < rows; ++i) v[i] = at(i, c);
        return v;
    }

    std::vector<Elem> apply(const std::vector<Elem>& v) const {
        if (static_cast<int>(v.size()) != cols) throw domain_error("matrix/vector shape mismatch");
        std::vector<Elem> r(rows, f.zero());
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (!f.is_zero(at(i, j)) && !f.is_zero(v[j]))
                    r[i] = f.add(r[i], f.mul(at(i, j), v[j]));
        return r;
    }
};

/// Row-reduce in place; returns pivot columns. Used for rank/solve/nullspace.
template <class F>
std::vector<int> row_reduce(Matrix<F>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pr = -1;
        for (int i = r; i < m.rows; ++i)
            if (!m.f.is_zero(m.at(i, c))) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(r, j));
        auto piv = m.f.inv(m.at(r, c));
        for (int j = c; j < m.cols; ++j) m.at(r, j) = m.f.mul(m.at(r, j), piv);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m.f.is_zero(m.at(i, c))) continue;
            auto fac = m.at(i, c);
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) = m.f.sub(m.at(i, j), m.f.mul(fac, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
int rank(Matrix<F> m) {
    return static_cast<int>(row_reduce(m).size());
}

/// Basis of the right null space (columns x with Mx = 0).
template <class F>
std::vector<std::vector<typename F::Elem>> nullspace(Matrix<F> m) {
    auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<typename F::Elem>> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<typename F::Elem> v(m.cols, m.f.zero());
        v[c] = m.f.one();
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = m.f.neg(m.at(static_cast<int>(r), c));
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
    if (m.rows != m.cols) return std::nullopt;
    Matrix<F> aug(m.f, m.rows, 2 * m.cols);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols + i) = m.f.one();
    }
    auto pivots = row_reduce(aug);
    if (static_cast<int>(pivots.size()) != m.rows || pivots.back() >= m.cols) {
        if (static_cast<int>(pivots.size()) < m.rows) return std::nullopt;
    }
    for (int i = 0; i < m.rows; ++i)
        if (i >= static_cast<int>(pivots.size()) || pivots[i] != i) return std::nullopt;
    Matrix<F> inv(m.f, m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) inv.at(i, j) = aug.at(i, m.cols + j);
    return inv;
}

/// One solution of Mx = b, if consistent.
template <class F>
std::optional<std::vector<typename F::Elem>> solve(const Matrix<F>& m, const std::vector<typename F::Elem>& b) {
    Matrix<F> aug(m.f, m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    auto pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
    std::vector<typename F::Elem> x(m.cols, m.f.zero());
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), m.cols);
    return x;
}

} // namespace strclan
