#pragma once

#include <cassert>
#include <optional>
#include <vector>

#include "homext/field.hpp"

namespace homext {

// Dense matrix over an exact field. Every dimension in this library is tiny,
// so plain Gaussian elimination is the whole story.
template <class F>
class Mat {
public:
    Mat() : r_(0), c_(0) {}
    Mat(int r, int c) : r_(r), c_(c), a_(static_cast<size_t>(r) * c) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }

    F& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const F& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    friend Mat operator*(const Mat& x, const Mat& y) {
        assert(x.c_ == y.r_);
        Mat z(x.r_, y.c_);
        for (int i = 0; i < x.r_; ++i)
            for (int k = 0; k < x.c_; ++k) {
                const F& v = x(i, k);
                if (field_is_zero(v)) continue;
                for (int j = 0; j < y.c_; ++j) {
                    if (field_is_zero(y(k, j))) continue;
                    z(i, j) += v * y(k, j);
                }
            }
        return z;
    }

    friend Mat operator+(const Mat& x, const Mat& y) {
        assert(x.r_ == y.r_ && x.c_ == y.c_);
        Mat z(x.r_, x.c_);
        for (size_t t = 0; t < x.a_.size(); ++t) z.a_[t] = x.a_[t] + y.a_[t];
        return z;
    }

    friend Mat operator-(const Mat& x, const Mat& y) {
        assert(x.r_ == y.r_ && x.c_ == y.c_);
        Mat z(x.r_, x.c_);
        for (size_t t = 0; t < x.a_.size(); ++t) z.a_[t] = x.a_[t] - y.a_[t];
        return z;
    }

    bool is_zero() const {
        for (const F& v : a_)
            if (!field_is_zero(v)) return false;
        return true;
    }

    int rank() const {
        Mat m = *this;
        return m.eliminate();
    }

    // In-place row echelon; returns rank. Pivot columns in *pivots when given.
    int eliminate(std::vector<int>* pivots = nullptr) {
        int rank = 0;
        for (int col = 0; col < c_ && rank < r_; ++col) {
            int piv = -1;
            for (int i = rank; i < r_; ++i)
                if (!field_is_zero((*this)(i, col))) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            swap_rows(piv, rank);
            F inv = F(1) / (*this)(rank, col);
            for (int j = col; j < c_; ++j) (*this)(rank, j) *= inv;
            for (int i = 0; i < r_; ++i) {
                if (i == rank) continue;
                const F f = (*this)(i, col);
                if (field_is_zero(f)) continue;
                for (int j = col; j < c_; ++j) (*this)(i, j) -= f * (*this)(rank, j);
            }
            if (pivots) pivots->push_back(col);
            ++rank;
        }
        return rank;
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < c_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }

private:
    int r_, c_;
    std::vector<F> a_;
};

template <class F>
std::vector<std::vector<F>> kernel_basis(const Mat<F>& m) {
    Mat<F> e = m;
    std::vector<int> pivots;
    e.eliminate(&pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<F>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(m.cols());
        v[free] = F(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// One solution of A x = b, if any.
template <class F>
std::optional<std::vector<F>> solve(const Mat<F>& a, const std::vector<F>& b) {
    assert(static_cast<int>(b.size()) == a.rows());
    Mat<F> aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    std::vector<int> pivots;
    aug.eliminate(&pivots);
    for (size_t r = 0; r < pivots.size(); ++r)
        if (pivots[r] == a.cols()) return std::nullopt;
    std::vector<F> x(a.cols());
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(static_cast<int>(r), a.cols());
    return x;
}

// Row space kept in reduced echelon form; supports incremental spans.
template <class F>
class RowSpace {
public:
    explicit RowSpace(int ambient) : ambient_(ambient) {}

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(rows_.size()); }

    // Returns true when the vector enlarged the span.
    bool add(std::vector<F> v) {
        assert(static_cast<int>(v.size()) == ambient_);
        reduce(v);
        int lead = leading(v);
        if (lead < 0) return false;
        F inv = F(1) / v[lead];
        for (F& x : v) x *= inv;
        // keep rows sorted by leading index and fully reduced
        for (auto& row : rows_) {
            if (!field_is_zero(row[lead])) {
                F f = row[lead];
                for (int j = 0; j < ambient_; ++j) row[j] -= f * v[j];
            }
        }
        auto it = rows_.begin();
        while (it != rows_.end() && leading(*it) < lead) ++it;
        rows_.insert(it, std::move(v));
        return true;
    }

    bool contains(std::vector<F> v) const {
        reduce(v);
        return leading(v) < 0;
    }

    const std::vector<std::vector<F>>& basis() const { return rows_; }

private:
    int leading(const std::vector<F>& v) const {
        for (int j = 0; j < ambient_; ++j)
            if (!field_is_zero(v[j])) return j;
        return -1;
    }
    void reduce(std::vector<F>& v) const {
        for (const auto& row : rows_) {
            int lead = leading(row);
            if (lead < 0 || field_is_zero(v[lead])) continue;
            F f = v[lead] / row[lead];
            for (int j = lead; j < ambient_; ++j) v[j] -= f * row[j];
        }
    }

    int ambient_;
    std::vector<std::vector<F>> rows_;
};

}  // namespace homext
