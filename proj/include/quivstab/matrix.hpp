#pragma once

#include "quivstab/field.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace quivstab {

// Dense matrix over a runtime field object. Row-major.
template <class F>
class Mat {
  public:
    using E = typename F::Elem;

    Mat() : nr_(0), nc_(0) {}
    Mat(F f, int rows, int cols) : f_(std::move(f)), nr_(rows), nc_(cols), a_(size_t(rows) * cols, f_.zero()) {}

    static Mat identity(F f, int n) {
        Mat m(f, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    int rows() const { return nr_; }
    int cols() const { return nc_; }
    const F& field() const { return f_; }

    E& at(int i, int j) { return a_[size_t(i) * nc_ + j]; }
    const E& at(int i, int j) const { return a_[size_t(i) * nc_ + j]; }

    bool operator==(const Mat& o) const { return nr_ == o.nr_ && nc_ == o.nc_ && a_ == o.a_; }

    Mat operator*(const Mat& o) const {
        if (nc_ != o.nr_) throw InternalError("matrix product shape mismatch");
        Mat r(f_, nr_, o.nc_);
        for (int i = 0; i < nr_; ++i)
            for (int k = 0; k < nc_; ++k) {
                const E& aik = at(i, k);
                if (F::is_zero(aik)) continue;
                for (int j = 0; j < o.nc_; ++j)
                    r.at(i, j) = f_.add(r.at(i, j), f_.mul(aik, o.at(k, j)));
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        if (nr_ != o.nr_ || nc_ != o.nc_) throw InternalError("matrix sum shape mismatch");
        Mat r(f_, nr_, nc_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.add(a_[i], o.a_[i]);
        return r;
    }

    Mat operator-(const Mat& o) const {
        if (nr_ != o.nr_ || nc_ != o.nc_) throw InternalError("matrix difference shape mismatch");
        Mat r(f_, nr_, nc_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.sub(a_[i], o.a_[i]);
        return r;
    }

    Mat transpose() const {
        Mat r(f_, nc_, nr_);
        for (int i = 0; i < nr_; ++i)
            for (int j = 0; j < nc_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    bool is_zero() const {
        for (const E& x : a_)
            if (!F::is_zero(x)) return false;
        return true;
    }

    std::vector<E> apply(const std::vector<E>& v) const {
        if (int(v.size()) != nc_) throw InternalError("matrix apply shape mismatch");
        std::vector<E> r(nr_, f_.zero());
        for (int i = 0; i < nr_; ++i)
            for (int j = 0; j < nc_; ++j)
                if (!F::is_zero(at(i, j))) r[i] = f_.add(r[i], f_.mul(at(i, j), v[j]));
        return r;
    }

    // Reduced row echelon form in place; returns pivot column indices.
    std::vector<int> rref() {
        std::vector<int> pivots;
        int row = 0;
        for (int col = 0; col < nc_ && row < nr_; ++col) {
            int sel = -1;
            for (int i = row; i < nr_; ++i)
                if (!F::is_zero(at(i, col))) {
                    sel = i;
                    break;
                }
            if (sel < 0) continue;
            if (sel != row)
                for (int j = 0; j < nc_; ++j) std::swap(at(sel, j), at(row, j));
            E pinv = f_.inv(at(row, col));
            for (int j = col; j < nc_; ++j) at(row, j) = f_.mul(at(row, j), pinv);
            for (int i = 0; i < nr_; ++i) {
                if (i == row || F::is_zero(at(i, col))) continue;
                E c = at(i, col);
                for (int j = col; j < nc_; ++j)
                    at(i, j) = f_.sub(at(i, j), f_.mul(c, at(row, j)));
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    int rank() const {
        Mat tmp = *this;
        return int(tmp.rref().size());
    }

    // Basis of the right kernel {v : Av = 0}, as rows of the result.
    Mat kernel_basis() const {
        Mat tmp = *this;
        std::vector<int> piv = tmp.rref();
        std::vector<bool> is_piv(nc_, false);
        for (int c : piv) is_piv[c] = true;
        int free_cnt = nc_ - int(piv.size());
        Mat ker(f_, free_cnt, nc_);
        int kr = 0;
        for (int c = 0; c < nc_; ++c) {
            if (is_piv[c]) continue;
            ker.at(kr, c) = f_.one();
            for (size_t pi = 0; pi < piv.size(); ++pi)
                ker.at(kr, piv[pi]) = f_.neg(tmp.at(int(pi), c));
            ++kr;
        }
        return ker;
    }

    // One solution of Ax = b, if any.
    std::optional<std::vector<E>> solve(const std::vector<E>& b) const {
        if (int(b.size()) != nr_) throw InternalError("solve shape mismatch");
        Mat aug(f_, nr_, nc_ + 1);
        for (int i = 0; i < nr_; ++i) {
            for (int j = 0; j < nc_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, nc_) = b[i];
        }
        std::vector<int> piv = aug.rref();
        if (!piv.empty() && piv.back() == nc_) return std::nullopt;
        std::vector<E> x(nc_, f_.zero());
        for (size_t pi = 0; pi < piv.size(); ++pi) x[piv[pi]] = aug.at(int(pi), nc_);
        return x;
    }

    std::optional<Mat> inverse() const {
        if (nr_ != nc_) return std::nullopt;
        Mat aug(f_, nr_, 2 * nc_);
        for (int i = 0; i < nr_; ++i) {
            for (int j = 0; j < nc_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, nc_ + i) = f_.one();
        }
        std::vector<int> piv = aug.rref();
        if (int(piv.size()) != nr_) return std::nullopt;
        Mat inv(f_, nr_, nc_);
        for (int i = 0; i < nr_; ++i)
            for (int j = 0; j < nc_; ++j) inv.at(i, j) = aug.at(i, nc_ + j);
        return inv;
    }

    E det() const {
        if (nr_ != nc_) throw InternalError("determinant of non-square matrix");
        Mat tmp = *this;
        E d = f_.one();
        for (int col = 0; col < nc_; ++col) {
            int sel = -1;
            for (int i = col; i < nr_; ++i)
                if (!F::is_zero(tmp.at(i, col))) {
                    sel = i;
                    break;
                }
            if (sel < 0) return f_.zero();
            if (sel != col) {
                for (int j = 0; j < nc_; ++j) std::swap(tmp.at(sel, j), tmp.at(col, j));
                d = f_.neg(d);
            }
            d = f_.mul(d, tmp.at(col, col));
            E pinv = f_.inv(tmp.at(col, col));
            for (int i = col + 1; i < nr_; ++i) {
                if (F::is_zero(tmp.at(i, col))) continue;
                E c = f_.mul(tmp.at(i, col), pinv);
                for (int j = col; j < nc_; ++j)
                    tmp.at(i, j) = f_.sub(tmp.at(i, j), f_.mul(c, tmp.at(col, j)));
            }
        }
        return d;
    }

    // Rows of `other` appended below.
    Mat vstack(const Mat& other) const {
        if (nc_ != other.nc_) throw InternalError("vstack shape mismatch");
        Mat r(f_, nr_ + other.nr_, nc_);
        for (int i = 0; i < nr_; ++i)
            for (int j = 0; j < nc_; ++j) r.at(i, j) = at(i, j);
        for (int i = 0; i < other.nr_; ++i)
            for (int j = 0; j < nc_; ++j) r.at(nr_ + i, j) = other.at(i, j);
        return r;
    }

  private:
    F f_;
    int nr_, nc_;
    std::vector<E> a_;
};

using MatQ = Mat<QField>;
using MatFp = Mat<FpField>;

// Reduction of a rational matrix mod p; empty when a denominator dies.
inline std::optional<MatFp> reduce_matrix(const MatQ& m, std::int64_t p) {
    MatFp r(FpField(p), m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            auto v = reduce_mod_p(m.at(i, j), p);
            if (!v) return std::nullopt;
            r.at(i, j) = *v;
        }
    return r;
}

// Exact rank with a mod-p shortcut: a full mod-p rank certifies the rational
// rank (rank can only drop under reduction), otherwise falls back to exact
// elimination.
inline int rank_certified(const MatQ& m, std::int64_t p) {
    int bound = std::min(m.rows(), m.cols());
    if (bound == 0) return 0;
    if (auto red = reduce_matrix(m, p)) {
        int rp = red->rank();
        if (rp == bound) return rp;
    }
    return m.rank();
}

}  // namespace quivstab
