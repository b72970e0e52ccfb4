#pragma once

#include <cstdint>
#include <vector>

#include "atiyah/form.hpp"
#include "atiyah/laurent.hpp"
#include "atiyah/ring.hpp"

namespace atiyah {

/// Construction context carrying what a zero element needs (ring, chart
/// dimension, form degree). Matrices may be 0 x n, so entries alone cannot
/// supply it.
template <typename T>
struct MatCtx;

template <>
struct MatCtx<Scalar> {
    Ring ring;
    Scalar zero() const { return Scalar::zero(ring); }
    Scalar one() const { return Scalar::one(ring); }
    bool operator==(const MatCtx& o) const { return ring == o.ring; }
};

template <>
struct MatCtx<LaurentPoly> {
    Ring ring;
    int nvars = 0;
    LaurentPoly zero() const { return LaurentPoly::zero(ring, nvars); }
    LaurentPoly one() const { return LaurentPoly::one(ring, nvars); }
    bool operator==(const MatCtx& o) const { return ring == o.ring && nvars == o.nvars; }
};

template <>
struct MatCtx<DifferentialForm> {
    Ring ring;
    int nvars = 0;
    int degree = 0;
    DifferentialForm zero() const { return DifferentialForm::zero(ring, nvars, degree); }
    DifferentialForm one() const { return DifferentialForm::one(ring, nvars); }  // degree 0 only
    bool operator==(const MatCtx& o) const { return ring == o.ring && nvars == o.nvars && degree == o.degree; }
};

inline MatCtx<Scalar> ctx_of(const Scalar& s) { return {s.ring()}; }
inline MatCtx<LaurentPoly> ctx_of(const LaurentPoly& p) { return {p.ring(), p.nvars()}; }
inline MatCtx<DifferentialForm> ctx_of(const DifferentialForm& f) { return {f.ring(), f.nvars(), f.degree()}; }

/// Dense matrix over an exact coefficient type. Row-major; for
/// DifferentialForm entries the product uses the wedge.
template <typename T>
class Mat {
  public:
    using Ctx = MatCtx<T>;

    Mat(int rows, int cols, Ctx ctx) : rows_(rows), cols_(cols), ctx_(ctx), a_(static_cast<size_t>(rows) * cols, ctx.zero()) {}

    static Mat identity(int n, Ctx ctx) {
        Mat m(n, n, ctx);
        for (int i = 0; i < n; ++i) m.at(i, i) = ctx.one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Ctx& ctx() const { return ctx_; }

    T& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const T& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_) {
            if (!x.is_zero()) return false;
        }
        return true;
    }

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const {
        require_shape(o, rows_, cols_);
        Mat r(*this);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = r.a_[k] + o.a_[k];
        return r;
    }

    Mat operator-(const Mat& o) const {
        require_shape(o, rows_, cols_);
        Mat r(*this);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = r.a_[k] - o.a_[k];
        return r;
    }

    Mat operator-() const {
        Mat r(*this);
        for (auto& x : r.a_) x = -x;
        return r;
    }

    Mat operator*(const Mat& o) const;

    template <typename S>
    Mat scaled(const S& c) const {
        Mat r(*this);
        for (auto& x : r.a_) x = x * c;
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_, ctx_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        }
        return r;
    }

    Mat vstack(const Mat& o) const {
        if (cols_ != o.cols_) throw MismatchError("vstack: column mismatch");
        Mat r(rows_ + o.rows_, cols_, ctx_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int i = 0; i < o.rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
        return r;
    }

    Mat hstack(const Mat& o) const {
        if (rows_ != o.rows_) throw MismatchError("hstack: row mismatch");
        Mat r(rows_, cols_ + o.cols_, ctx_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
            for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
        }
        return r;
    }

    Mat columns(const std::vector<int>& idx) const {
        Mat r(rows_, static_cast<int>(idx.size()), ctx_);
        for (int j = 0; j < static_cast<int>(idx.size()); ++j)
            for (int i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
        return r;
    }

    T trace() const {
        if (rows_ != cols_) throw MismatchError("trace of non-square matrix");
        T t = ctx_.zero();
        for (int i = 0; i < rows_; ++i) t = t + at(i, i);
        return t;
    }

  private:
    void require_shape(const Mat& o, int r, int c) const {
        if (o.rows_ != r || o.cols_ != c || !(ctx_ == o.ctx_)) throw MismatchError("matrix shape/context mismatch");
    }

    int rows_, cols_;
    Ctx ctx_;
    std::vector<T> a_;
};

template <typename T>
Mat<T> mat_mul_generic(const Mat<T>& a, const Mat<T>& b) {
    if (a.cols() != b.rows()) throw MismatchError("matrix product shape mismatch");
    Mat<T> r(a.rows(), b.cols(), (a.rows() > 0 || b.cols() > 0) ? a.ctx() : a.ctx());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const T& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                const T& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) = r.at(i, j) + aik * bkj;
            }
        }
    }
    return r;
}

// Wedge degrees add, so the product context differs from the operands'.
template <>
inline Mat<DifferentialForm> Mat<DifferentialForm>::operator*(const Mat<DifferentialForm>& o) const {
    if (cols_ != o.rows()) throw MismatchError("matrix product shape mismatch");
    MatCtx<DifferentialForm> rctx{ctx_.ring, ctx_.nvars, ctx_.degree + o.ctx().degree};
    Mat<DifferentialForm> r(rows_, o.cols(), rctx);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const DifferentialForm& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols(); ++j) {
                const DifferentialForm& bkj = o.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    }
    return r;
}

template <>
Mat<Scalar> Mat<Scalar>::operator*(const Mat<Scalar>& o) const;  // fast int64 path in matrix.cpp

template <>
inline Mat<LaurentPoly> Mat<LaurentPoly>::operator*(const Mat<LaurentPoly>& o) const {
    return mat_mul_generic(*this, o);
}

using MatS = Mat<Scalar>;
using MatP = Mat<LaurentPoly>;
using MatF = Mat<DifferentialForm>;

/// Determinant by cofactor expansion; fine for the small ranks used here.
template <typename T>
T det_small(const Mat<T>& m) {
    if (m.rows() != m.cols()) throw MismatchError("determinant of non-square matrix");
    int n = m.rows();
    if (n == 0) return m.ctx().one();
    if (n == 1) return m.at(0, 0);
    T acc = m.ctx().zero();
    // expand along the first row with alternating signs
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        Mat<T> minor(n - 1, n - 1, m.ctx());
        for (int i = 1; i < n; ++i) {
            int cj = 0;
            for (int k = 0; k < n; ++k) {
                if (k == j) continue;
                minor.at(i - 1, cj++) = m.at(i, k);
            }
        }
        T term = m.at(0, j) * det_small(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace atiyah
