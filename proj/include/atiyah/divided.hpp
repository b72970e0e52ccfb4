#pragma once

#include <vector>

#include "atiyah/laurent.hpp"

namespace atiyah {

inline Scalar scale_by_integer(const Scalar& x, const Int& n) { return x * Scalar(x.ring(), n); }
inline LaurentPoly scale_by_integer(const LaurentPoly& x, const Int& n) { return x * Scalar(x.ring(), n); }

/// Truncated divided-power series a_0 + a_1 t/1! + ... + a_N t^N/N! over a
/// commutative coefficient group C (scalars, polynomials, class coordinates).
/// Multiplication follows (t^m/m!)(t^n/n!) = C(m+n,n) t^{m+n}/(m+n)!, with
/// binomials computed exactly over Z and then reduced into C's base ring.
template <typename C>
class DpSeries {
  public:
    DpSeries(int order, const C& zero) : zero_(zero), coeff_(order + 1, zero) {}

    int order() const { return static_cast<int>(coeff_.size()) - 1; }
    const C& operator[](int k) const { return coeff_.at(k); }
    void set(int k, const C& v) { coeff_.at(k) = v; }

    static DpSeries unit(int order, const C& zero, const C& one) {
        DpSeries s(order, zero);
        s.set(0, one);
        return s;
    }

    bool operator==(const DpSeries& o) const { return coeff_ == o.coeff_; }
    bool operator!=(const DpSeries& o) const { return !(*this == o); }

    DpSeries operator+(const DpSeries& o) const {
        require_same(o);
        DpSeries r(*this);
        for (int k = 0; k <= order(); ++k) r.coeff_[k] = r.coeff_[k] + o.coeff_[k];
        return r;
    }

    DpSeries operator-(const DpSeries& o) const {
        require_same(o);
        DpSeries r(*this);
        for (int k = 0; k <= order(); ++k) r.coeff_[k] = r.coeff_[k] - o.coeff_[k];
        return r;
    }

    /// coefficient of t^k/k! in the product is sum_{i+j=k} C(k,i) a_i b_j
    DpSeries operator*(const DpSeries& o) const {
        require_same(o);
        DpSeries r(order(), zero_);
        for (int k = 0; k <= order(); ++k) {
            C acc = zero_;
            for (int i = 0; i <= k; ++i) {
                acc = acc + scale_by_integer(coeff_[i] * o.coeff_[k - i], binomial_int(k, i));
            }
            r.coeff_[k] = acc;
        }
        return r;
    }

    bool is_zero() const {
        for (const auto& c : coeff_) {
            if (!(c == zero_)) return false;
        }
        return true;
    }

  private:
    void require_same(const DpSeries& o) const {
        if (order() != o.order()) throw MismatchError("divided-power truncation mismatch");
        if (!(zero_ == o.zero_)) throw MismatchError("divided-power coefficient group mismatch");
    }

    C zero_;
    std::vector<C> coeff_;
};

/// Inverse of a series with unit constant term a_0 = 1, up to truncation.
/// Division-free: the triangular system sum_i C(k,i) a_i b_{k-i} = [k == 0].
template <typename C>
DpSeries<C> dp_invert(const DpSeries<C>& a, const C& zero, const C& one) {
    if (!(a[0] == one)) throw Error("dp_invert: constant term is not 1");
    DpSeries<C> b(a.order(), zero);
    b.set(0, one);
    for (int k = 1; k <= a.order(); ++k) {
        C acc = zero;
        for (int i = 1; i <= k; ++i) {
            acc = acc + scale_by_integer(a[i] * b[k - i], binomial_int(k, i));
        }
        b.set(k, zero - acc);
    }
    return b;
}

}  // namespace atiyah
