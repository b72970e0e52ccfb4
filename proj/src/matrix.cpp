#include "atiyah/matrix.hpp"

#include <cstdlib>

namespace atiyah {

namespace {

// Entries below this bound keep 500-term __int128 accumulations far from
// overflow (|a*b| < 2^60, 2^63 terms of headroom).
constexpr std::int64_t kFastEntryBound = (std::int64_t(1) << 30);

Int int128_to_cpp(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    Int hi = static_cast<std::uint64_t>(u >> 64);
    Int lo = static_cast<std::uint64_t>(u);
    Int r = (hi << 64) | lo;
    return neg ? -r : r;
}

bool extract_int64(const Mat<Scalar>& m, std::vector<std::int64_t>& out) {
    const Ring& ring = m.ctx().ring;
    if (ring.kind() != RingKind::Z && ring.kind() != RingKind::Fp) return false;
    out.resize(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            std::int64_t v;
            if (!m.at(i, j).fits_int64(v) || std::llabs(v) >= kFastEntryBound) return false;
            out[static_cast<size_t>(i) * m.cols() + j] = v;
        }
    }
    return true;
}

}  // namespace

template <>
Mat<Scalar> Mat<Scalar>::operator*(const Mat<Scalar>& o) const {
    if (cols_ != o.rows()) throw MismatchError("matrix product shape mismatch");
    if (!(ctx_ == o.ctx())) throw MismatchError("matrix ring mismatch");
    // int64 fast lane: the Dold-Kan pipeline multiplies many mid-size
    // matrices with tiny entries, where cpp_rational arithmetic dominates.
    std::vector<std::int64_t> A, B;
    if (cols_ <= 500 && extract_int64(*this, A) && extract_int64(o, B)) {
        Mat<Scalar> r(rows_, o.cols(), ctx_);
        const Ring& ring = ctx_.ring;
        bool fp = ring.kind() == RingKind::Fp;
        __int128 mod = fp ? static_cast<__int128>(ring.modulus()) : 0;
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < o.cols(); ++j) {
                __int128 acc = 0;
                const std::int64_t* arow = &A[static_cast<size_t>(i) * cols_];
                for (int k = 0; k < cols_; ++k) {
                    std::int64_t bkj = B[static_cast<size_t>(k) * o.cols() + j];
                    if (bkj != 0 && arow[k] != 0) acc += static_cast<__int128>(arow[k]) * bkj;
                }
                if (fp) acc %= mod;
                if (acc != 0) r.at(i, j) = Scalar(ring, int128_to_cpp(acc));
            }
        }
        return r;
    }
    return mat_mul_generic(*this, o);
}

}  // namespace atiyah
