#include "atiyah/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace atiyah {

namespace {

using Dense = std::vector<std::vector<Int>>;

Dense to_dense(const MatS& m) {
    Dense d(m.rows(), std::vector<Int>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) d[i][j] = m.at(i, j).numerator();
    return d;
}

MatS from_dense(const Dense& d, Ring ring) {
    int rows = static_cast<int>(d.size());
    int cols = rows ? static_cast<int>(d[0].size()) : 0;
    MatS m(rows, cols, {ring});
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = Scalar(ring, d[i][j]);
    return m;
}

struct SnfWork {
    Dense a, u, v;  // invariant: u * original * v == a
    int rows, cols;

    void swap_rows(int i, int j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (auto& row : a) std::swap(row[i], row[j]);
        for (auto& row : v) std::swap(row[i], row[j]);
    }
    void add_row(int dst, int src, const Int& q) {  // row_dst += q * row_src
        if (q == 0) return;
        for (int j = 0; j < cols; ++j) a[dst][j] += q * a[src][j];
        for (int j = 0; j < rows; ++j) u[dst][j] += q * u[src][j];
    }
    void add_col(int dst, int src, const Int& q) {
        if (q == 0) return;
        for (int i = 0; i < rows; ++i) a[i][dst] += q * a[i][src];
        for (int i = 0; i < cols; ++i) v[i][dst] += q * v[i][src];
    }
    void negate_row(int i) {
        for (auto& x : a[i]) x = -x;
        for (auto& x : u[i]) x = -x;
    }
};

bool find_pivot(const SnfWork& w, int t, int& pi, int& pj) {
    bool found = false;
    Int best = 0;
    for (int i = t; i < w.rows; ++i) {
        for (int j = t; j < w.cols; ++j) {
            const Int& x = w.a[i][j];
            if (x == 0) continue;
            Int ax = boost::multiprecision::abs(x);
            if (!found || ax < best) {
                found = true;
                best = ax;
                pi = i;
                pj = j;
            }
        }
    }
    return found;
}

}  // namespace

SnfResult smith_normal_form(const MatS& M) {
    if (M.ctx().ring.kind() != RingKind::Z) throw MismatchError("smith_normal_form: base ring must be Z");
    SnfWork w;
    w.rows = M.rows();
    w.cols = M.cols();
    w.a = to_dense(M);
    w.u.assign(w.rows, std::vector<Int>(w.rows, 0));
    for (int i = 0; i < w.rows; ++i) w.u[i][i] = 1;
    w.v.assign(w.cols, std::vector<Int>(w.cols, 0));
    for (int i = 0; i < w.cols; ++i) w.v[i][i] = 1;

    int t = 0;
    int nmin = std::min(w.rows, w.cols);
    while (t < nmin) {
        int pi, pj;
        if (!find_pivot(w, t, pi, pj)) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < w.rows; ++i) {
                if (w.a[i][t] == 0) continue;
                Int q = w.a[i][t] / w.a[t][t];
                w.add_row(i, t, -q);
                if (w.a[i][t] != 0) {  // remainder becomes the smaller pivot
                    w.swap_rows(t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < w.cols; ++j) {
                if (w.a[t][j] == 0) continue;
                Int q = w.a[t][j] / w.a[t][t];
                w.add_col(j, t, -q);
                if (w.a[t][j] != 0) {
                    w.swap_cols(t, j);
                    clean = false;
                }
            }
            if (clean) {
                // pivot must divide the rest of the submatrix for d_1 | d_2 | ...
                for (int i = t + 1; i < w.rows && clean; ++i) {
                    for (int j = t + 1; j < w.cols && clean; ++j) {
                        if (w.a[i][j] % w.a[t][t] != 0) {
                            w.add_row(t, i, 1);
                            clean = false;
                        }
                    }
                }
            }
        }
        if (w.a[t][t] < 0) w.negate_row(t);
        ++t;
    }
    Ring z = Ring::integers();
    SnfResult res{from_dense(w.u, z), from_dense(w.a, z), from_dense(w.v, z)};
    return res;
}

std::vector<Int> elementary_divisors(const MatS& M) {
    SnfResult s = smith_normal_form(M);
    std::vector<Int> d;
    int nmin = std::min(M.rows(), M.cols());
    for (int i = 0; i < nmin; ++i) {
        Int x = s.D.at(i, i).numerator();
        if (x != 0) d.push_back(x);
    }
    return d;
}

namespace {

// ---- Gauss elimination over a field (Q or F_p), generic Scalar version ----

struct Rref {
    MatS m;
    std::vector<int> pivot_cols;
};

Rref rref_field(const MatS& M) {
    Rref r{M, {}};
    int rows = M.rows(), cols = M.cols();
    int lead = 0;
    for (int col = 0; col < cols && lead < rows; ++col) {
        int piv = -1;
        for (int i = lead; i < rows; ++i) {
            if (!r.m.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != lead) {
            for (int j = 0; j < cols; ++j) std::swap(r.m.at(piv, j), r.m.at(lead, j));
        }
        Scalar inv = r.m.at(lead, col).inverse();
        for (int j = col; j < cols; ++j) r.m.at(lead, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == lead || r.m.at(i, col).is_zero()) continue;
            Scalar f = r.m.at(i, col);
            for (int j = col; j < cols; ++j) r.m.at(i, j) -= f * r.m.at(lead, j);
        }
        r.pivot_cols.push_back(col);
        ++lead;
    }
    return r;
}

bool is_field_ring(Ring r) { return r.is_field(); }

// ---- F_p fast lane (uint64 arithmetic, modulus < 2^31) ----

struct FpMat {
    std::uint64_t p;
    int rows, cols;
    std::vector<std::uint64_t> a;
    std::uint64_t& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    std::uint64_t at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

std::uint64_t fp_inv(std::uint64_t x, std::uint64_t p) {
    // Fermat: p prime, x != 0
    std::uint64_t r = 1, b = x % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

bool fp_usable(Ring ring) { return ring.kind() == RingKind::Fp && ring.modulus() < (1u << 31); }

FpMat fp_from(const MatS& m) {
    std::uint64_t p = m.ctx().ring.modulus();
    FpMat f{p, m.rows(), m.cols(), std::vector<std::uint64_t>(static_cast<size_t>(m.rows()) * m.cols())};
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) f.at(i, j) = static_cast<std::uint64_t>(m.at(i, j).numerator());
    return f;
}

MatS fp_to(const FpMat& f, Ring ring, int rows, int cols) {
    MatS m(rows, cols, {ring});
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (f.at(i, j)) m.at(i, j) = Scalar(ring, Int(f.at(i, j)));
        }
    return m;
}

std::vector<int> fp_rref(FpMat& m) {
    std::vector<int> pivots;
    const std::uint64_t p = m.p;
    int lead = 0;
    for (int col = 0; col < m.cols && lead < m.rows; ++col) {
        int piv = -1;
        for (int i = lead; i < m.rows; ++i) {
            if (m.at(i, col)) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != lead) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(lead, j));
        }
        std::uint64_t inv = fp_inv(m.at(lead, col), p);
        for (int j = col; j < m.cols; ++j) m.at(lead, j) = m.at(lead, j) * inv % p;
        for (int i = 0; i < m.rows; ++i) {
            std::uint64_t f = m.at(i, col);
            if (i == lead || f == 0) continue;
            std::uint64_t neg = p - f;
            for (int j = col; j < m.cols; ++j) m.at(i, j) = (m.at(i, j) + neg * m.at(lead, j)) % p;
        }
        pivots.push_back(col);
        ++lead;
    }
    return pivots;
}

}  // namespace

int rank_of(const MatS& M) {
    Ring ring = M.ctx().ring;
    if (ring.kind() == RingKind::Z) {
        // rank over Q
        MatS q(M.rows(), M.cols(), {Ring::rationals()});
        for (int i = 0; i < M.rows(); ++i)
            for (int j = 0; j < M.cols(); ++j) q.at(i, j) = Scalar(Ring::rationals(), M.at(i, j).value());
        return static_cast<int>(rref_field(q).pivot_cols.size());
    }
    if (!is_field_ring(ring)) throw MismatchError("rank_of: unsupported ring " + ring.to_string());
    return static_cast<int>(rref_field(M).pivot_cols.size());
}

MatS kernel_basis(const MatS& M) {
    Ring ring = M.ctx().ring;
    if (ring.kind() == RingKind::Z) {
        SnfResult s = smith_normal_form(M);
        int nmin = std::min(M.rows(), M.cols());
        std::vector<int> free_cols;
        for (int j = 0; j < M.cols(); ++j) {
            if (j >= nmin || s.D.at(j, j).is_zero()) free_cols.push_back(j);
        }
        return s.V.columns(free_cols);
    }
    if (!is_field_ring(ring)) throw MismatchError("kernel_basis: unsupported ring " + ring.to_string());
    Rref r = rref_field(M);
    int cols = M.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int c : r.pivot_cols) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < cols; ++j) {
        if (!is_pivot[j]) free_cols.push_back(j);
    }
    MatS K(cols, static_cast<int>(free_cols.size()), M.ctx());
    for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
        int fc = free_cols[k];
        K.at(fc, k) = Scalar::one(ring);
        for (int pi = 0; pi < static_cast<int>(r.pivot_cols.size()); ++pi) {
            K.at(r.pivot_cols[pi], k) = -r.m.at(pi, fc);
        }
    }
    return K;
}

std::optional<MatS> solve_exact(const MatS& A, const MatS& B) {
    if (A.rows() != B.rows()) throw MismatchError("solve_exact: row mismatch");
    Ring ring = A.ctx().ring;
    if (ring.kind() == RingKind::Z) {
        SnfResult s = smith_normal_form(A);  // U A V = D
        MatS ub = s.U * B;
        int nmin = std::min(A.rows(), A.cols());
        MatS y(A.cols(), B.cols(), A.ctx());
        for (int i = 0; i < A.rows(); ++i) {
            Int d = (i < nmin) ? s.D.at(i, i).numerator() : Int(0);
            for (int j = 0; j < B.cols(); ++j) {
                Int b = ub.at(i, j).numerator();
                if (d == 0) {
                    if (b != 0) return std::nullopt;
                } else {
                    if (b % d != 0) return std::nullopt;
                    if (i < A.cols()) y.at(i, j) = Scalar(ring, b / d);
                }
            }
        }
        return s.V * y;
    }
    if (!is_field_ring(ring)) throw MismatchError("solve_exact: unsupported ring " + ring.to_string());
    Rref r = rref_field(A.hstack(B));
    int acols = A.cols();
    MatS x(acols, B.cols(), A.ctx());
    for (int pi = 0; pi < static_cast<int>(r.pivot_cols.size()); ++pi) {
        int c = r.pivot_cols[pi];
        if (c >= acols) return std::nullopt;  // pivot in the RHS block: inconsistent
        for (int j = 0; j < B.cols(); ++j) x.at(c, j) = r.m.at(pi, acols + j);
    }
    // verify (free variables set to zero)
    if (!(A * x == B)) return std::nullopt;
    return x;
}

}  // namespace atiyah
