#include "lefdt/homalg.hpp"

#include <algorithm>
#include <utility>

#include "lefdt/errors.hpp"

namespace lefdt {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw DomainError("matrix product shape mismatch");
    IntMatrix r(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < other.cols_; ++j) {
                const Int& y = other.at(k, j);
                if (y != 0) r.at(i, j) += x * y;
            }
        }
    return r;
}

Int IntMatrix::trace() const {
    if (rows_ != cols_) throw DomainError("trace of a non-square matrix");
    Int t = 0;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool IntMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

namespace {

Int exact_div(const Int& a, const Int& b) {
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) throw InternalError("exact integer division left a remainder");
    return q;
}

// Row and column operations applied in lockstep to s and the transformation
// records, preserving s == u * m * v throughout.
struct SmithWorker {
    IntMatrix s, u, v;

    void row_swap(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < s.cols(); ++j) std::swap(s.at(a, j), s.at(b, j));
        for (int j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
    }
    void col_swap(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < s.rows(); ++i) std::swap(s.at(i, a), s.at(i, b));
        for (int i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
    }
    // row a -= q * row b
    void row_sub(int a, int b, const Int& q) {
        if (q == 0) return;
        for (int j = 0; j < s.cols(); ++j) s.at(a, j) -= q * s.at(b, j);
        for (int j = 0; j < u.cols(); ++j) u.at(a, j) -= q * u.at(b, j);
    }
    // col a -= q * col b
    void col_sub(int a, int b, const Int& q) {
        if (q == 0) return;
        for (int i = 0; i < s.rows(); ++i) s.at(i, a) -= q * s.at(i, b);
        for (int i = 0; i < v.rows(); ++i) v.at(i, a) -= q * v.at(i, b);
    }
    void row_negate(int a) {
        for (int j = 0; j < s.cols(); ++j) s.at(a, j) = -s.at(a, j);
        for (int j = 0; j < u.cols(); ++j) u.at(a, j) = -u.at(a, j);
    }
    void row_add(int a, int b) {
        for (int j = 0; j < s.cols(); ++j) s.at(a, j) += s.at(b, j);
        for (int j = 0; j < u.cols(); ++j) u.at(a, j) += u.at(b, j);
    }

    // Euclidean reduction of column k to a single nonzero at (k, k).  The
    // minimum-magnitude entry is promoted to the pivot each round, so the pivot
    // strictly shrinks and the loop terminates.
    void reduce_column(int k) {
        for (;;) {
            int best = -1;
            for (int i = k; i < s.rows(); ++i)
                if (s.at(i, k) != 0 &&
                    (best < 0 || abs(s.at(i, k)) < abs(s.at(best, k))))
                    best = i;
            if (best < 0) return;
            row_swap(k, best);
            bool leftover = false;
            for (int i = k + 1; i < s.rows(); ++i)
                if (s.at(i, k) != 0) {
                    row_sub(i, k, s.at(i, k) / s.at(k, k));
                    leftover = leftover || s.at(i, k) != 0;
                }
            if (!leftover) return;
        }
    }
    void reduce_row(int k) {
        for (;;) {
            int best = -1;
            for (int j = k; j < s.cols(); ++j)
                if (s.at(k, j) != 0 &&
                    (best < 0 || abs(s.at(k, j)) < abs(s.at(k, best))))
                    best = j;
            if (best < 0) return;
            col_swap(k, best);
            bool leftover = false;
            for (int j = k + 1; j < s.cols(); ++j)
                if (s.at(k, j) != 0) {
                    col_sub(j, k, s.at(k, j) / s.at(k, k));
                    leftover = leftover || s.at(k, j) != 0;
                }
            if (!leftover) return;
        }
    }

    bool column_clear(int k) const {
        for (int i = k + 1; i < s.rows(); ++i)
            if (s.at(i, k) != 0) return false;
        return true;
    }
    bool row_clear(int k) const {
        for (int j = k + 1; j < s.cols(); ++j)
            if (s.at(k, j) != 0) return false;
        return true;
    }
};

}  // namespace

std::vector<Int> SmithForm::invariant_factors() const {
    std::vector<Int> out;
    for (int i = 0; i < rank; ++i) out.push_back(s.at(i, i));
    return out;
}

SmithForm smith_normal_form(const IntMatrix& m, PivotRule rule) {
    SmithWorker w{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    const int kmax = std::min(m.rows(), m.cols());
    int k = 0;
    while (k < kmax) {
        // Seat a pivot chosen by the configured rule.
        int pi = -1, pj = -1;
        for (int i = k; i < m.rows() && pi < 0; ++i)
            for (int j = k; j < m.cols(); ++j)
                if (w.s.at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;  // remaining submatrix is zero
        if (rule == PivotRule::min_abs)
            for (int i = k; i < m.rows(); ++i)
                for (int j = k; j < m.cols(); ++j)
                    if (w.s.at(i, j) != 0 && abs(w.s.at(i, j)) < abs(w.s.at(pi, pj))) {
                        pi = i;
                        pj = j;
                    }
        w.row_swap(k, pi);
        w.col_swap(k, pj);

        // Clearing the row can dirty the column and vice versa; alternate until
        // both are clear (each round shrinks the pivot, so this terminates).
        do {
            w.reduce_column(k);
            w.reduce_row(k);
        } while (!w.column_clear(k) || !w.row_clear(k));
        if (w.s.at(k, k) < 0) w.row_negate(k);

        // Divisibility: fold any non-multiple into row k and redo this step;
        // the pivot then drops to a proper divisor of itself.
        bool divides_rest = true;
        for (int i = k + 1; i < m.rows() && divides_rest; ++i)
            for (int j = k + 1; j < m.cols(); ++j)
                if (w.s.at(i, j) % w.s.at(k, k) != 0) {
                    w.row_add(k, i);
                    divides_rest = false;
                    break;
                }
        if (divides_rest) ++k;
    }

    SmithForm f{std::move(w.u), std::move(w.s), std::move(w.v), k};
    if (f.s != f.u * m * f.v) throw InternalError("Smith reduction lost the factorisation");
    for (int i = 0; i < f.s.rows(); ++i)
        for (int j = 0; j < f.s.cols(); ++j) {
            const Int& x = f.s.at(i, j);
            if (i != j && x != 0) throw InternalError("Smith form is not diagonal");
            if (i == j && x < 0) throw InternalError("Smith form has a negative entry");
        }
    for (int i = 0; i + 1 < f.rank; ++i)
        if (f.s.at(i + 1, i + 1) % f.s.at(i, i) != 0)
            throw InternalError("Smith form violates the divisibility chain");
    for (int i = f.rank; i < kmax; ++i)
        if (f.s.at(i, i) != 0) throw InternalError("Smith rank miscounted");
    Int du = determinant(f.u), dv = determinant(f.v);
    if ((du != 1 && du != -1) || (dv != 1 && dv != -1))
        throw InternalError("Smith transforms are not unimodular");
    return f;
}

int rank(const IntMatrix& m) {
    IntMatrix a = m;
    int r = 0;
    Int prev = 1;
    for (int col = 0; col < a.cols() && r < a.rows(); ++col) {
        int pivot = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(pivot, j), a.at(r, j));
        // Fraction-free (Bareiss) update: every entry stays a minor of m.
        for (int i = r + 1; i < a.rows(); ++i) {
            for (int j = col + 1; j < a.cols(); ++j)
                a.at(i, j) = exact_div(a.at(r, col) * a.at(i, j) - a.at(i, col) * a.at(r, j), prev);
            a.at(i, col) = 0;
        }
        prev = a.at(r, col);
        ++r;
    }
    return r;
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = exact_div(a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j), prev);
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

std::vector<std::vector<Rational>> solve_exact(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw DomainError("solve_exact shape mismatch");
    const int n = a.rows(), k = a.cols(), m = b.cols();
    std::vector<std::vector<Rational>> w(static_cast<size_t>(n),
                                         std::vector<Rational>(static_cast<size_t>(k + m)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j) w[i][j] = Rational(a.at(i, j));
        for (int j = 0; j < m; ++j) w[i][k + j] = Rational(b.at(i, j));
    }
    std::vector<int> pivot_row(static_cast<size_t>(k), -1);
    int row = 0;
    for (int col = 0; col < k; ++col) {
        int p = -1;
        for (int i = row; i < n; ++i)
            if (w[i][col] != 0) {
                p = i;
                break;
            }
        if (p < 0) throw InternalError("solve_exact requires independent columns");
        std::swap(w[p], w[row]);
        Rational inv = w[row][col];
        for (int j = col; j < k + m; ++j) w[row][j] /= inv;
        for (int i = 0; i < n; ++i) {
            if (i == row || w[i][col] == 0) continue;
            Rational f = w[i][col];
            for (int j = col; j < k + m; ++j) w[i][j] -= f * w[row][j];
        }
        pivot_row[static_cast<size_t>(col)] = row;
        ++row;
    }
    for (int i = row; i < n; ++i)
        for (int j = 0; j < m; ++j)
            if (w[i][k + j] != 0) throw InternalError("solve_exact given an inconsistent system");
    std::vector<std::vector<Rational>> x(static_cast<size_t>(k),
                                         std::vector<Rational>(static_cast<size_t>(m)));
    for (int c = 0; c < k; ++c)
        for (int j = 0; j < m; ++j) x[c][j] = w[pivot_row[static_cast<size_t>(c)]][k + j];
    return x;
}

void ChainComplexData::validate() const {
    if (boundary.size() != dims.size())
        throw DomainError("chain complex needs one boundary matrix per degree");
    for (size_t q = 0; q < dims.size(); ++q) {
        if (dims[q] < 0) throw DomainError("chain complex has a negative generator count");
        int expect_rows = q == 0 ? 0 : dims[q - 1];
        if (boundary[q].cols() != dims[q] || boundary[q].rows() != expect_rows)
            throw DomainError("boundary matrix shape disagrees with generator counts");
    }
}

bool ChainComplexData::boundaries_compose_to_zero() const {
    for (size_t q = 1; q < boundary.size(); ++q)
        if (!(boundary[q - 1] * boundary[q]).is_zero()) return false;
    return true;
}

Int ChainComplexData::euler_characteristic() const {
    Int chi = 0;
    for (size_t q = 0; q < dims.size(); ++q) chi += (q % 2 == 0) ? dims[q] : -dims[q];
    return chi;
}

std::vector<HomologyGroup> homology(const ChainComplexData& c) {
    c.validate();
    std::vector<SmithForm> f;
    f.reserve(c.dims.size());
    for (const IntMatrix& d : c.boundary) f.push_back(smith_normal_form(d));
    std::vector<HomologyGroup> h(c.dims.size());
    for (size_t q = 0; q < c.dims.size(); ++q) {
        int rank_in = q + 1 < c.dims.size() ? f[q + 1].rank : 0;
        h[q].betti = c.dims[q] - f[q].rank - rank_in;
        if (h[q].betti < 0) throw InternalError("negative Betti number");
        if (q + 1 < c.dims.size())
            for (const Int& d : f[q + 1].invariant_factors())
                if (d > 1) h[q].torsion.push_back(d);
    }
    return h;
}

const IntMatrix& ChainMap::mat(int q) const {
    if (q < 0 || q >= static_cast<int>(mats.size()))
        throw DomainError("chain map has no matrix in that degree");
    return mats[static_cast<size_t>(q)];
}

namespace {

IntMatrix boundary_or_zero(const ChainComplexData& c, int q, int fallback_cols) {
    if (q >= 0 && q <= c.top_dim()) return c.boundary[static_cast<size_t>(q)];
    return IntMatrix(c.dim(q - 1), fallback_cols);
}

}  // namespace

bool verify_chain_map(const ChainMap& cm) {
    cm.dom.validate();
    cm.cod.validate();
    if (cm.mats.size() != cm.dom.dims.size()) return false;
    for (int q = 0; q <= cm.dom.top_dim(); ++q) {
        const IntMatrix& f = cm.mats[static_cast<size_t>(q)];
        if (f.cols() != cm.dom.dim(q) || f.rows() != cm.cod.dim(q)) return false;
    }
    for (int q = 1; q <= cm.dom.top_dim(); ++q) {
        IntMatrix lhs = cm.mats[static_cast<size_t>(q - 1)] * cm.dom.boundary[static_cast<size_t>(q)];
        IntMatrix rhs = boundary_or_zero(cm.cod, q, cm.cod.dim(q)) * cm.mats[static_cast<size_t>(q)];
        if (lhs != rhs) return false;
    }
    return true;
}

Int alternating_chain_trace(const ChainMap& cm) {
    if (!cm.is_endomorphism())
        throw DomainError("alternating chain trace requires an endomorphism");
    Int t = 0;
    for (int q = 0; q <= cm.dom.top_dim(); ++q) {
        Int tq = cm.mats[static_cast<size_t>(q)].trace();
        t += (q % 2 == 0) ? tq : -tq;
    }
    return t;
}

Int homology_trace(const ChainMap& cm, int q) {
    if (!cm.is_endomorphism()) throw DomainError("homology trace requires an endomorphism");
    if (!verify_chain_map(cm)) throw DomainError("homology trace requires a chain map");
    if (q < 0 || q > cm.dom.top_dim()) return 0;
    const int nq = cm.dom.dim(q);
    if (nq == 0) return 0;
    const IntMatrix& f = cm.mats[static_cast<size_t>(q)];

    // Lattice basis of the cycles: the kernel columns of the Smith V.  Because V
    // is unimodular these columns extend to a basis of C_q, so the solve below
    // has an integral solution.
    SmithForm out = smith_normal_form(cm.dom.boundary[static_cast<size_t>(q)]);
    const int z = nq - out.rank;
    IntMatrix kernel(nq, z);
    for (int c = 0; c < z; ++c)
        for (int i = 0; i < nq; ++i) kernel.at(i, c) = out.v.at(i, out.rank + c);

    // Lattice basis of the boundaries: d * (first rank columns of V by the Smith
    // form of the incoming differential d), i.e. the diagonal multiples of the
    // U^{-1} columns.
    IntMatrix bnd(nq, 0);
    if (q < cm.dom.top_dim()) {
        const IntMatrix& d = cm.dom.boundary[static_cast<size_t>(q + 1)];
        SmithForm in = smith_normal_form(d);
        IntMatrix first(d.cols(), in.rank);
        for (int c = 0; c < in.rank; ++c)
            for (int i = 0; i < d.cols(); ++i) first.at(i, c) = in.v.at(i, c);
        bnd = d * first;
    }

    Rational t = 0;
    auto restricted_trace = [&f](const IntMatrix& basis) {
        auto x = solve_exact(basis, f * basis);
        Rational s = 0;
        for (size_t i = 0; i < x.size(); ++i) s += x[i][i];
        return s;
    };
    if (kernel.cols() > 0) t += restricted_trace(kernel);
    if (bnd.cols() > 0) t -= restricted_trace(bnd);
    if (denominator(t) != 1)
        throw InternalError("homology trace came out non-integral");
    return numerator(t);
}

Int alternating_homology_trace(const ChainMap& cm) {
    Int t = 0;
    for (int q = 0; q <= cm.dom.top_dim(); ++q) {
        Int tq = homology_trace(cm, q);
        t += (q % 2 == 0) ? tq : -tq;
    }
    return t;
}

bool hopf_trace_check(const ChainMap& cm) {
    return alternating_chain_trace(cm) == alternating_homology_trace(cm);
}

}  // namespace lefdt
