#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace lefdt {

// All homological arithmetic is exact: arbitrary-precision integers, and exact
// rationals for basis-change solves.  Intermediate Smith-reduction entries can
// far exceed any fixed-width type even for small complexes.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Dense row-major matrix over Z.  Complexes here have at most a few hundred
// cells, so clarity wins over sparsity.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}
    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return a_[idx(i, j)]; }
    const Int& at(int i, int j) const { return a_[idx(i, j)]; }

    IntMatrix operator*(const IntMatrix& other) const;
    bool operator==(const IntMatrix& other) const = default;
    Int trace() const;
    bool is_zero() const;

private:
    size_t idx(int i, int j) const {
        return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
    }
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// Which entry of the working submatrix becomes the next pivot.  Both rules yield
// the same invariant factors (tested); exposing the choice keeps that checkable.
enum class PivotRule { min_abs, first_nonzero };

// s = u * m * v with u, v unimodular, s diagonal with nonnegative entries in a
// divisibility chain d1 | d2 | ... The factorisation, the chain, and
// unimodularity are re-verified after computation.
struct SmithForm {
    IntMatrix u, s, v;
    int rank = 0;
    // Nonzero diagonal entries, ascending.
    std::vector<Int> invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& m, PivotRule rule = PivotRule::min_abs);

// Rank over Q by fraction-free elimination: an independent cross-check of the
// Smith rank.
int rank(const IntMatrix& m);

// Bareiss determinant; square matrices only.
Int determinant(const IntMatrix& m);

// Solve a * x = b exactly over Q; requires the columns of a to be linearly
// independent and the system consistent.
std::vector<std::vector<Rational>> solve_exact(const IntMatrix& a, const IntMatrix& b);

// A bounded chain complex of free Z-modules.  dims[q] counts degree-q
// generators; boundary[q] maps C_q -> C_{q-1} and boundary[0] has zero rows.
// An empty complex has empty dims.
struct ChainComplexData {
    std::vector<int> dims;
    std::vector<IntMatrix> boundary;

    int top_dim() const { return static_cast<int>(dims.size()) - 1; }
    int dim(int q) const {
        return (q < 0 || q > top_dim()) ? 0 : dims[static_cast<size_t>(q)];
    }
    // Shape consistency; throws DomainError if violated.
    void validate() const;
    bool boundaries_compose_to_zero() const;
    // Alternating sum of generator counts.
    Int euler_characteristic() const;

    bool operator==(const ChainComplexData& other) const = default;
};

struct HomologyGroup {
    int betti = 0;
    std::vector<Int> torsion;  // invariant factors > 1, ascending divisibility

    bool operator==(const HomologyGroup& other) const = default;
};

// Homology in every degree 0..top_dim.
std::vector<HomologyGroup> homology(const ChainComplexData& c);

// A degreewise map of chain complexes; mats[q] : dom C_q -> cod C_q.  Carries
// value copies of both complexes so verification is self-contained.
struct ChainMap {
    ChainComplexData dom, cod;
    std::vector<IntMatrix> mats;

    bool is_endomorphism() const { return dom == cod; }
    const IntMatrix& mat(int q) const;
};

// Commutation with the boundaries: mats[q-1] * dom.boundary[q] ==
// cod.boundary[q] * mats[q] in every positive degree, plus shape agreement.
bool verify_chain_map(const ChainMap& cm);

// Sum over q of (-1)^q trace(mats[q]); endomorphisms only.
Int alternating_chain_trace(const ChainMap& cm);

// Trace of the induced endomorphism of H_q modulo torsion (equivalently of
// H_q tensor Q).  Computed as trace on cycles minus trace on boundaries, in
// lattice bases extracted from Smith forms; both solves are exact and the
// result is provably an integer.
Int homology_trace(const ChainMap& cm, int q);

Int alternating_homology_trace(const ChainMap& cm);

// The two alternating trace sums agree for every chain endomorphism; recomputes
// both sides and compares.
bool hopf_trace_check(const ChainMap& cm);

}  // namespace lefdt
