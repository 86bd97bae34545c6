#include <random>

#include "doctest.h"
#include "lefdt/errors.hpp"
#include "lefdt/homalg.hpp"

using namespace lefdt;

namespace {

IntMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    int nr = static_cast<int>(rows.size());
    int nc = nr ? static_cast<int>(rows[0].size()) : 0;
    IntMatrix m(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return m;
}

std::vector<Int> diag_of(const SmithForm& f) { return f.invariant_factors(); }

// Path complex 0-1-2-...-(n-1): n vertices, n-1 edges, boundary e_i = v_{i+1} - v_i.
ChainComplexData path_complex(int n) {
    ChainComplexData c;
    c.dims = {n, n - 1};
    c.boundary = {IntMatrix(0, n), IntMatrix(n, n - 1)};
    for (int e = 0; e + 1 < n; ++e) {
        c.boundary[1].at(e, e) = -1;
        c.boundary[1].at(e + 1, e) = 1;
    }
    return c;
}

// Cycle complex on n vertices; last edge runs v_{n-1} -> v_0.
ChainComplexData cycle_complex(int n) {
    ChainComplexData c;
    c.dims = {n, n};
    c.boundary = {IntMatrix(0, n), IntMatrix(n, n)};
    for (int e = 0; e < n; ++e) {
        c.boundary[1].at(e, e) = -1;
        c.boundary[1].at((e + 1) % n, e) = 1;
    }
    return c;
}

ChainMap identity_chain_map(const ChainComplexData& c) {
    ChainMap cm{c, c, {}};
    for (int d : c.dims) cm.mats.push_back(IntMatrix::identity(d));
    return cm;
}

IntMatrix random_matrix(std::mt19937& rng, int nr, int nc, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> entry(lo, hi);
    IntMatrix m(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) m.at(i, j) = entry(rng);
    return m;
}

}  // namespace

TEST_CASE("Smith normal form on pinned examples") {
    CHECK(diag_of(smith_normal_form(IntMatrix(2, 3))) == std::vector<Int>{});
    CHECK(diag_of(smith_normal_form(from_rows({{2}}))) == std::vector<Int>{2});
    CHECK(diag_of(smith_normal_form(IntMatrix::identity(2))) == std::vector<Int>{1, 1});
    // gcd of entries 2, product of factors |det| = 8.
    CHECK(diag_of(smith_normal_form(from_rows({{2, 4}, {6, 8}}))) == std::vector<Int>{2, 4});
    // Coprime diagonal folds into a single nontrivial factor.
    CHECK(diag_of(smith_normal_form(from_rows({{2, 0}, {0, 3}}))) == std::vector<Int>{1, 6});
    CHECK(diag_of(smith_normal_form(from_rows({{2, 1}, {1, 2}}))) == std::vector<Int>{1, 3});

    // Incidence matrix of the 4-cycle: totally unimodular, rank 3.
    IntMatrix d1 = from_rows({{-1, 0, 0, -1}, {1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, 1}});
    SmithForm f = smith_normal_form(d1);
    CHECK(f.rank == 3);
    CHECK(diag_of(f) == std::vector<Int>{1, 1, 1});
    CHECK(f.s.at(3, 3) == 0);
}

TEST_CASE("Smith invariant factors do not depend on the pivot rule") {
    std::mt19937 rng(20260816);
    for (int trial = 0; trial < 60; ++trial) {
        int nr = 1 + trial % 6, nc = 1 + (trial / 2) % 6;
        IntMatrix m = random_matrix(rng, nr, nc);
        SmithForm a = smith_normal_form(m, PivotRule::min_abs);
        SmithForm b = smith_normal_form(m, PivotRule::first_nonzero);
        CHECK(a.rank == b.rank);
        CHECK(a.invariant_factors() == b.invariant_factors());
        // Fraction-free elimination agrees on the rank.
        CHECK(rank(m) == a.rank);
    }
}

TEST_CASE("determinant") {
    CHECK(determinant(from_rows({{2, 4}, {6, 8}})) == -8);
    CHECK(determinant(IntMatrix::identity(3)) == 1);
    CHECK(determinant(from_rows({{1, 2}, {2, 4}})) == 0);
    CHECK(determinant(IntMatrix(0, 0)) == 1);
    CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), DomainError);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 1 + trial % 5;
        IntMatrix a = random_matrix(rng, n, n), b = random_matrix(rng, n, n);
        CHECK(determinant(a * b) == determinant(a) * determinant(b));
        // |det| is the product of the invariant factors when nonsingular.
        Int d = determinant(a);
        if (d != 0) {
            Int prod = 1;
            for (const Int& x : smith_normal_form(a).invariant_factors()) prod *= x;
            CHECK(prod == abs(d));
        }
    }
}

TEST_CASE("exact rational solve") {
    auto x = solve_exact(from_rows({{2, 0}, {0, 3}}), from_rows({{1}, {1}}));
    CHECK(x[0][0] == Rational(1, 2));
    CHECK(x[1][0] == Rational(1, 3));

    // Consistent overdetermined system.
    auto y = solve_exact(from_rows({{1, 0}, {0, 1}, {1, 1}}), from_rows({{2}, {3}, {5}}));
    CHECK(y[0][0] == 2);
    CHECK(y[1][0] == 3);

    CHECK_THROWS_AS(solve_exact(from_rows({{1, 0}, {0, 1}, {1, 1}}), from_rows({{2}, {3}, {6}})),
                    InternalError);
    CHECK_THROWS_AS(solve_exact(from_rows({{1, 2}, {2, 4}}), from_rows({{1}, {2}})), InternalError);
}

TEST_CASE("homology of small complexes") {
    ChainComplexData point{{1}, {IntMatrix(0, 1)}};
    auto hp = homology(point);
    REQUIRE(hp.size() == 1);
    CHECK(hp[0] == HomologyGroup{1, {}});

    auto hpath = homology(path_complex(4));
    CHECK(hpath[0] == HomologyGroup{1, {}});
    CHECK(hpath[1] == HomologyGroup{0, {}});

    auto hcyc = homology(cycle_complex(8));
    CHECK(hcyc[0] == HomologyGroup{1, {}});
    CHECK(hcyc[1] == HomologyGroup{1, {}});

    // One generator killed twice over: torsion Z/2.
    ChainComplexData mod2{{1, 1}, {IntMatrix(0, 1), from_rows({{2}})}};
    auto hm = homology(mod2);
    CHECK(hm[0] == HomologyGroup{0, {2}});
    CHECK(hm[1] == HomologyGroup{0, {}});

    CHECK(homology(ChainComplexData{}).empty());
    CHECK(cycle_complex(8).boundaries_compose_to_zero());
    CHECK(cycle_complex(8).euler_characteristic() == 0);
    CHECK(path_complex(4).euler_characteristic() == 1);

    ChainComplexData bad{{2, 1}, {IntMatrix(0, 2), IntMatrix(3, 1)}};
    CHECK_THROWS_AS(homology(bad), DomainError);
}

TEST_CASE("chain map verification and traces") {
    // Fold the path 0-1-2 onto its first edge: 0,1 fixed, 2 -> 0.
    ChainComplexData path = path_complex(3);
    ChainMap fold{path, path,
                  {from_rows({{1, 0, 1}, {0, 1, 0}, {0, 0, 0}}), from_rows({{1, -1}, {0, 0}})}};
    CHECK(verify_chain_map(fold));
    CHECK(alternating_chain_trace(fold) == 1);
    CHECK(homology_trace(fold, 0) == 1);
    CHECK(homology_trace(fold, 1) == 0);
    CHECK(alternating_homology_trace(fold) == 1);
    CHECK(hopf_trace_check(fold));

    // Corrupt one sign: the boundary square stops commuting.
    ChainMap broken = fold;
    broken.mats[1].at(0, 1) = 1;
    CHECK_FALSE(verify_chain_map(broken));
    CHECK_THROWS_AS(homology_trace(broken, 0), DomainError);

    ChainComplexData cyc = cycle_complex(8);
    ChainMap id = identity_chain_map(cyc);
    CHECK(verify_chain_map(id));
    CHECK(alternating_chain_trace(id) == cyc.euler_characteristic());
    CHECK(homology_trace(id, 0) == 1);
    CHECK(homology_trace(id, 1) == 1);
    CHECK(hopf_trace_check(id));

    // Collapse everything to vertex 0.
    ChainMap collapse{cyc, cyc, {IntMatrix(8, 8), IntMatrix(8, 8)}};
    for (int j = 0; j < 8; ++j) collapse.mats[0].at(0, j) = 1;
    CHECK(verify_chain_map(collapse));
    CHECK(homology_trace(collapse, 0) == 1);
    CHECK(homology_trace(collapse, 1) == 0);
    CHECK(hopf_trace_check(collapse));

    // A map between different complexes (projection of the path to a point).
    ChainComplexData point{{1}, {IntMatrix(0, 1)}};
    ChainMap proj{path, point, {from_rows({{1, 1, 1}}), IntMatrix(0, 2)}};
    CHECK(verify_chain_map(proj));
    CHECK_THROWS_AS(alternating_chain_trace(proj), DomainError);

    // Empty complex edge case.
    ChainMap empty{ChainComplexData{}, ChainComplexData{}, {}};
    CHECK(verify_chain_map(empty));
    CHECK(alternating_chain_trace(empty) == 0);
    CHECK(hopf_trace_check(empty));
}

TEST_CASE("homology trace sees orientation reversal") {
    // Reflect the 8-cycle: vertex i -> -i mod 8.  The loop generator maps to its
    // negative, so the degree-1 trace is -1.
    ChainComplexData cyc = cycle_complex(8);
    ChainMap flip{cyc, cyc, {IntMatrix(8, 8), IntMatrix(8, 8)}};
    for (int i = 0; i < 8; ++i) flip.mats[0].at((8 - i) % 8, i) = 1;
    // Edge e_i = (i, i+1) maps to (-i, -i-1) traversed backwards: -e_{7-i}.
    for (int e = 0; e < 8; ++e) flip.mats[1].at(7 - e, e) = -1;
    REQUIRE(verify_chain_map(flip));
    CHECK(homology_trace(flip, 0) == 1);
    CHECK(homology_trace(flip, 1) == -1);
    CHECK(hopf_trace_check(flip));
    CHECK(alternating_chain_trace(flip) == 2);
}
