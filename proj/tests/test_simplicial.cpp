#include <algorithm>

#include "doctest.h"
#include "lefdt/errors.hpp"
#include "lefdt/fixtures.hpp"
#include "lefdt/simplicial.hpp"

using namespace lefdt;
using namespace lefdt::fixtures;

namespace {

std::vector<int> counts(const DigitalImage& img) {
    return build_simplicial_complex(img).chain.dims;
}

// Independent clique census: test every vertex subset for pairwise adjacency.
std::vector<int> naive_counts(const DigitalImage& img) {
    std::vector<int> out;
    const int n = img.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) vs.push_back(v);
        bool clique = true;
        for (size_t i = 0; i < vs.size() && clique; ++i)
            for (size_t j = i + 1; j < vs.size(); ++j)
                if (!img.adjacent(vs[i], vs[j])) {
                    clique = false;
                    break;
                }
        if (!clique) continue;
        if (out.size() < vs.size()) out.resize(vs.size(), 0);
        ++out[vs.size() - 1];
    }
    return out;
}

}  // namespace

TEST_CASE("clique complexes of the fixture images") {
    CHECK(counts(make_point()) == std::vector<int>{1});
    CHECK(counts(make_grid(3, 2)) == std::vector<int>{6, 7});
    CHECK(counts(make_grid(4, 2)) == std::vector<int>{8, 10});
    CHECK(counts(make_theta()) == std::vector<int>{13, 14});
    CHECK(counts(make_robot()) == std::vector<int>{40, 42});
    CHECK(counts(make_cycle(4).image) == std::vector<int>{4, 4});
    // The 3-cycle is a complete graph: one 2-simplex.
    CHECK(counts(make_cycle(3).image) == std::vector<int>{3, 3, 1});
    // c_2 on the unit square gives the full simplex on 4 vertices.
    DigitalImage k4 = DigitalImage::with_ct(2, make_hypercube(2).points(), 2);
    CHECK(counts(k4) == std::vector<int>{4, 6, 4, 1});
    CHECK(counts(DigitalImage()).empty());
}

TEST_CASE("c_1 images never have triangles") {
    // Two of three pairwise-adjacent points would have to differ in the same
    // single coordinate twice over; parity forbids it.
    for (const DigitalImage& img :
         {make_grid(3, 3), make_hypercube(3), make_hypercube(4), make_robot()})
        CHECK(build_simplicial_complex(img).top_dim() <= 1);
}

TEST_CASE("clique enumeration agrees with the subset census") {
    for (const DigitalImage& img :
         {make_cycle(6).image, make_hypercube(3), make_theta(),
          DigitalImage::with_ct(2, make_hypercube(2).points(), 2),
          DigitalImage::with_ct(3, make_hypercube(3).points(), 3)})
        CHECK(counts(img) == naive_counts(img));
}

TEST_CASE("cells are sorted and boundaries are incidence-signed") {
    SimplicialComplex c = build_simplicial_complex(make_grid(3, 2));
    for (const auto& level : c.cells) CHECK(std::is_sorted(level.begin(), level.end()));
    CHECK(c.cell_index({0, 1}) >= 0);
    CHECK(c.cell_index({0, 5}) == -1);
    CHECK(c.cell_index({}) == -1);

    for (const DigitalImage& img :
         {make_grid(3, 2), make_cycle(3).image, make_hypercube(3),
          DigitalImage::with_ct(2, make_hypercube(2).points(), 2)}) {
        SimplicialComplex cx = build_simplicial_complex(img);
        CHECK(cx.chain.boundaries_compose_to_zero());
        for (int q = 1; q <= cx.top_dim(); ++q) {
            const IntMatrix& d = cx.chain.boundary[static_cast<size_t>(q)];
            for (int j = 0; j < d.cols(); ++j) {
                int nonzero = 0;
                for (int i = 0; i < d.rows(); ++i) {
                    CHECK(abs(d.at(i, j)) <= 1);
                    nonzero += d.at(i, j) != 0;
                }
                // Every q-simplex has q+1 distinct facets.
                CHECK(nonzero == q + 1);
            }
        }
    }
}

TEST_CASE("homology of fixture clique complexes") {
    auto h = [](const DigitalImage& img) { return homology(build_simplicial_complex(img).chain); };
    CHECK(h(make_point()) == std::vector<HomologyGroup>{{1, {}}});
    // Two independent loops: the squares share the middle rung.
    CHECK(h(make_grid(3, 2)) == std::vector<HomologyGroup>{{1, {}}, {2, {}}});
    CHECK(h(make_grid(4, 2)) == std::vector<HomologyGroup>{{1, {}}, {3, {}}});
    CHECK(h(make_theta()) == std::vector<HomologyGroup>{{1, {}}, {2, {}}});
    // Feet squares plus the body ring.
    CHECK(h(make_robot()) == std::vector<HomologyGroup>{{1, {}}, {3, {}}});
    CHECK(h(make_cycle(8).image) == std::vector<HomologyGroup>{{1, {}}, {1, {}}});
    // Complete graphs are simplicially trivial.
    CHECK(h(make_cycle(3).image) ==
          std::vector<HomologyGroup>{{1, {}}, {0, {}}, {0, {}}});
    // Disconnected pair of points.
    CHECK(h(DigitalImage::with_ct(1, {{0}, {9}}, 1)) == std::vector<HomologyGroup>{{2, {}}});
}

TEST_CASE("induced chain maps: half-turns of the small grids") {
    // 3x2 grid: no fixed vertex, the middle rung flips onto itself.
    ChainMap r32 = simplicial_induced_chain_map(rot180_grid(3, 2));
    CHECK(r32.mats[0].trace() == 0);
    CHECK(r32.mats[1].trace() == -1);
    CHECK(alternating_chain_trace(r32) == 1);
    CHECK(homology_trace(r32, 0) == 1);
    CHECK(homology_trace(r32, 1) == 0);
    CHECK(hopf_trace_check(r32));

    // 4x2 grid: nothing is preserved at all.
    ChainMap r42 = simplicial_induced_chain_map(rot180_grid(4, 2));
    CHECK(r42.mats[0].trace() == 0);
    CHECK(r42.mats[1].trace() == 0);
    CHECK(alternating_chain_trace(r42) == 0);
    CHECK(hopf_trace_check(r42));

    // Theta image: the centre point alone is fixed.
    ChainMap rt = simplicial_induced_chain_map(rot180_theta());
    CHECK(rt.mats[0].trace() == 1);
    CHECK(rt.mats[1].trace() == 0);
    CHECK(alternating_chain_trace(rt) == 1);
    CHECK(hopf_trace_check(rt));
}

TEST_CASE("induced chain maps: cycles, constants, functoriality") {
    CycleFixture c8 = make_cycle(8);
    SimplicialComplex cx = build_simplicial_complex(c8.image);

    ChainMap rot = simplicial_induced_chain_map(cycle_rotation(c8, 1), cx, cx);
    CHECK(rot.mats[0].trace() == 0);
    CHECK(rot.mats[1].trace() == 0);
    CHECK(homology_trace(rot, 1) == 1);  // rotations preserve the loop

    ChainMap flip = simplicial_induced_chain_map(cycle_flip(c8), cx, cx);
    CHECK(flip.mats[0].trace() == 2);  // antipodes 0 and 4 stay put
    CHECK(flip.mats[1].trace() == 0);
    CHECK(homology_trace(flip, 1) == -1);  // the loop reverses
    CHECK(hopf_trace_check(flip));

    // A flip about an edge midpoint: i -> 1 - i fixes two edges, reversing both.
    std::vector<std::pair<Point, Point>> pr;
    for (int i = 0; i < 8; ++i) pr.emplace_back(Point{i}, Point{((1 - i) % 8 + 8) % 8});
    ChainMap edge_flip =
        simplicial_induced_chain_map(DigitalMap::from_pairs(c8.image, c8.image, pr), cx, cx);
    CHECK(edge_flip.mats[0].trace() == 0);
    CHECK(edge_flip.mats[1].trace() == -2);
    CHECK(alternating_chain_trace(edge_flip) == 2);
    CHECK(hopf_trace_check(edge_flip));

    ChainMap cst = simplicial_induced_chain_map(constant_map(c8.image, {3}), cx, cx);
    CHECK(cst.mats[0].trace() == 1);
    CHECK(cst.mats[1].is_zero());
    CHECK(alternating_chain_trace(cst) == 1);

    // Functoriality: the half-turn squares to the identity on chains.
    SimplicialComplex y = build_simplicial_complex(make_grid(3, 2));
    ChainMap r = simplicial_induced_chain_map(rot180_grid(3, 2), y, y);
    ChainMap rr = simplicial_induced_chain_map(
        compose(rot180_grid(3, 2), rot180_grid(3, 2)), y, y);
    for (int q = 0; q <= y.top_dim(); ++q)
        CHECK(rr.mats[static_cast<size_t>(q)] ==
              r.mats[static_cast<size_t>(q)] * r.mats[static_cast<size_t>(q)]);

    // Degree-0 trace counts fixed points, degree-1 counts signed fixed edges.
    CHECK(Int(static_cast<int>(fixed_points(cycle_flip(c8)).size())) == flip.mats[0].trace());
}

TEST_CASE("induced chain map rejects bad inputs") {
    CycleFixture c4 = make_cycle(4);
    DigitalMap bad(c4.image, c4.image, {0, 2, 0, 2});
    CHECK_THROWS_AS(simplicial_induced_chain_map(bad), DomainError);

    SimplicialComplex wrong = build_simplicial_complex(make_grid(3, 2));
    CHECK_THROWS_AS(simplicial_induced_chain_map(cycle_rotation(c4, 1), wrong, wrong), DomainError);
}
