#pragma once

#include <vector>

#include "lefdt/image.hpp"

// In-repo fixture corpus: the small images and self-maps every test suite and the
// `verify` command run against.  All are built here rather than loaded from disk so
// the binaries are location-independent; the JSON files under data/fixtures mirror
// these and a test keeps the two in sync.

namespace lefdt::fixtures {

// Single point (0) in Z^1.
DigitalImage make_point();

// Digital interval [a, b] in Z^1 with c_1; requires a < b.
DigitalImage make_interval(int a, int b);

// Full grid [0, w) x [0, h) in Z^2 with c_1; requires w, h >= 1.
DigitalImage make_grid(int w, int h);

// Unit hypercube {0,1}^n with c_1; requires 1 <= n.
DigitalImage make_hypercube(int n);

// A cycle image plus its traversal order (order[i] adjacent to order[i +- 1 mod n]);
// the order defines the rotation and flip self-maps below.
struct CycleFixture {
    DigitalImage image;
    std::vector<Point> order;
};

// Abstract n-cycle: points (0)..(n-1) in Z^1, explicit edges i -- i+1 mod n.
// Requires n >= 3.
CycleFixture make_cycle(int n);

// An n-cycle realised with c_1 adjacency: n = 4 is the unit square, n = 6 a hexagon
// in Z^3, even n >= 8 the perimeter of an (n-2)/2 x 3 grid.  Odd n >= 5 has no c_1
// realisation (grid graphs are bipartite) and is rejected.
CycleFixture make_cycle_embedded(int n);

// Theta-shaped image: perimeter of the 5 x 3 grid plus the centre point (2,1),
// 13 points, two independent loops.
DigitalImage make_theta();

// Robot-shaped image in Z^2 (40 points): two legs with square feet, a body ring,
// and two arms.
DigitalImage make_robot();

// Point reflections (x, y) -> (max - x, max - y) of the fixtures above.
DigitalMap rot180_grid(int w, int h);
DigitalMap rot180_theta();

// order[i] -> order[i + k mod n].
DigitalMap cycle_rotation(const CycleFixture& c, int k);
// order[i] -> order[n - i mod n].
DigitalMap cycle_flip(const CycleFixture& c);

// p -> (1,...,1) - p on the unit hypercube.
DigitalMap antipodal(int n);

}  // namespace lefdt::fixtures
