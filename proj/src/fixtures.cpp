#include "lefdt/fixtures.hpp"

#include <utility>

#include "lefdt/errors.hpp"

namespace lefdt::fixtures {

namespace {

// Map each point p of img to move(p).
DigitalMap pointwise(const DigitalImage& img, Point (*move)(const Point&)) {
    std::vector<std::pair<Point, Point>> pairs;
    for (const Point& p : img.points()) pairs.emplace_back(p, move(p));
    return DigitalMap::from_pairs(img, img, pairs);
}

}  // namespace

DigitalImage make_point() { return DigitalImage::with_ct(1, {{0}}, 1); }

DigitalImage make_interval(int a, int b) {
    if (a >= b) throw DomainError("a digital interval [a, b] requires a < b");
    std::vector<Point> pts;
    for (int x = a; x <= b; ++x) pts.push_back({x});
    return DigitalImage::with_ct(1, std::move(pts), 1);
}

DigitalImage make_grid(int w, int h) {
    if (w < 1 || h < 1) throw DomainError("grid sides must be at least 1");
    std::vector<Point> pts;
    for (int x = 0; x < w; ++x)
        for (int y = 0; y < h; ++y) pts.push_back({x, y});
    return DigitalImage::with_ct(2, std::move(pts), 1);
}

DigitalImage make_hypercube(int n) {
    if (n < 1) throw DomainError("hypercube dimension must be at least 1");
    std::vector<Point> pts;
    for (int mask = 0; mask < (1 << n); ++mask) {
        Point p(static_cast<size_t>(n));
        for (int k = 0; k < n; ++k) p[static_cast<size_t>(k)] = (mask >> k) & 1;
        pts.push_back(std::move(p));
    }
    return DigitalImage::with_ct(n, std::move(pts), 1);
}

CycleFixture make_cycle(int n) {
    if (n < 3) throw DomainError("a cycle needs at least 3 points");
    std::vector<Point> pts, order;
    std::vector<std::pair<Point, Point>> edges;
    for (int i = 0; i < n; ++i) {
        pts.push_back({i});
        order.push_back({i});
        edges.emplace_back(Point{i}, Point{(i + 1) % n});
    }
    return {DigitalImage::with_edges(1, std::move(pts), edges), std::move(order)};
}

CycleFixture make_cycle_embedded(int n) {
    std::vector<Point> order;
    int dimension = 2;
    if (n == 4) {
        order = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    } else if (n == 6) {
        dimension = 3;
        order = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {0, 1, 1}, {0, 0, 1}};
    } else if (n >= 8 && n % 2 == 0) {
        int a = (n - 4) / 2;  // perimeter of [0, a] x [0, 2] has 2a + 4 = n points
        for (int x = 0; x <= a; ++x) order.push_back({x, 0});
        order.push_back({a, 1});
        for (int x = a; x >= 0; --x) order.push_back({x, 2});
        order.push_back({0, 1});
    } else {
        throw DomainError("no c_1 cycle realisation for n = " + std::to_string(n) +
                          " (grid graphs are bipartite, so odd cycles never embed)");
    }
    return {DigitalImage::with_ct(dimension, order, 1), std::move(order)};
}

DigitalImage make_theta() {
    std::vector<Point> pts = {{2, 1}};
    for (int x = 0; x <= 4; ++x) {
        pts.push_back({x, 0});
        pts.push_back({x, 2});
    }
    pts.push_back({0, 1});
    pts.push_back({4, 1});
    return DigitalImage::with_ct(2, std::move(pts), 1);
}

DigitalImage make_robot() {
    // Rows of x-coordinates per y; the shape: feet y=1..2, legs y=3..4, body ring
    // y=5..7 with arms at x=1 and x=10, antennae at y=8.
    const std::vector<std::pair<int, std::vector<int>>> rows = {
        {1, {3, 4, 7, 8}},
        {2, {3, 4, 7, 8}},
        {3, {1, 4, 7, 10}},
        {4, {1, 4, 7, 10}},
        {5, {1, 3, 4, 5, 6, 7, 8, 10}},
        {6, {1, 2, 3, 8, 9, 10}},
        {7, {1, 3, 4, 5, 6, 7, 8, 10}},
        {8, {1, 10}},
    };
    std::vector<Point> pts;
    for (const auto& [y, xs] : rows)
        for (int x : xs) pts.push_back({x, y});
    return DigitalImage::with_ct(2, std::move(pts), 1);
}

DigitalMap rot180_grid(int w, int h) {
    DigitalImage g = make_grid(w, h);
    std::vector<std::pair<Point, Point>> pairs;
    for (const Point& p : g.points())
        pairs.emplace_back(p, Point{w - 1 - p[0], h - 1 - p[1]});
    return DigitalMap::from_pairs(g, g, pairs);
}

DigitalMap rot180_theta() {
    return pointwise(make_theta(), [](const Point& p) { return Point{4 - p[0], 2 - p[1]}; });
}

DigitalMap cycle_rotation(const CycleFixture& c, int k) {
    const int n = static_cast<int>(c.order.size());
    std::vector<std::pair<Point, Point>> pairs;
    for (int i = 0; i < n; ++i)
        pairs.emplace_back(c.order[static_cast<size_t>(i)],
                           c.order[static_cast<size_t>(((i + k) % n + n) % n)]);
    return DigitalMap::from_pairs(c.image, c.image, pairs);
}

DigitalMap cycle_flip(const CycleFixture& c) {
    const int n = static_cast<int>(c.order.size());
    std::vector<std::pair<Point, Point>> pairs;
    for (int i = 0; i < n; ++i)
        pairs.emplace_back(c.order[static_cast<size_t>(i)],
                           c.order[static_cast<size_t>((n - i) % n)]);
    return DigitalMap::from_pairs(c.image, c.image, pairs);
}

DigitalMap antipodal(int n) {
    DigitalImage cube = make_hypercube(n);
    std::vector<std::pair<Point, Point>> pairs;
    for (const Point& p : cube.points()) {
        Point q = p;
        for (int& c : q) c = 1 - c;
        pairs.emplace_back(p, std::move(q));
    }
    return DigitalMap::from_pairs(cube, cube, pairs);
}

}  // namespace lefdt::fixtures
