#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lefdt {

// A lattice point in Z^n.  Comparison is std::vector's lexicographic order; that
// order is canonical throughout (point indexing, cell bases, enumeration order).
using Point = std::vector<int>;

std::string to_string(const Point& p);

enum class AdjacencyKind { ct, explicit_edges };

// A finite digital image (X, kappa): a finite subset of Z^n together with a
// symmetric irreflexive adjacency relation.  Supported presentations:
//   - c_t family: p, q adjacent iff p != q, every coordinate differs by at most 1,
//     and at most t coordinates differ (1 <= t <= n);
//   - an explicit edge list on the point set.
// Instances are immutable; copies share state and are cheap.  Points are stored
// sorted; the index of a point in that order is its canonical id.
class DigitalImage {
public:
    // Empty image in Z^dimension with c_1 adjacency (vacuously).
    DigitalImage();

    static DigitalImage with_ct(int dimension, std::vector<Point> points, int t);
    static DigitalImage with_edges(int dimension, std::vector<Point> points,
                                   const std::vector<std::pair<Point, Point>>& edges);

    int dimension() const;
    int size() const;
    const std::vector<Point>& points() const;
    const Point& point(int i) const;
    std::optional<int> index_of(const Point& p) const;
    bool contains(const Point& p) const;

    AdjacencyKind adjacency_kind() const;
    // Valid only when adjacency_kind() == ct.
    int ct() const;

    bool adjacent(int i, int j) const;
    bool adjacent(const Point& p, const Point& q) const;
    // "close": adjacent or equal.
    bool close(int i, int j) const;
    // Adjacent neighbours of point i, in index order.
    const std::vector<int>& neighbors(int i) const;
    // Edge list as index pairs (i, j) with i < j, sorted.
    const std::vector<std::pair<int, int>>& edges() const;

    // Geodesic distance: length of a shortest sequence of adjacency steps.
    // nullopt when p, q lie in different connected components.
    std::optional<int> distance(int i, int j) const;
    bool is_connected() const;

    // Sub-image on the given point indices (sorted, no duplicates).  A c_t image
    // keeps c_t; an explicit one keeps the surviving edges.
    DigitalImage induced(const std::vector<int>& keep) const;

    // Structural equality of (X, kappa): same ambient dimension, same point set,
    // same adjacency relation.  Presentation (c_1 vs an equal explicit list) is
    // not distinguished.
    bool operator==(const DigitalImage& other) const;
    bool operator!=(const DigitalImage& other) const { return !(*this == other); }

private:
    struct Data;
    std::shared_ptr<const Data> d_;
    explicit DigitalImage(std::shared_ptr<const Data> d);
};

// A function between the point sets of two digital images, stored as
// domain index -> codomain index.  Not necessarily continuous.
class DigitalMap {
public:
    DigitalMap(DigitalImage domain, DigitalImage codomain, std::vector<int> assignment);
    static DigitalMap from_pairs(DigitalImage domain, DigitalImage codomain,
                                 const std::vector<std::pair<Point, Point>>& pairs);

    const DigitalImage& domain() const { return dom_; }
    const DigitalImage& codomain() const { return cod_; }
    const std::vector<int>& assignment() const { return assign_; }

    int apply(int i) const { return assign_[static_cast<size_t>(i)]; }
    Point apply(const Point& p) const;

    // Self-map in the structural sense: domain == codomain.
    bool is_endomorphism() const { return dom_ == cod_; }

    bool operator==(const DigitalMap& other) const;
    bool operator!=(const DigitalMap& other) const { return !(*this == other); }

private:
    DigitalImage dom_, cod_;
    std::vector<int> assign_;
};

// Digital continuity: adjacent points map to close points.
bool is_continuous(const DigitalMap& f);

// f after g; requires g's codomain == f's domain.
DigitalMap compose(const DigitalMap& f, const DigitalMap& g);

DigitalMap identity_map(const DigitalImage& img);
DigitalMap constant_map(const DigitalImage& img, const Point& value);

// Fixed points of an endomorphism, in canonical order.
std::vector<Point> fixed_points(const DigitalMap& f);

// n-approximate fixed points: x with distance(x, f(x)) <= n.  Requires n >= 0;
// unreachable pairs never qualify.
std::vector<Point> approx_fixed_points(const DigitalMap& f, int n);

std::optional<int> geodesic_distance(const DigitalImage& img, const Point& p, const Point& q);

// True when vertices is nonempty, each vertex lies in img, and consecutive
// vertices are close (a path may pause).
bool is_path(const DigitalImage& img, const std::vector<Point>& vertices);

// Normal-product adjacency NP_u on a product of images: tuples a, b are adjacent
// iff a != b, every position is close, and at most u positions are adjacent.
bool np_adjacent(int u, const std::vector<DigitalImage>& factors,
                 const std::vector<Point>& a, const std::vector<Point>& b);

}  // namespace lefdt
