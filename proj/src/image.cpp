#include "lefdt/image.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "lefdt/errors.hpp"

namespace lefdt {

std::string to_string(const Point& p) {
    std::ostringstream out;
    out << '(';
    for (size_t k = 0; k < p.size(); ++k) {
        if (k) out << ',';
        out << p[k];
    }
    out << ')';
    return out.str();
}

struct DigitalImage::Data {
    int dimension = 1;
    AdjacencyKind kind = AdjacencyKind::ct;
    int t = 1;
    std::vector<Point> points;
    std::vector<std::pair<int, int>> edges;      // i < j, sorted
    std::vector<std::vector<int>> neighbors;     // per point, index order
    std::vector<int> dist;                       // size*size geodesic table, -1 = unreachable

    // Neighbour lists and the all-pairs geodesic table from the edge list.
    void finish();
};

void DigitalImage::Data::finish() {
    const int n = static_cast<int>(points.size());
    std::sort(edges.begin(), edges.end());
    neighbors.assign(static_cast<size_t>(n), {});
    for (auto [i, j] : edges) {
        neighbors[static_cast<size_t>(i)].push_back(j);
        neighbors[static_cast<size_t>(j)].push_back(i);
    }
    for (auto& nb : neighbors) std::sort(nb.begin(), nb.end());

    dist.assign(static_cast<size_t>(n) * static_cast<size_t>(n), -1);
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        int* row = dist.data() + static_cast<size_t>(s) * static_cast<size_t>(n);
        row[s] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : neighbors[static_cast<size_t>(v)])
                if (row[w] < 0) {
                    row[w] = row[v] + 1;
                    queue.push_back(w);
                }
        }
    }
}

namespace {

bool ct_adjacent(const Point& p, const Point& q, int t) {
    int changed = 0;
    for (size_t k = 0; k < p.size(); ++k) {
        int d = p[k] - q[k];
        if (d == 0) continue;
        if (d != 1 && d != -1) return false;
        ++changed;
    }
    return changed >= 1 && changed <= t;
}

std::vector<Point> checked_sorted_points(int dimension, std::vector<Point> points) {
    if (dimension < 1) throw DomainError("image dimension must be at least 1");
    for (const Point& p : points)
        if (static_cast<int>(p.size()) != dimension)
            throw DomainError("point " + to_string(p) + " does not have the image dimension");
    std::sort(points.begin(), points.end());
    auto dup = std::adjacent_find(points.begin(), points.end());
    if (dup != points.end()) throw DomainError("duplicate point " + to_string(*dup));
    return points;
}

}  // namespace

DigitalImage::DigitalImage() : d_(std::make_shared<Data>()) {}

DigitalImage::DigitalImage(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

DigitalImage DigitalImage::with_ct(int dimension, std::vector<Point> points, int t) {
    auto d = std::make_shared<Data>();
    d->dimension = dimension;
    d->points = checked_sorted_points(dimension, std::move(points));
    if (t < 1 || t > dimension)
        throw DomainError("c_t adjacency requires 1 <= t <= dimension");
    d->kind = AdjacencyKind::ct;
    d->t = t;
    const int n = static_cast<int>(d->points.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (ct_adjacent(d->points[static_cast<size_t>(i)], d->points[static_cast<size_t>(j)], t))
                d->edges.emplace_back(i, j);
    d->finish();
    return DigitalImage(std::move(d));
}

DigitalImage DigitalImage::with_edges(int dimension, std::vector<Point> points,
                                      const std::vector<std::pair<Point, Point>>& edges) {
    auto d = std::make_shared<Data>();
    d->dimension = dimension;
    d->points = checked_sorted_points(dimension, std::move(points));
    d->kind = AdjacencyKind::explicit_edges;
    std::set<std::pair<int, int>> seen;
    for (const auto& [p, q] : edges) {
        auto ip = std::lower_bound(d->points.begin(), d->points.end(), p);
        auto iq = std::lower_bound(d->points.begin(), d->points.end(), q);
        if (ip == d->points.end() || *ip != p)
            throw DomainError("edge endpoint " + to_string(p) + " is not a point of the image");
        if (iq == d->points.end() || *iq != q)
            throw DomainError("edge endpoint " + to_string(q) + " is not a point of the image");
        int i = static_cast<int>(ip - d->points.begin());
        int j = static_cast<int>(iq - d->points.begin());
        if (i == j) throw DomainError("adjacency is irreflexive; self-edge at " + to_string(p));
        seen.emplace(std::min(i, j), std::max(i, j));
    }
    d->edges.assign(seen.begin(), seen.end());
    d->finish();
    return DigitalImage(std::move(d));
}

int DigitalImage::dimension() const { return d_->dimension; }
int DigitalImage::size() const { return static_cast<int>(d_->points.size()); }
const std::vector<Point>& DigitalImage::points() const { return d_->points; }
const Point& DigitalImage::point(int i) const { return d_->points.at(static_cast<size_t>(i)); }

std::optional<int> DigitalImage::index_of(const Point& p) const {
    auto it = std::lower_bound(d_->points.begin(), d_->points.end(), p);
    if (it == d_->points.end() || *it != p) return std::nullopt;
    return static_cast<int>(it - d_->points.begin());
}

bool DigitalImage::contains(const Point& p) const { return index_of(p).has_value(); }

AdjacencyKind DigitalImage::adjacency_kind() const { return d_->kind; }

int DigitalImage::ct() const {
    if (d_->kind != AdjacencyKind::ct)
        throw DomainError("image does not use c_t adjacency");
    return d_->t;
}

bool DigitalImage::adjacent(int i, int j) const {
    if (i == j) return false;
    const auto& nb = d_->neighbors.at(static_cast<size_t>(i));
    return std::binary_search(nb.begin(), nb.end(), j);
}

bool DigitalImage::adjacent(const Point& p, const Point& q) const {
    auto i = index_of(p), j = index_of(q);
    if (!i || !j)
        throw DomainError("adjacency query for a point outside the image");
    return adjacent(*i, *j);
}

bool DigitalImage::close(int i, int j) const { return i == j || adjacent(i, j); }

const std::vector<int>& DigitalImage::neighbors(int i) const {
    return d_->neighbors.at(static_cast<size_t>(i));
}

const std::vector<std::pair<int, int>>& DigitalImage::edges() const { return d_->edges; }

std::optional<int> DigitalImage::distance(int i, int j) const {
    int n = size();
    if (i < 0 || i >= n || j < 0 || j >= n)
        throw DomainError("distance query with out-of-range point index");
    int v = d_->dist[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)];
    if (v < 0) return std::nullopt;
    return v;
}

bool DigitalImage::is_connected() const {
    for (int j = 0; j < size(); ++j)
        if (!distance(0, j)) return false;
    return true;
}

DigitalImage DigitalImage::induced(const std::vector<int>& keep) const {
    std::vector<Point> pts;
    pts.reserve(keep.size());
    int prev = -1;
    for (int i : keep) {
        if (i <= prev) throw DomainError("induced sub-image indices must be strictly increasing");
        if (i >= size()) throw DomainError("induced sub-image index out of range");
        pts.push_back(point(i));
        prev = i;
    }
    if (d_->kind == AdjacencyKind::ct) return with_ct(dimension(), std::move(pts), d_->t);
    std::vector<std::pair<Point, Point>> edges;
    for (auto [i, j] : d_->edges)
        if (std::binary_search(keep.begin(), keep.end(), i) &&
            std::binary_search(keep.begin(), keep.end(), j))
            edges.emplace_back(point(i), point(j));
    return with_edges(dimension(), std::move(pts), edges);
}

bool DigitalImage::operator==(const DigitalImage& other) const {
    if (d_ == other.d_) return true;
    return d_->dimension == other.d_->dimension && d_->points == other.d_->points &&
           d_->edges == other.d_->edges;
}

DigitalMap::DigitalMap(DigitalImage domain, DigitalImage codomain, std::vector<int> assignment)
    : dom_(std::move(domain)), cod_(std::move(codomain)), assign_(std::move(assignment)) {
    if (static_cast<int>(assign_.size()) != dom_.size())
        throw DomainError("map assignment must cover every domain point exactly once");
    for (int v : assign_)
        if (v < 0 || v >= cod_.size())
            throw DomainError("map assignment hits an index outside the codomain");
}

DigitalMap DigitalMap::from_pairs(DigitalImage domain, DigitalImage codomain,
                                  const std::vector<std::pair<Point, Point>>& pairs) {
    std::vector<int> assign(static_cast<size_t>(domain.size()), -1);
    for (const auto& [p, q] : pairs) {
        auto i = domain.index_of(p);
        if (!i) throw DomainError("map assigns a value to " + to_string(p) + ", which is not a domain point");
        auto j = codomain.index_of(q);
        if (!j) throw DomainError("map value " + to_string(q) + " is not a codomain point");
        if (assign[static_cast<size_t>(*i)] != -1)
            throw DomainError("map assigns two values to " + to_string(p));
        assign[static_cast<size_t>(*i)] = *j;
    }
    for (size_t i = 0; i < assign.size(); ++i)
        if (assign[i] == -1)
            throw DomainError("map assigns no value to " + to_string(domain.point(static_cast<int>(i))));
    return DigitalMap(std::move(domain), std::move(codomain), std::move(assign));
}

Point DigitalMap::apply(const Point& p) const {
    auto i = dom_.index_of(p);
    if (!i) throw DomainError("map applied to " + to_string(p) + ", which is not a domain point");
    return cod_.point(apply(*i));
}

bool DigitalMap::operator==(const DigitalMap& other) const {
    return assign_ == other.assign_ && dom_ == other.dom_ && cod_ == other.cod_;
}

bool is_continuous(const DigitalMap& f) {
    for (auto [i, j] : f.domain().edges())
        if (!f.codomain().close(f.apply(i), f.apply(j))) return false;
    return true;
}

DigitalMap compose(const DigitalMap& f, const DigitalMap& g) {
    if (g.codomain() != f.domain())
        throw DomainError("compose(f, g) requires codomain of g == domain of f");
    std::vector<int> assign(g.assignment().size());
    for (size_t i = 0; i < assign.size(); ++i)
        assign[i] = f.apply(g.assignment()[i]);
    return DigitalMap(g.domain(), f.codomain(), std::move(assign));
}

DigitalMap identity_map(const DigitalImage& img) {
    std::vector<int> assign(static_cast<size_t>(img.size()));
    std::iota(assign.begin(), assign.end(), 0);
    return DigitalMap(img, img, std::move(assign));
}

DigitalMap constant_map(const DigitalImage& img, const Point& value) {
    auto j = img.index_of(value);
    if (!j) throw DomainError("constant map value " + to_string(value) + " is not in the image");
    return DigitalMap(img, img, std::vector<int>(static_cast<size_t>(img.size()), *j));
}

std::vector<Point> fixed_points(const DigitalMap& f) {
    if (!f.is_endomorphism()) throw DomainError("fixed points require domain == codomain");
    std::vector<Point> out;
    for (int i = 0; i < f.domain().size(); ++i)
        if (f.apply(i) == i) out.push_back(f.domain().point(i));
    return out;
}

std::vector<Point> approx_fixed_points(const DigitalMap& f, int n) {
    if (!f.is_endomorphism()) throw DomainError("approximate fixed points require domain == codomain");
    if (n < 0) throw DomainError("approximate fixed points require n >= 0");
    std::vector<Point> out;
    for (int i = 0; i < f.domain().size(); ++i) {
        auto d = f.domain().distance(i, f.apply(i));
        if (d && *d <= n) out.push_back(f.domain().point(i));
    }
    return out;
}

std::optional<int> geodesic_distance(const DigitalImage& img, const Point& p, const Point& q) {
    auto i = img.index_of(p), j = img.index_of(q);
    if (!i || !j) throw DomainError("geodesic distance query for a point outside the image");
    return img.distance(*i, *j);
}

bool is_path(const DigitalImage& img, const std::vector<Point>& vertices) {
    if (vertices.empty()) return false;
    std::vector<int> idx;
    for (const Point& p : vertices) {
        auto i = img.index_of(p);
        if (!i) return false;
        idx.push_back(*i);
    }
    for (size_t k = 0; k + 1 < idx.size(); ++k)
        if (!img.close(idx[k], idx[k + 1])) return false;
    return true;
}

bool np_adjacent(int u, const std::vector<DigitalImage>& factors,
                 const std::vector<Point>& a, const std::vector<Point>& b) {
    const int n = static_cast<int>(factors.size());
    if (n == 0) throw DomainError("normal product adjacency needs at least one factor");
    if (u < 1 || u > n) throw DomainError("normal product NP_u requires 1 <= u <= #factors");
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
        throw DomainError("normal product tuples must have one entry per factor");
    int adjacent_positions = 0;
    for (int k = 0; k < n; ++k) {
        const DigitalImage& X = factors[static_cast<size_t>(k)];
        auto i = X.index_of(a[static_cast<size_t>(k)]);
        auto j = X.index_of(b[static_cast<size_t>(k)]);
        if (!i || !j) throw DomainError("normal product tuple entry outside its factor image");
        if (*i == *j) continue;
        if (!X.adjacent(*i, *j)) return false;
        ++adjacent_positions;
    }
    return adjacent_positions >= 1 && adjacent_positions <= u;
}

}  // namespace lefdt
