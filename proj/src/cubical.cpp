#include "lefdt/cubical.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "lefdt/errors.hpp"

namespace lefdt {

int Cube::dim() const {
    int d = 0;
    for (const auto& iv : intervals) d += (iv.second != iv.first);
    return d;
}

std::vector<int> Cube::directions() const {
    std::vector<int> dirs;
    for (size_t k = 0; k < intervals.size(); ++k)
        if (intervals[k].second != intervals[k].first) dirs.push_back(static_cast<int>(k));
    return dirs;
}

Point Cube::corner(std::uint32_t mask) const {
    Point p(intervals.size());
    int bit = 0;
    for (size_t k = 0; k < intervals.size(); ++k) {
        if (intervals[k].second != intervals[k].first)
            p[k] = ((mask >> bit++) & 1u) ? intervals[k].second : intervals[k].first;
        else
            p[k] = intervals[k].first;
    }
    return p;
}

std::vector<Point> Cube::vertices() const {
    const std::uint32_t n = 1u << dim();
    std::vector<Point> v;
    v.reserve(n);
    for (std::uint32_t mask = 0; mask < n; ++mask) v.push_back(corner(mask));
    return v;
}

std::string to_string(const Cube& c) {
    std::ostringstream out;
    for (size_t k = 0; k < c.intervals.size(); ++k) {
        if (k) out << "x";
        out << "[" << c.intervals[k].first << "," << c.intervals[k].second << "]";
    }
    return out.str();
}

Cube front_face(const Cube& c, int i) {
    std::vector<int> dirs = c.directions();
    if (i < 0 || i >= static_cast<int>(dirs.size()))
        throw DomainError("face index out of range");
    Cube r = c;
    auto& iv = r.intervals[static_cast<size_t>(dirs[static_cast<size_t>(i)])];
    iv.second = iv.first;
    return r;
}

Cube back_face(const Cube& c, int i) {
    std::vector<int> dirs = c.directions();
    if (i < 0 || i >= static_cast<int>(dirs.size()))
        throw DomainError("face index out of range");
    Cube r = c;
    auto& iv = r.intervals[static_cast<size_t>(dirs[static_cast<size_t>(i)])];
    iv.first = iv.second;
    return r;
}

int CubicalComplex::cell_index(int q, const Cube& c) const {
    if (q < 0 || q >= static_cast<int>(cells.size())) return -1;
    const auto& level = cells[static_cast<size_t>(q)];
    auto it = std::lower_bound(level.begin(), level.end(), c);
    if (it == level.end() || *it != c) return -1;
    return static_cast<int>(it - level.begin());
}

CubicalComplex build_cubical_complex(const DigitalImage& img, bool allow_high_dimension) {
    if (img.adjacency_kind() != AdjacencyKind::ct || img.ct() != 1)
        throw DomainError("cubical homology is defined for c_1 adjacency only");
    if (img.dimension() > 4 && !allow_high_dimension)
        throw DomainError(
            "induced cubical maps are only established up to ambient dimension 4; "
            "enable the high-dimension override to proceed at your own risk");
    if (img.dimension() > 25)
        throw DomainError("ambient dimension too large for cubical enumeration");

    CubicalComplex c{img, {}, {}};
    const int n = img.dimension();
    // Each cube is found once, from its minimal corner and its direction set.
    for (int v = 0; v < img.size(); ++v) {
        const Point& base = img.point(v);
        for (std::uint32_t s = 0; s < (1u << n); ++s) {
            Cube cube;
            cube.intervals.reserve(static_cast<size_t>(n));
            for (int k = 0; k < n; ++k)
                cube.intervals.emplace_back(base[static_cast<size_t>(k)],
                                            base[static_cast<size_t>(k)] +
                                                static_cast<int>((s >> k) & 1u));
            const int q = std::popcount(s);
            bool complete = true;
            for (std::uint32_t mask = 1; complete && mask < (1u << q); ++mask)
                complete = img.contains(cube.corner(mask));
            if (!complete) continue;
            if (static_cast<int>(c.cells.size()) <= q) c.cells.resize(static_cast<size_t>(q) + 1);
            c.cells[static_cast<size_t>(q)].push_back(std::move(cube));
        }
    }
    for (auto& level : c.cells) std::sort(level.begin(), level.end());

    for (const auto& level : c.cells) c.chain.dims.push_back(static_cast<int>(level.size()));
    for (size_t q = 0; q < c.cells.size(); ++q) {
        c.chain.boundary.emplace_back(q == 0 ? 0 : c.chain.dims[q - 1], c.chain.dims[q]);
        if (q == 0) continue;
        IntMatrix& d = c.chain.boundary[q];
        for (size_t col = 0; col < c.cells[q].size(); ++col) {
            const Cube& cube = c.cells[q][col];
            // Sum over directions of (-1)^i (front - back), i counted from 1.
            for (int i = 0; i < static_cast<int>(q); ++i) {
                int sgn = (i % 2 == 0) ? -1 : 1;
                int fr = c.cell_index(static_cast<int>(q) - 1, front_face(cube, i));
                int br = c.cell_index(static_cast<int>(q) - 1, back_face(cube, i));
                if (fr < 0 || br < 0) throw InternalError("cube face missing from the complex");
                d.at(fr, static_cast<int>(col)) += sgn;
                d.at(br, static_cast<int>(col)) -= sgn;
            }
        }
    }
    if (!c.chain.boundaries_compose_to_zero())
        throw InternalError("cubical boundaries do not square to zero");
    return c;
}

namespace {

// When the corner images of a q-cube fill the corners of a q-cube tau, f acts
// on them as a signed permutation of directions.  Derive that permutation from
// the moves off the minimal corner, check every corner against it, and return
// its sign: permutation parity times (-1) per direction reversal.
int signed_permutation_sign(const DigitalMap& f, const Cube& sigma, const Cube& tau) {
    const std::vector<int> tdirs = tau.directions();
    const int q = sigma.dim();
    const Point w0 = f.apply(sigma.corner(0));
    std::vector<int> pos(static_cast<size_t>(q), -1);
    std::vector<bool> rev(static_cast<size_t>(q), false), used(static_cast<size_t>(q), false);
    for (int i = 0; i < q; ++i) {
        const Point wi = f.apply(sigma.corner(1u << i));
        int coord = -1, delta = 0;
        for (size_t k = 0; k < w0.size(); ++k) {
            if (wi[k] == w0[k]) continue;
            if (coord >= 0) throw InternalError("cube image move changes several coordinates");
            coord = static_cast<int>(k);
            delta = wi[k] - w0[k];
        }
        auto it = std::find(tdirs.begin(), tdirs.end(), coord);
        if (coord < 0 || (delta != 1 && delta != -1) || it == tdirs.end())
            throw InternalError("cube image move is not a unit step");
        const size_t p = static_cast<size_t>(it - tdirs.begin());
        if (used[p]) throw InternalError("cube image reuses a direction");
        used[p] = true;
        pos[static_cast<size_t>(i)] = static_cast<int>(p);
        rev[static_cast<size_t>(i)] = delta < 0;
    }
    for (std::uint32_t mask = 0; mask < (1u << q); ++mask) {
        Point predicted(tau.intervals.size());
        for (size_t k = 0; k < tau.intervals.size(); ++k) predicted[k] = tau.intervals[k].first;
        for (int i = 0; i < q; ++i) {
            const int k = tdirs[static_cast<size_t>(pos[static_cast<size_t>(i)])];
            const bool hi = ((mask >> i) & 1u) != static_cast<unsigned>(rev[static_cast<size_t>(i)]);
            predicted[static_cast<size_t>(k)] = hi ? tau.intervals[static_cast<size_t>(k)].second
                                                   : tau.intervals[static_cast<size_t>(k)].first;
        }
        if (f.apply(sigma.corner(mask)) != predicted)
            throw InternalError("cube image is not a signed direction permutation");
    }
    int swaps = 0;
    for (int i = 0; i < q; ++i) {
        swaps += rev[static_cast<size_t>(i)] ? 1 : 0;
        for (int j = i + 1; j < q; ++j)
            swaps += pos[static_cast<size_t>(i)] > pos[static_cast<size_t>(j)] ? 1 : 0;
    }
    return (swaps % 2 == 0) ? 1 : -1;
}

}  // namespace

std::pair<Cube, int> cubical_cell_image(const DigitalMap& f, const Cube& sigma) {
    const int q = sigma.dim();
    std::vector<Point> images;
    images.reserve(1u << q);
    for (std::uint32_t mask = 0; mask < (1u << q); ++mask)
        images.push_back(f.apply(sigma.corner(mask)));
    // Bounding box of the corner images; a span above 1 in any coordinate
    // means they fit no elementary cube.
    Cube tau;
    tau.intervals.reserve(images[0].size());
    for (size_t k = 0; k < images[0].size(); ++k) {
        int lo = images[0][k], hi = lo;
        for (const Point& w : images) {
            lo = std::min(lo, w[k]);
            hi = std::max(hi, w[k]);
        }
        if (hi - lo > 1) return {{}, 0};
        tau.intervals.emplace_back(lo, hi);
    }
    // The cube carries a signed generator only when its corner images are
    // exactly the corners of an equal-dimensional tau; every collapse (lower
    // box, spread, or a proper corner subset) is 0, the unique value
    // compatible with the chain-map identity.
    if (tau.dim() != q) return {{}, 0};
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    if (images.size() != (1u << q)) return {{}, 0};
    int sign = signed_permutation_sign(f, sigma, tau);
    return {std::move(tau), sign};
}

ChainMap cubical_induced_chain_map(const DigitalMap& f, const CubicalComplex& dom,
                                   const CubicalComplex& cod) {
    if (dom.image != f.domain() || cod.image != f.codomain())
        throw DomainError("complexes do not belong to the map's images");
    if (!is_continuous(f))
        throw DomainError("induced chain maps exist only for continuous maps");

    ChainMap cm{dom.chain, cod.chain, {}};
    for (int q = 0; q <= dom.top_dim(); ++q) {
        IntMatrix m(cod.chain.dim(q), dom.chain.dim(q));
        for (size_t col = 0; col < dom.cells[static_cast<size_t>(q)].size(); ++col) {
            auto [tau, sign] = cubical_cell_image(f, dom.cells[static_cast<size_t>(q)][col]);
            if (sign == 0) continue;
            int row = cod.cell_index(q, tau);
            if (row < 0) throw InternalError("image cube missing from the codomain complex");
            m.at(row, static_cast<int>(col)) = sign;
        }
        cm.mats.push_back(std::move(m));
    }
    if (!verify_chain_map(cm))
        throw InternalError("induced cubical map fails the chain-map identity");
    return cm;
}

ChainMap cubical_induced_chain_map(const DigitalMap& f, bool allow_high_dimension) {
    CubicalComplex dom = build_cubical_complex(f.domain(), allow_high_dimension);
    if (f.domain() == f.codomain()) return cubical_induced_chain_map(f, dom, dom);
    return cubical_induced_chain_map(f, dom, build_cubical_complex(f.codomain(), allow_high_dimension));
}

}  // namespace lefdt
