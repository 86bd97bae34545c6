#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "lefdt/homalg.hpp"
#include "lefdt/image.hpp"

namespace lefdt {

// Elementary cube: a product of n intervals, each either degenerate [a,a] or
// unit [a,a+1].  Stored as (lo, hi) pairs with hi == lo or hi == lo + 1.
// Dimension = number of non-degenerate factors.
struct Cube {
    std::vector<std::pair<int, int>> intervals;

    int ambient_dimension() const { return static_cast<int>(intervals.size()); }
    int dim() const;
    // Ambient coordinate indices of the non-degenerate factors, increasing.
    std::vector<int> directions() const;
    // The 2^dim() corner points, each of size ambient_dimension().
    std::vector<Point> vertices() const;
    // Corner selected by bitmask over directions(): bit i set = take hi in
    // direction i, else lo.
    Point corner(std::uint32_t mask) const;

    auto operator<=>(const Cube&) const = default;
};

std::string to_string(const Cube& c);

// Face operators: the cube with the i-th non-degenerate direction collapsed
// to its minimum (front) or maximum (back).  i indexes directions(), 0-based.
Cube front_face(const Cube& c, int i);
Cube back_face(const Cube& c, int i);

// All elementary cubes whose corners all lie in the image, grouped by
// dimension and sorted within each.  Requires c_1 adjacency: the complex is
// only meaningful when 1-cubes coincide with adjacency edges.  Ambient
// dimension above 4 is refused unless allow_high_dimension is set, because
// the chain-map property of induced maps is only established up to 4.
struct CubicalComplex {
    DigitalImage image;
    std::vector<std::vector<Cube>> cells;  // cells[q] = q-cubes
    ChainComplexData chain;

    int top_dim() const { return static_cast<int>(cells.size()) - 1; }
    // Index of the cube among cells[q], or -1 if absent.
    int cell_index(int q, const Cube& c) const;
};

CubicalComplex build_cubical_complex(const DigitalImage& image,
                                     bool allow_high_dimension = false);

// The signed image of one cube: the elementary cube spanned by the corner
// images together with the signed-permutation sign, or sign 0 (cube
// unspecified) when the corner images do not fill the corners of an
// equal-dimensional cube.
std::pair<Cube, int> cubical_cell_image(const DigitalMap& f, const Cube& sigma);

// Chain map induced by a continuous f on cubical chains: a q-cube maps to
// the elementary cube spanned by the images of its corners, signed by the
// direction permutation and the number of direction reversals, or to 0 when
// the image set spans fewer than q dimensions.  The chain-map identity
// against the boundary operators is always verified.
ChainMap cubical_induced_chain_map(const DigitalMap& f, const CubicalComplex& dom,
                                   const CubicalComplex& cod);
ChainMap cubical_induced_chain_map(const DigitalMap& f,
                                   bool allow_high_dimension = false);

}  // namespace lefdt
