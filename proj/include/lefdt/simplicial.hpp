#pragma once

#include <utility>
#include <vector>

#include "lefdt/homalg.hpp"
#include "lefdt/image.hpp"

namespace lefdt {

// A q-simplex of a digital image: q+1 pairwise adjacent points, stored as
// strictly increasing point indices.
using Simplex = std::vector<int>;

// The clique complex: every set of mutually adjacent points spans a simplex.
// cells[q] is lexicographically sorted and indexes the degree-q chain basis;
// boundary of <x_0,...,x_q> is the usual alternating sum over omitted vertices.
struct SimplicialComplex {
    DigitalImage image;
    std::vector<std::vector<Simplex>> cells;
    ChainComplexData chain;

    int top_dim() const { return chain.top_dim(); }
    // Index of a strictly increasing vertex list within its degree, -1 if absent.
    int cell_index(const Simplex& s) const;
};

SimplicialComplex build_simplicial_complex(const DigitalImage& img);

// The signed image of one simplex: the sorted image vertex list together with
// the parity sign of the sort, or sign 0 (list unspecified) when two vertices
// collide.  Vertex ids refer to f's codomain.
std::pair<Simplex, int> simplicial_cell_image(const DigitalMap& f, const Simplex& s);

// Chain map induced by a continuous map: a simplex goes to the simplex spanned
// by its image vertex set, signed by the parity of the sort, or to zero when
// vertices collide.  The chain-map identity is re-verified on construction.
ChainMap simplicial_induced_chain_map(const DigitalMap& f, const SimplicialComplex& dom,
                                      const SimplicialComplex& cod);
ChainMap simplicial_induced_chain_map(const DigitalMap& f);

}  // namespace lefdt
