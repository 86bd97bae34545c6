#pragma once

#include <string>
#include <vector>

#include "lefdt/cubical.hpp"
#include "lefdt/homalg.hpp"
#include "lefdt/image.hpp"
#include "lefdt/simplicial.hpp"

namespace lefdt {

// Which complex a Lefschetz-type computation runs over: the clique complex of
// the adjacency (any adjacency) or the elementary-cube complex (c_1 only).
enum class Theory { simplicial, cubical };

std::string to_string(Theory t);

// A cell mapped onto itself as a set, with its diagonal sign: +1 when f
// restricted to the cell is orientation-preserving, -1 when reversing.
struct FixedCell {
    int dim = 0;
    std::vector<Point> vertices;  // sorted vertex (corner) points
    int sign = 0;

    bool operator==(const FixedCell&) const = default;
};

// Full audit record of one Lefschetz computation.  The value is the
// alternating sum of the chain traces; the homology traces recompute it
// independently (the two sums agreeing is the Hopf trace formula, and a
// disagreement is an internal error).  Witnesses are the approximate fixed
// points guaranteed by a nonzero value: 1-approximate for the simplicial
// theory, n-approximate (n = ambient dimension) for the cubical one.
struct LefschetzReport {
    Theory theory = Theory::simplicial;
    Int value = 0;
    std::vector<Int> chain_traces;
    std::vector<Int> homology_traces;
    std::vector<FixedCell> fixed_cells;
    std::vector<Point> afp_witnesses;
};

// Lefschetz number over the clique complex.  Requires a continuous self-map;
// the empty image yields value 0 by convention.
LefschetzReport simplicial_lefschetz(const DigitalMap& f);

// Lefschetz number over the cube complex; cubical-module guards apply
// (c_1 adjacency, ambient dimension <= 4 unless overridden).
LefschetzReport cubical_lefschetz(const DigitalMap& f, bool allow_high_dimension = false);

// Alternating sum of chain dimensions; equals the alternating sum of betti
// numbers, and that equality is recomputed and enforced on every call.  The
// cubical form requires c_1 but has no ambient dimension cap: no induced map
// is involved.
Int simplicial_euler(const DigitalImage& img);
Int cubical_euler(const DigitalImage& img);

// All cells whose vertex set maps onto itself, ordered by dimension and then
// by the complex's cell order within a dimension.
std::vector<FixedCell> fixed_cells(const DigitalMap& f, Theory theory,
                                   bool allow_high_dimension = false);

// The approximate-fixed-point guarantee of the Lefschetz value: |L| never
// exceeds the count of witnesses in the report, nor the point count.  True on
// every continuous self-map (it is a theorem); exposed so it can be audited.
bool afp_lower_bound_check(const DigitalMap& f, Theory theory,
                           bool allow_high_dimension = false);

// Chain-level Lefschetz value from diagonal entries alone, against prebuilt
// complexes; no matrices are formed.  This is what spectrum scans call per
// enumerated map, where full reports would dominate the budget.
Int fast_simplicial_lefschetz(const DigitalMap& f, const SimplicialComplex& c);
Int fast_cubical_lefschetz(const DigitalMap& f, const CubicalComplex& c);

}  // namespace lefdt
