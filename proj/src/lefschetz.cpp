#include "lefdt/lefschetz.hpp"

#include <algorithm>

#include "lefdt/errors.hpp"

namespace lefdt {

std::string to_string(Theory t) {
    return t == Theory::simplicial ? "simplicial" : "cubical";
}

namespace {

void require_self_map(const DigitalMap& f) {
    if (!f.is_endomorphism())
        throw DomainError("Lefschetz computations require a self-map");
    if (!is_continuous(f))
        throw DomainError("Lefschetz computations require a continuous map");
}

std::vector<FixedCell> simplicial_fixed_cells(const DigitalMap& f, const SimplicialComplex& c) {
    std::vector<FixedCell> out;
    for (int q = 0; q <= c.top_dim(); ++q)
        for (const Simplex& s : c.cells[static_cast<size_t>(q)]) {
            auto [image, sign] = simplicial_cell_image(f, s);
            if (sign == 0 || image != s) continue;
            FixedCell fc{q, {}, sign};
            for (int v : s) fc.vertices.push_back(c.image.point(v));
            out.push_back(std::move(fc));
        }
    return out;
}

std::vector<FixedCell> cubical_fixed_cells(const DigitalMap& f, const CubicalComplex& c) {
    std::vector<FixedCell> out;
    for (int q = 0; q <= c.top_dim(); ++q)
        for (const Cube& cube : c.cells[static_cast<size_t>(q)]) {
            auto [image, sign] = cubical_cell_image(f, cube);
            if (sign == 0 || image != cube) continue;
            FixedCell fc{q, cube.vertices(), sign};
            std::sort(fc.vertices.begin(), fc.vertices.end());
            out.push_back(std::move(fc));
        }
    return out;
}

// Assemble the report from an induced chain map already verified upstream.
LefschetzReport finish_report(Theory theory, const ChainMap& cm,
                              std::vector<FixedCell> cells, std::vector<Point> witnesses) {
    LefschetzReport r;
    r.theory = theory;
    r.fixed_cells = std::move(cells);
    r.afp_witnesses = std::move(witnesses);
    Int homology_value = 0;
    for (int q = 0; q <= cm.dom.top_dim(); ++q) {
        r.chain_traces.push_back(cm.mat(q).trace());
        r.homology_traces.push_back(homology_trace(cm, q));
        r.value += (q % 2 == 0) ? r.chain_traces.back() : -r.chain_traces.back();
        homology_value += (q % 2 == 0) ? r.homology_traces.back() : -r.homology_traces.back();
    }
    if (r.value != homology_value)
        throw InternalError("chain-level and homology-level Lefschetz values disagree");
    Int contributing = 0;
    for (const FixedCell& fc : r.fixed_cells) contributing += fc.sign != 0 ? 1 : 0;
    if (abs(r.value) > contributing)
        throw InternalError("Lefschetz value exceeds its fixed-cell bound");
    return r;
}

}  // namespace

LefschetzReport simplicial_lefschetz(const DigitalMap& f) {
    require_self_map(f);
    SimplicialComplex c = build_simplicial_complex(f.domain());
    ChainMap cm = simplicial_induced_chain_map(f, c, c);
    return finish_report(Theory::simplicial, cm, simplicial_fixed_cells(f, c),
                         approx_fixed_points(f, 1));
}

LefschetzReport cubical_lefschetz(const DigitalMap& f, bool allow_high_dimension) {
    require_self_map(f);
    CubicalComplex c = build_cubical_complex(f.domain(), allow_high_dimension);
    ChainMap cm = cubical_induced_chain_map(f, c, c);
    return finish_report(Theory::cubical, cm, cubical_fixed_cells(f, c),
                         approx_fixed_points(f, f.domain().dimension()));
}

namespace {

Int checked_euler(const ChainComplexData& chain) {
    Int chi = chain.euler_characteristic();
    Int via_betti = 0;
    std::vector<HomologyGroup> h = homology(chain);
    for (size_t q = 0; q < h.size(); ++q)
        via_betti += (q % 2 == 0) ? h[q].betti : -h[q].betti;
    if (chi != via_betti)
        throw InternalError("Euler characteristic disagrees with the betti sum");
    return chi;
}

}  // namespace

Int simplicial_euler(const DigitalImage& img) {
    return checked_euler(build_simplicial_complex(img).chain);
}

Int cubical_euler(const DigitalImage& img) {
    // No induced map is involved, so the ambient-dimension cap does not apply.
    return checked_euler(build_cubical_complex(img, true).chain);
}

std::vector<FixedCell> fixed_cells(const DigitalMap& f, Theory theory,
                                   bool allow_high_dimension) {
    require_self_map(f);
    if (theory == Theory::simplicial)
        return simplicial_fixed_cells(f, build_simplicial_complex(f.domain()));
    return cubical_fixed_cells(f, build_cubical_complex(f.domain(), allow_high_dimension));
}

bool afp_lower_bound_check(const DigitalMap& f, Theory theory, bool allow_high_dimension) {
    LefschetzReport r = theory == Theory::simplicial
                            ? simplicial_lefschetz(f)
                            : cubical_lefschetz(f, allow_high_dimension);
    return abs(r.value) <= Int(r.afp_witnesses.size()) &&
           abs(r.value) <= Int(f.domain().size());
}

Int fast_simplicial_lefschetz(const DigitalMap& f, const SimplicialComplex& c) {
    Int value = 0;
    for (int q = 0; q <= c.top_dim(); ++q)
        for (const Simplex& s : c.cells[static_cast<size_t>(q)]) {
            auto [image, sign] = simplicial_cell_image(f, s);
            if (sign == 0 || image != s) continue;
            value += (q % 2 == 0) ? sign : -sign;
        }
    return value;
}

Int fast_cubical_lefschetz(const DigitalMap& f, const CubicalComplex& c) {
    Int value = 0;
    for (int q = 0; q <= c.top_dim(); ++q)
        for (const Cube& cube : c.cells[static_cast<size_t>(q)]) {
            auto [image, sign] = cubical_cell_image(f, cube);
            if (sign == 0 || image != cube) continue;
            value += (q % 2 == 0) ? sign : -sign;
        }
    return value;
}

}  // namespace lefdt
