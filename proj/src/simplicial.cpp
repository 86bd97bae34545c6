#include "lefdt/simplicial.hpp"

#include <algorithm>

#include "lefdt/errors.hpp"

namespace lefdt {

namespace {

// Depth-first clique growth by ascending vertex id; visits cliques in
// lexicographic order, so each cells[q] comes out sorted.
void grow(const DigitalImage& img, Simplex& cur, const std::vector<int>& frontier,
          std::vector<std::vector<Simplex>>& cells) {
    size_t q = cur.size() - 1;
    if (cells.size() <= q) cells.resize(q + 1);
    cells[q].push_back(cur);
    for (size_t k = 0; k < frontier.size(); ++k) {
        int w = frontier[k];
        std::vector<int> next;
        for (size_t l = k + 1; l < frontier.size(); ++l)
            if (img.adjacent(w, frontier[l])) next.push_back(frontier[l]);
        cur.push_back(w);
        grow(img, cur, next, cells);
        cur.pop_back();
    }
}

}  // namespace

int SimplicialComplex::cell_index(const Simplex& s) const {
    if (s.empty()) return -1;
    size_t q = s.size() - 1;
    if (q >= cells.size()) return -1;
    auto it = std::lower_bound(cells[q].begin(), cells[q].end(), s);
    if (it == cells[q].end() || *it != s) return -1;
    return static_cast<int>(it - cells[q].begin());
}

SimplicialComplex build_simplicial_complex(const DigitalImage& img) {
    SimplicialComplex c{img, {}, {}};
    Simplex cur;
    for (int v = 0; v < img.size(); ++v) {
        const std::vector<int>& nb = img.neighbors(v);
        std::vector<int> frontier(std::upper_bound(nb.begin(), nb.end(), v), nb.end());
        cur.assign(1, v);
        grow(img, cur, frontier, c.cells);
    }

    for (const auto& level : c.cells) c.chain.dims.push_back(static_cast<int>(level.size()));
    for (size_t q = 0; q < c.cells.size(); ++q) {
        c.chain.boundary.emplace_back(q == 0 ? 0 : c.chain.dims[q - 1], c.chain.dims[q]);
        if (q == 0) continue;
        IntMatrix& d = c.chain.boundary[q];
        for (size_t col = 0; col < c.cells[q].size(); ++col) {
            Simplex face = c.cells[q][col];
            for (size_t i = 0; i <= q; ++i) {
                int v = face[i];
                face.erase(face.begin() + static_cast<long>(i));
                int row = c.cell_index(face);
                if (row < 0) throw InternalError("simplex face missing from the complex");
                d.at(row, static_cast<int>(col)) += (i % 2 == 0) ? 1 : -1;
                face.insert(face.begin() + static_cast<long>(i), v);
            }
        }
    }
    if (!c.chain.boundaries_compose_to_zero())
        throw InternalError("simplicial boundaries do not square to zero");
    return c;
}

std::pair<Simplex, int> simplicial_cell_image(const DigitalMap& f, const Simplex& s) {
    Simplex image(s.size());
    for (size_t i = 0; i < s.size(); ++i) image[i] = f.apply(s[i]);
    // Parity of the sort; a repeated vertex collapses the simplex to 0.
    int inversions = 0;
    for (size_t i = 0; i < image.size(); ++i)
        for (size_t j = i + 1; j < image.size(); ++j) {
            if (image[i] == image[j]) return {{}, 0};
            if (image[i] > image[j]) ++inversions;
        }
    std::sort(image.begin(), image.end());
    return {std::move(image), (inversions % 2 == 0) ? 1 : -1};
}

ChainMap simplicial_induced_chain_map(const DigitalMap& f, const SimplicialComplex& dom,
                                      const SimplicialComplex& cod) {
    if (dom.image != f.domain() || cod.image != f.codomain())
        throw DomainError("complexes do not belong to the map's images");
    if (!is_continuous(f))
        throw DomainError("induced chain maps exist only for continuous maps");

    ChainMap cm{dom.chain, cod.chain, {}};
    for (int q = 0; q <= dom.top_dim(); ++q) {
        IntMatrix m(cod.chain.dim(q), dom.chain.dim(q));
        for (size_t col = 0; col < dom.cells[static_cast<size_t>(q)].size(); ++col) {
            auto [image, sign] = simplicial_cell_image(f, dom.cells[static_cast<size_t>(q)][col]);
            if (sign == 0) continue;
            int row = cod.cell_index(image);
            if (row < 0)
                throw InternalError("image of a simplex is not a simplex of the codomain");
            m.at(row, static_cast<int>(col)) = sign;
        }
        cm.mats.push_back(std::move(m));
    }
    if (!verify_chain_map(cm))
        throw InternalError("induced simplicial map fails the chain-map identity");
    return cm;
}

ChainMap simplicial_induced_chain_map(const DigitalMap& f) {
    SimplicialComplex dom = build_simplicial_complex(f.domain());
    if (f.domain() == f.codomain()) return simplicial_induced_chain_map(f, dom, dom);
    return simplicial_induced_chain_map(f, dom, build_simplicial_complex(f.codomain()));
}

}  // namespace lefdt
